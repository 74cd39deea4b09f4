#include "fxgy/representations.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "fxgy/error.hpp"

namespace fxgy {

namespace {

std::uint64_t isqrt_u64(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

void check_bound(std::uint64_t M) {
  if (M == 0) throw Error(ErrorCode::InvalidInput, "M must be positive");
  if (M > kFactorizeBound) throw Error(ErrorCode::FactorizationOverflow, "M exceeds 10^12");
}

void sort_desc(std::vector<RepPair>& v) {
  std::sort(v.begin(), v.end(), [](const RepPair& a, const RepPair& b) {
    return a.x != b.x ? a.x > b.x : a.y > b.y;
  });
}

// Solutions x >= y >= 0 of the form; `coprime` adds x > y > 0, gcd = 1.
std::vector<RepPair> scan(std::uint64_t M, QuadForm form, bool coprime) {
  std::vector<RepPair> out;
  const auto m = static_cast<std::int64_t>(M);
  for (std::int64_t y = coprime ? 1 : 0;; ++y) {
    std::int64_t x = 0;
    if (form == QuadForm::SumSquares) {
      if (2 * y * y > m) break;
      auto r = static_cast<std::uint64_t>(m - y * y);
      auto s = static_cast<std::int64_t>(isqrt_u64(r));
      if (static_cast<std::uint64_t>(s * s) != r) continue;
      x = s;
    } else {
      if (3 * y * y > m) break;
      // x = (-y + sqrt(4M - 3y^2)) / 2
      auto disc = static_cast<std::uint64_t>(4 * m - 3 * y * y);
      auto s = static_cast<std::int64_t>(isqrt_u64(disc));
      if (static_cast<std::uint64_t>(s * s) != disc || (s - y) % 2 != 0) continue;
      x = (s - y) / 2;
    }
    if (x < y) continue;
    if (coprime && (x == y || std::gcd(x, y) != 1)) continue;
    out.push_back({x, y, form});
  }
  sort_desc(out);
  return out;
}

std::vector<RepPair> restricted(std::uint64_t M, QuadForm form) {
  if (M <= kFactorizeBound && !is_admissible(M, form)) {
    std::string want = form == QuadForm::SumSquares ? "1 mod 4" : "1 mod 6";
    throw Error(ErrorCode::BadModulusClass,
                "M = " + std::to_string(M) + " is not a squarefree product of primes " + want);
  }
  check_bound(M);
  return scan(M, form, true);
}

}  // namespace

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
  check_bound(n);
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::string_view form_name(QuadForm form) { return form == QuadForm::SumSquares ? "sq" : "hex"; }

QuadForm parse_form(std::string_view text) {
  if (text == "sq") return QuadForm::SumSquares;
  if (text == "hex") return QuadForm::Hex;
  throw Error(ErrorCode::InvalidInput, "form must be 'sq' or 'hex', got '" + std::string(text) + "'");
}

std::int64_t form_value(QuadForm form, std::int64_t x, std::int64_t y) {
  return form == QuadForm::SumSquares ? x * x + y * y : x * x + x * y + y * y;
}

bool is_admissible(std::uint64_t M, QuadForm form) {
  if (M < 2 || M > kFactorizeBound) return false;
  const std::uint64_t mod = form == QuadForm::SumSquares ? 4 : 6;
  for (auto [p, e] : factorize(M)) {
    if (e != 1 || p % mod != 1) return false;
  }
  return true;
}

int prime_count(std::uint64_t M) { return static_cast<int>(factorize(M).size()); }

std::vector<RepPair> reps_sum_two_squares(std::uint64_t M) { return restricted(M, QuadForm::SumSquares); }

std::vector<RepPair> reps_hex_form(std::uint64_t M) { return restricted(M, QuadForm::Hex); }

std::vector<RepPair> reps_unrestricted(std::uint64_t M, QuadForm form) {
  if (M == 0 || M > kFactorizeBound) throw Error(ErrorCode::InvalidInput, "M must lie in [1, 10^12]");
  return scan(M, form, false);
}

}  // namespace fxgy
