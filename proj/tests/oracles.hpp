#pragma once

// Slow, direct reference implementations used to cross-check the library.
// Each one avoids the algorithm it is checking.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "fxgy/blocks.hpp"
#include "fxgy/pell.hpp"
#include "fxgy/poly.hpp"
#include "fxgy/representations.hpp"
#include "fxgy/roots.hpp"

namespace oracle {

using fxgy::BigInt;
using fxgy::Poly;
using fxgy::Rational;

inline std::vector<BigInt> positive_divisors(BigInt n) {
  if (n < 0) n = -n;
  std::vector<BigInt> small, large;
  for (BigInt d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

/// Rational roots with multiplicity by testing every +-d/e with d | a0 and
/// e | an (rational root theorem). Only sensible for small coefficients.
inline std::vector<Rational> rational_roots(const Poly& p) {
  std::vector<Rational> out;
  Poly rest = p;
  while (rest.degree() >= 1 && rest.coeff(0).is_zero()) {
    out.emplace_back(0);
    rest = fxgy::exact_div(rest, Poly::x());
  }
  if (rest.degree() >= 1) {
    auto ints = fxgy::primitive_integer_coeffs(rest);
    for (const auto& d : positive_divisors(ints.front())) {
      for (const auto& e : positive_divisors(ints.back())) {
        if (fxgy::gcd(d, e) != 1) continue;
        for (int sgn : {1, -1}) {
          Rational r(BigInt(sgn * d), e);
          while (rest.degree() >= 1) {
            auto [q, rem] = fxgy::divmod(rest, Poly{-r, Rational(1)});
            if (!rem.is_zero()) break;
            out.push_back(r);
            rest = q;
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// lc^(2n-2) prod_{i<j} (r_i - r_j)^2 over the full root list.
inline Rational discriminant_from_roots(const Rational& lc, const std::vector<Rational>& roots) {
  const int n = static_cast<int>(roots.size());
  Rational acc = fxgy::pow(lc, 2 * n - 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Rational d = roots[static_cast<size_t>(i)] - roots[static_cast<size_t>(j)];
      acc *= d * d;
    }
  }
  return acc;
}

/// D_0 = 2, D_1 = x, D_n = x D_(n-1) - delta D_(n-2).
inline Poly dickson(int mu, const Rational& delta) {
  Poly d0 = Poly::constant(2);
  Poly d1 = Poly::x();
  if (mu == 0) return d0;
  for (int i = 2; i <= mu; ++i) {
    Poly next = Poly::x() * d1 - d0 * delta;
    d0 = std::move(d1);
    d1 = std::move(next);
  }
  return d1;
}

/// Number of coprime x > y > 0 with form(x, y) = M, for every M <= limit,
/// by a double loop over (x, y).
inline std::vector<int> rep_count_table(std::int64_t limit, fxgy::QuadForm form) {
  std::vector<int> count(static_cast<size_t>(limit) + 1, 0);
  for (std::int64_t y = 1; fxgy::form_value(form, y + 1, y) <= limit; ++y) {
    for (std::int64_t x = y + 1;; ++x) {
      std::int64_t v = fxgy::form_value(form, x, y);
      if (v > limit) break;
      if (std::gcd(x, y) == 1) ++count[static_cast<size_t>(v)];
    }
  }
  return count;
}

/// Coprime x > y > 0 with form(x, y) = M, descending x, by a double loop.
inline std::vector<std::pair<std::int64_t, std::int64_t>> reps(std::int64_t M, fxgy::QuadForm form) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t x = 1; fxgy::form_value(form, x, 0) <= M; ++x) {
    for (std::int64_t y = 1; y < x; ++y) {
      if (fxgy::form_value(form, x, y) == M && std::gcd(x, y) == 1) out.emplace_back(x, y);
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

/// Squarefree with every prime 1 mod 4 (sq) or 1 mod 6 (hex), M >= 2.
inline bool admissible(std::int64_t M, fxgy::QuadForm form) {
  if (M < 2) return false;
  const std::int64_t mod = form == fxgy::QuadForm::SumSquares ? 4 : 6;
  for (std::int64_t p = 2; p * p <= M; ++p) {
    if (M % p != 0) continue;
    M /= p;
    if (M % p == 0 || p % mod != 1) return false;
  }
  return M == 1 || M % mod == 1;
}

inline int distinct_primes(std::int64_t M) {
  int rho = 0;
  for (std::int64_t p = 2; p * p <= M; ++p) {
    if (M % p != 0) continue;
    ++rho;
    while (M % p == 0) M /= p;
  }
  return rho + (M > 1 ? 1 : 0);
}

/// Points of x^2 - D y^2 = N with |y| <= bound, sorted by (|y|, y, x).
inline std::vector<fxgy::IntPair> pell_points(long D, long N, long bound) {
  std::vector<fxgy::IntPair> out;
  for (long ay = 0; ay <= bound; ++ay) {
    for (long y : {-ay, ay}) {
      if (ay == 0 && y != 0) continue;
      BigInt rhs = BigInt(N) + BigInt(D) * y * y;
      if (rhs < 0) continue;
      BigInt x = fxgy::isqrt(rhs);
      if (x * x != rhs) continue;
      if (x != 0) out.emplace_back(BigInt(-x), BigInt(y));
      out.emplace_back(x, BigInt(y));
      if (ay == 0) break;
    }
  }
  return out;
}

/// Sorted chosen sets; start in [1, max_start], span <= N, size in [lo, hi].
inline std::vector<std::vector<std::int64_t>> spanned_sets(int N, int max_start, int hi) {
  std::vector<std::vector<std::int64_t>> out;
  for (std::int64_t s = 1; s <= max_start; ++s) {
    for (unsigned mask = 0; mask < (1u << (N - 1)); ++mask) {
      std::vector<std::int64_t> set{s};
      for (int i = 0; i < N - 1; ++i) {
        if (mask & (1u << i)) set.push_back(s + 1 + i);
      }
      if (static_cast<int>(set.size()) <= hi) out.push_back(std::move(set));
    }
  }
  return out;
}

struct BlockKey {
  std::vector<std::int64_t> a, b;
  friend auto operator<=>(const BlockKey&, const BlockKey&) = default;
};

/// Every (A, B) pair by comparing all products pairwise.
inline std::vector<BlockKey> block_products(int N, int max_start, int k_max, int l_max) {
  auto sets = spanned_sets(N, max_start, l_max);
  std::vector<BlockKey> out;
  for (const auto& a : sets) {
    if (static_cast<int>(a.size()) > k_max) continue;
    for (const auto& b : sets) {
      if (a.size() >= b.size()) continue;
      if (!(a.back() < b.front() || b.back() < a.front())) continue;
      BigInt pa = 1, pb = 1;
      for (auto v : a) pa *= v;
      for (auto v : b) pb *= v;
      if (pa == pb) out.push_back({a, b});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle
