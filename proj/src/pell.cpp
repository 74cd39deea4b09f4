#include "fxgy/pell.hpp"

#include <algorithm>
#include <string>

#include "fxgy/error.hpp"

namespace fxgy {

namespace {

std::string show(const IntPair& p) { return "(" + p.first.get_str() + ", " + p.second.get_str() + ")"; }

BigInt babs(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

IntPair step(const BigInt& t, const IntPair& prev, const IntPair& cur) {
  return {t * cur.first - prev.first, t * cur.second - prev.second};
}

}  // namespace

PellEquation::PellEquation(BigInt D_, BigInt N_) : D(std::move(D_)), N(std::move(N_)) {
  if (D <= 0 || is_perfect_square(D)) throw Error(ErrorCode::InvalidInput, "Pell: D must be a positive nonsquare");
  if (N == 0) throw Error(ErrorCode::InvalidInput, "Pell: N must be nonzero");
}

std::vector<IntPair> find_seeds(const PellEquation& eq, std::uint64_t bound) {
  if (bound > kSeedBound) throw Error(ErrorCode::SearchBoundExceeded, "find_seeds: bound exceeds 10^8");
  std::vector<IntPair> out;
  BigInt r, x;
  for (std::uint64_t y = 0; y <= bound; ++y) {
    BigInt yy(static_cast<unsigned long>(y));
    r = eq.N + eq.D * yy * yy;
    if (r < 0 || !is_perfect_square(r)) continue;
    x = isqrt(r);
    for (int sy : {-1, 1}) {
      if (y == 0 && sy < 0) continue;
      for (int sx : {-1, 1}) {
        if (x == 0 && sx < 0) continue;
        out.emplace_back(BigInt(sx * x), BigInt(sy * yy));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const IntPair& a, const IntPair& b) {
    int c = cmp(babs(a.second), babs(b.second));
    if (c != 0) return c < 0;
    if (a.second != b.second) return a.second < b.second;
    return a.first < b.first;
  });
  return out;
}

BigInt recurrence_multiplier(const BigInt& D) {
  if (D < 2 || D > kFundamentalBound || is_perfect_square(D)) {
    throw Error(ErrorCode::InvalidInput, "recurrence_multiplier: D must be a nonsquare in [2, 10^6]");
  }
  const std::uint64_t d = D.get_ui();
  for (std::uint64_t y = 1; y <= kFundamentalBound; ++y) {
    std::uint64_t v = d * y * y + 1;  // <= 10^18 + 1
    BigInt big(std::to_string(v));
    if (is_perfect_square(big)) return 2 * isqrt(big);
  }
  throw Error(ErrorCode::FundamentalSearchOverflow,
              "recurrence_multiplier: no fundamental solution with y <= 10^6 for D = " + D.get_str());
}

SolutionSeq make_sequence(PellEquation eq, IntPair s0, IntPair s1, BigInt t, bool swapped) {
  if (t < 1) throw Error(ErrorCode::InvalidInput, "sequence multiplier must be positive");
  SolutionSeq seq{std::move(eq), std::move(s0), std::move(s1), std::move(t), swapped};
  for (const auto* s : {&seq.seed0, &seq.seed1}) {
    IntPair c = seq.to_curve(*s);
    if (!seq.eq.on_curve(c.first, c.second)) throw Error(ErrorCode::OffCurve, "seed " + show(*s) + " is not on the curve");
  }
  IntPair c0 = seq.to_curve(seq.seed0), c1 = seq.to_curve(seq.seed1);
  IntPair c2 = step(seq.t, c0, c1);
  if (babs(c2.second) <= babs(c1.second)) std::swap(seq.seed0, seq.seed1);
  return seq;
}

std::vector<IntPair> generate(const SolutionSeq& seq, int count) {
  if (count < 1) throw Error(ErrorCode::InvalidInput, "generate: count must be positive");
  std::vector<IntPair> out{seq.seed0};
  if (count > 1) out.push_back(seq.seed1);
  while (static_cast<int>(out.size()) < count) {
    out.push_back(step(seq.t, out[out.size() - 2], out.back()));
  }
  for (size_t i = 0; i < out.size(); ++i) {
    IntPair c = seq.to_curve(out[i]);
    if (!seq.eq.on_curve(c.first, c.second)) {
      throw Error(ErrorCode::OffCurve, "term " + std::to_string(i) + " " + show(out[i]) + " is off the curve");
    }
  }
  return out;
}

}  // namespace fxgy
