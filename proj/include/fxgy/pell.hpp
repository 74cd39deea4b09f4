#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "fxgy/rational.hpp"

namespace fxgy {

using IntPair = std::pair<BigInt, BigInt>;

/// x^2 - D y^2 = N with D > 0 nonsquare and N != 0.
struct PellEquation {
  BigInt D;
  BigInt N;

  /// Throws InvalidInput when D is not a positive nonsquare or N = 0.
  PellEquation(BigInt D_, BigInt N_);
  bool on_curve(const BigInt& x, const BigInt& y) const { return x * x - D * y * y == N; }
};

inline constexpr std::uint64_t kSeedBound = 100'000'000;
inline constexpr std::uint64_t kFundamentalBound = 1'000'000;

/// All (x, y) on the curve with |y| <= bound, sorted by (|y|, y, x).
/// Throws SearchBoundExceeded for bound > 10^8.
std::vector<IntPair> find_seeds(const PellEquation& eq, std::uint64_t bound);

/// 2 x0 for the least x0 > 1 with x0^2 - D y0^2 = 1, scanning y0 <= 10^6.
/// Throws InvalidInput for D outside [2, 10^6] or square, and
/// FundamentalSearchOverflow when no y0 <= 10^6 works.
BigInt recurrence_multiplier(const BigInt& D);

/// Two seeds and the multiplier t of s_i = t s_(i-1) - s_(i-2). Seeds are kept
/// in the caller's coordinates; with `swapped` a pair (a, b) lies on the
/// curve as (b, a).
struct SolutionSeq {
  PellEquation eq;
  IntPair seed0;
  IntPair seed1;
  BigInt t;
  bool swapped = false;

  IntPair to_curve(const IntPair& p) const { return swapped ? IntPair{p.second, p.first} : p; }
};

/// Validates both seeds (OffCurve) and t >= 1 (InvalidInput). If one
/// recurrence step fails to increase |y| on the curve, the seeds are swapped
/// so generation always runs outward.
SolutionSeq make_sequence(PellEquation eq, IntPair s0, IntPair s1, BigInt t, bool swapped = false);

/// The first `count` terms, each checked on the curve. Throws OffCurve on
/// the first failure and InvalidInput for count < 1.
std::vector<IntPair> generate(const SolutionSeq& seq, int count);

}  // namespace fxgy
