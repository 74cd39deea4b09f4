#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

namespace fxgy {

inline constexpr std::uint64_t kFactorizeBound = 1'000'000'000'000ULL;

/// Prime factorization by trial division, ascending primes. factorize(1) is
/// empty. Throws InvalidInput for 0 and FactorizationOverflow above 10^12.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

enum class QuadForm { SumSquares, Hex };

std::string_view form_name(QuadForm form);
/// "sq" or "hex"; throws InvalidInput otherwise.
QuadForm parse_form(std::string_view text);

/// x^2 + y^2 or x^2 + x y + y^2.
std::int64_t form_value(QuadForm form, std::int64_t x, std::int64_t y);

struct RepPair {
  std::int64_t x = 0;
  std::int64_t y = 0;
  QuadForm form = QuadForm::SumSquares;

  friend bool operator==(const RepPair&, const RepPair&) = default;
};

/// M >= 2, M <= 10^12, squarefree, every prime factor 1 mod 4 (sq) or 1 mod 6
/// (hex).
bool is_admissible(std::uint64_t M, QuadForm form);

/// Number of distinct prime factors of an admissible M.
int prime_count(std::uint64_t M);

/// Coprime x > y > 0 with x^2 + y^2 = M, by descending x. Throws
/// BadModulusClass for inadmissible M.
std::vector<RepPair> reps_sum_two_squares(std::uint64_t M);

/// Coprime x > y > 0 with x^2 + x y + y^2 = M, by descending x. Throws
/// BadModulusClass.
std::vector<RepPair> reps_hex_form(std::uint64_t M);

/// Every x >= y >= 0 with form(x, y) = M, by descending x; no gcd or
/// modulus conditions. Throws InvalidInput for M = 0 or M > 10^12.
std::vector<RepPair> reps_unrestricted(std::uint64_t M, QuadForm form);

}  // namespace fxgy
