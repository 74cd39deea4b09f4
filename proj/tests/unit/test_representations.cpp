#include "doctest.h"

#include "../oracles.hpp"
#include "fxgy/error.hpp"
#include "fxgy/representations.hpp"

using namespace fxgy;

namespace {

std::vector<std::pair<std::int64_t, std::int64_t>> pairs(const std::vector<RepPair>& reps) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (const auto& r : reps) out.emplace_back(r.x, r.y);
  return out;
}

using Pairs = std::vector<std::pair<std::int64_t, std::int64_t>>;

}  // namespace

TEST_CASE("factorize") {
  CHECK(factorize(1105) == std::vector<std::pair<std::uint64_t, int>>{{5, 1}, {13, 1}, {17, 1}});
  CHECK(factorize(1).empty());
  CHECK(factorize(1729) == std::vector<std::pair<std::uint64_t, int>>{{7, 1}, {13, 1}, {19, 1}});
  CHECK(factorize(50421) == std::vector<std::pair<std::uint64_t, int>>{{3, 1}, {7, 5}});
  CHECK_THROWS_AS(factorize(0), Error);
  CHECK_THROWS_AS(factorize(kFactorizeBound + 1), Error);
}

TEST_CASE("sums of two squares") {
  CHECK(pairs(reps_sum_two_squares(1105)) == Pairs{{33, 4}, {32, 9}, {31, 12}, {24, 23}});
  CHECK(pairs(reps_sum_two_squares(5)) == Pairs{{2, 1}});
  CHECK(pairs(reps_sum_two_squares(65)) == Pairs{{8, 1}, {7, 4}});
  CHECK(pairs(reps_sum_two_squares(65)) == oracle::reps(65, QuadForm::SumSquares));
  for (std::uint64_t bad : {0ULL, 1ULL, 3ULL, 25ULL, 21ULL, 10ULL}) {
    try {
      reps_sum_two_squares(bad);
      FAIL("expected BadModulusClass for " << bad);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::BadModulusClass);
    }
  }
}

TEST_CASE("hexagonal form") {
  CHECK(pairs(reps_hex_form(1729)) == Pairs{{40, 3}, {37, 8}, {32, 15}, {25, 23}});
  CHECK(pairs(reps_hex_form(7)) == Pairs{{2, 1}});
  CHECK(pairs(reps_hex_form(91)) == oracle::reps(91, QuadForm::Hex));
  CHECK_THROWS_AS(reps_hex_form(50421), Error);
  auto all = reps_unrestricted(50421, QuadForm::Hex);
  auto has = [&](std::int64_t x, std::int64_t y) {
    return std::find(all.begin(), all.end(), RepPair{x, y, QuadForm::Hex}) != all.end();
  };
  CHECK(has(211, 25));
  CHECK(has(196, 49));
  for (const auto& r : all) CHECK(form_value(QuadForm::Hex, r.x, r.y) == 50421);
}

TEST_CASE("admissibility") {
  CHECK(is_admissible(1105, QuadForm::SumSquares));
  CHECK_FALSE(is_admissible(1105, QuadForm::Hex));
  CHECK(is_admissible(1729, QuadForm::Hex));
  CHECK_FALSE(is_admissible(1729, QuadForm::SumSquares));
  CHECK_FALSE(is_admissible(1, QuadForm::SumSquares));
  CHECK_FALSE(is_admissible(169, QuadForm::SumSquares));
  CHECK(prime_count(1105) == 3);
  CHECK(parse_form("hex") == QuadForm::Hex);
  CHECK_THROWS_AS(parse_form("cube"), Error);
}

TEST_CASE("counts, gcd and order against the double loop up to 20000") {
  const std::int64_t limit = 20000;
  for (auto form : {QuadForm::SumSquares, QuadForm::Hex}) {
    auto table = oracle::rep_count_table(limit, form);
    for (std::int64_t M = 2; M <= limit; ++M) {
      bool adm = is_admissible(static_cast<std::uint64_t>(M), form);
      REQUIRE(adm == oracle::admissible(M, form));
      if (!adm) continue;
      auto reps = form == QuadForm::SumSquares ? reps_sum_two_squares(static_cast<std::uint64_t>(M))
                                               : reps_hex_form(static_cast<std::uint64_t>(M));
      const int expected = 1 << (oracle::distinct_primes(M) - 1);
      CHECK(static_cast<int>(reps.size()) == expected);
      CHECK(table[static_cast<size_t>(M)] == expected);
      for (size_t i = 0; i < reps.size(); ++i) {
        CHECK(form_value(form, reps[i].x, reps[i].y) == M);
        CHECK(std::gcd(reps[i].x, reps[i].y) == 1);
        if (i > 0) CHECK(reps[i].x < reps[i - 1].x);
      }
    }
  }
}
