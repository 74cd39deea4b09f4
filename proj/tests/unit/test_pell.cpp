#include "doctest.h"

#include "../oracles.hpp"
#include "fxgy/error.hpp"
#include "fxgy/pell.hpp"

using namespace fxgy;

namespace {

bool contains(const std::vector<IntPair>& v, long x, long y) {
  return std::find(v.begin(), v.end(), IntPair{x, y}) != v.end();
}

}  // namespace

TEST_CASE("PellEquation validation") {
  CHECK_THROWS_AS(PellEquation(4, 1), Error);
  CHECK_THROWS_AS(PellEquation(0, 1), Error);
  CHECK_THROWS_AS(PellEquation(2, 0), Error);
}

TEST_CASE("find_seeds") {
  auto s = find_seeds(PellEquation(2, -1), 10);
  CHECK(contains(s, 1, 1));
  CHECK(contains(s, 7, 5));
  CHECK(s == oracle::pell_points(2, -1, 10));
  auto t = find_seeds(PellEquation(10, -2600), 100);
  CHECK(contains(t, -80, 30));
  CHECK(contains(t, 280, 90));
  CHECK(t == oracle::pell_points(10, -2600, 100));
  CHECK(find_seeds(PellEquation(2, 3), 50).empty());
  CHECK(find_seeds(PellEquation(14, -5096), 200) == oracle::pell_points(14, -5096, 200));
  CHECK_THROWS_AS(find_seeds(PellEquation(2, -1), kSeedBound + 1), Error);
}

TEST_CASE("recurrence_multiplier") {
  CHECK(recurrence_multiplier(2) == 6);
  CHECK(recurrence_multiplier(10) == 38);
  CHECK(recurrence_multiplier(14) == 30);
  CHECK(recurrence_multiplier(26) == 102);
  for (long D = 2; D <= 60; ++D) {
    if (is_perfect_square(BigInt(D))) continue;
    BigInt t = recurrence_multiplier(D);
    BigInt r = t * t - 4;
    REQUIRE(r % (4 * D) == 0);
    CHECK(is_perfect_square(r / (4 * D)));
  }
  CHECK_THROWS_AS(recurrence_multiplier(9), Error);
  try {
    recurrence_multiplier(61);
    FAIL("expected FundamentalSearchOverflow");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::FundamentalSearchOverflow);
  }
}

TEST_CASE("generate") {
  PellEquation eq(2, -1);
  auto seq = make_sequence(eq, {1, 1}, {7, 5}, recurrence_multiplier(2));
  CHECK(generate(seq, 4) == std::vector<IntPair>{{1, 1}, {7, 5}, {41, 29}, {239, 169}});
  CHECK(generate(seq, 1) == std::vector<IntPair>{{1, 1}});
  CHECK_THROWS_AS(generate(seq, 0), Error);

  auto s57 = make_sequence(PellEquation(26, -28730), {247, -1248}, {117, 572}, 102, true);
  auto terms = generate(s57, 4);
  CHECK(terms[2] == IntPair{11687, 59592});
  for (const auto& p : terms) CHECK(s57.eq.on_curve(p.second, p.first));

  try {
    make_sequence(eq, {1, 2}, {7, 5}, 6);
    FAIL("expected OffCurve");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OffCurve);
  }
}

TEST_CASE("property: long sequences stay on the curve") {
  struct Case {
    long D, N;
    IntPair s0, s1;
    bool swapped;
  };
  for (const auto& c : {Case{2, -1, {1, 1}, {7, 5}, false}, Case{10, -2600, {-80, 30}, {280, 90}, false},
                        Case{14, -5096, {-140, 42}, {252, 70}, false},
                        Case{26, -28730, {247, -1248}, {117, 572}, true}}) {
    PellEquation eq(c.D, c.N);
    auto seq = make_sequence(eq, c.s0, c.s1, recurrence_multiplier(c.D), c.swapped);
    auto terms = generate(seq, 25);
    CHECK(terms.size() == 25);
    for (const auto& p : terms) {
      auto q = seq.to_curve(p);
      CHECK(eq.on_curve(q.first, q.second));
    }
    auto neg = make_sequence(eq, {-c.s0.first, -c.s0.second}, {-c.s1.first, -c.s1.second}, seq.t, c.swapped);
    auto nterms = generate(neg, 25);
    for (size_t i = 0; i < terms.size(); ++i) {
      CHECK(nterms[i] == IntPair{-terms[i].first, -terms[i].second});
    }
  }
}
