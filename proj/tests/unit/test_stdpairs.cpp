#include "doctest.h"

#include "../oracles.hpp"
#include "fxgy/dickson.hpp"
#include "fxgy/error.hpp"
#include "fxgy/stdpairs.hpp"
#include "test_util.hpp"

using namespace fxgy;
using testutil::P;
using testutil::q;

TEST_CASE("realize") {
  auto [F1, G1] = realize(FirstKind{2, 1, q(1), Poly::constant(1)});
  CHECK(F1 == P({0, 0, 1}));
  CHECK(G1 == P({0, 1}));
  auto [F2, G2] = realize(SecondKind{q(2), q(-1), Poly::constant(1)});
  CHECK(F2 == P({0, 0, 1}));
  CHECK(G2 == P({-1, 0, 2}));
  auto [F3, G3] = realize(ThirdKind{3, 4, q(13)});
  CHECK(F3 == dickson(3, q(13 * 13 * 13 * 13)));
  CHECK(G3 == dickson(4, q(13 * 13 * 13)));
  CHECK(kind_of(StandardPair{FifthKind{q(3)}}) == PairKind::Fifth);
  auto [F5, G5] = realize(FifthKind{q(3)});
  CHECK(F5 == pow(P({-1, 0, 3}), 3));
  CHECK(G5 == P({0, 0, 0, -4, 3}));
  CHECK_THROWS_AS(realize(ThirdKind{2, 4, q(1)}), Error);
  CHECK_THROWS_AS(realize(FourthKind{2, 3, q(1), q(1)}), Error);
  CHECK_THROWS_AS(realize(FirstKind{2, 2, q(1), Poly::constant(1)}), Error);
}

TEST_CASE("param_factorization examples") {
  auto df = param_factorization(3, 14, 77);
  CHECK(testutil::sorted(df.w) == std::vector<Rational>{q(-91), q(14), q(77)});
  CHECK(df.b == q(2401));
  CHECK(df.u == q(-98098));
  CHECK(verify_factorization(df));

  auto d4 = param_factorization(4, 4, 22);
  CHECK(d4.b == q(125));
  CHECK(d4.u == q(-23506));
  CHECK(verify_factorization(d4));

  auto d6 = param_factorization(6, 16, 1);
  CHECK(d6.b == q(91));
  CHECK(d6.u == q(1433158));
  CHECK(verify_factorization(d6));

  auto d73 = param_factorization(6, 211, 25);
  CHECK(d73.b == q(16807));
  CHECK(verify_factorization(d73));

  auto d2 = param_factorization(2, 1, 0, Rational(1));
  CHECK(d2.u == q(1));
  CHECK(verify_factorization(d2));
  CHECK(verify_factorization(DicksonFactorization{2, {q(1), q(-1)}, q(1), q(1)}));
  CHECK_FALSE(verify_factorization(DicksonFactorization{2, {q(1), q(-1)}, q(1), q(2)}));

  CHECK_THROWS_AS(param_factorization(5, 1, 2), Error);
  CHECK_THROWS_AS(param_factorization(1, 1, 2), Error);
  try {
    param_factorization(3, 1, 1);
    FAIL("expected DegenerateRoots");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateRoots);
  }
}

TEST_CASE("property: random factorizations and the N = 4 root sums") {
  Rng rng(41);
  for (int N : {3, 4, 6}) {
    for (int trial = 0; trial < 60; ++trial) {
      auto draw = random_factorization_draw(rng, N);
      auto df = param_factorization(N, draw.w1, draw.w2);
      CHECK(verify_factorization(df));
      CHECK(!df.b.is_zero());
      // D_N + u has vanishing x^(N-1) and, for N > 3, x^(N-3) coefficients.
      Poly prod = Poly::constant(1);
      for (const auto& w : df.w) prod *= Poly{w, Rational(1)};
      CHECK(prod.coeff(N - 1).is_zero());
      if (N > 3) CHECK(prod.coeff(N - 3).is_zero());
      CHECK(prod == dickson(N, df.b) + Poly::constant(df.u));
      CHECK(dickson(N, df.b) == oracle::dickson(N, df.b));
    }
  }
}

TEST_CASE("classify_degrees") {
  auto has = [](const std::vector<DegreeTriple>& v, DegreeTriple t) {
    return std::find(v.begin(), v.end(), t) != v.end();
  };
  CHECK(has(classify_degrees(2, 3, true), DegreeTriple{2, 3, 1}));
  CHECK(has(classify_degrees(3, 4, false), DegreeTriple{3, 4, 1}));
  CHECK(classify_degrees(5, 7, true).empty());
  for (int l = 1; l <= 50; ++l) {
    for (int k = 1; k <= l; ++k) {
      auto triples = classify_degrees(k, l, true);
      if (!triples.empty()) CHECK((2 * l) % k == 0);
      for (const auto& t : triples) {
        CHECK(t.m * t.s == k);
        CHECK(t.n * t.s == l);
      }
    }
  }
}

TEST_CASE("feasible_kinds") {
  auto kinds = feasible_kinds(P({-36, 0, 1}));
  REQUIRE(kinds.size() == 5);
  for (const auto& k : kinds) CHECK(k.admissible == (k.kind != PairKind::Fifth));
  CHECK_THROWS_AS(feasible_kinds(P({1, -2, 1})), Error);
  Poly f72 = Poly::constant(1);
  for (long w : {4, 22, 10, 20}) f72 *= P({-w * w, 0, 1});
  auto k72 = feasible_kinds(f72);
  auto third = std::find_if(k72.begin(), k72.end(), [](const KindConstraint& k) { return k.kind == PairKind::Third; });
  REQUIRE(third != k72.end());
  CHECK(third->admissible);
  CHECK(std::find(third->inner_degrees.begin(), third->inner_degrees.end(), 4) != third->inner_degrees.end());
}
