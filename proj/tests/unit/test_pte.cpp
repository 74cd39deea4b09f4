#include "doctest.h"

#include "fxgy/error.hpp"
#include "fxgy/pte.hpp"
#include "fxgy/representations.hpp"
#include "fxgy/roots.hpp"
#include "test_util.hpp"

using namespace fxgy;
using testutil::P;
using testutil::q;

namespace {

std::vector<Rational> ints(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

std::vector<Rational> sorted(std::vector<Rational> v) { return testutil::sorted(std::move(v)); }

const Rational kA5(728932560L), kB5(1678772880L);

}  // namespace

TEST_CASE("pte4") {
  auto s = construct_pte4(1105);
  CHECK(s.m == 4);
  CHECK(sorted(s.constants) == ints({17424, 82944, 138384, 304704}));
  CHECK(verify_pte(s));
  auto five = construct_pte4(5);
  REQUIRE(five.blocks.size() == 1);
  CHECK(sorted(five.blocks[0]) == ints({-2, -1, 1, 2}));
  CHECK(five.constants == ints({4}));
  auto s65 = construct_pte4(65);
  CHECK(sorted(s65.constants) == ints({64, 784}));
  CHECK(verify_pte(s65));
  CHECK_THROWS_AS(construct_pte4(21), Error);
}

TEST_CASE("pte6") {
  auto s = construct_pte6(1729);
  CHECK(sorted(s.constants) == ints({-761760000, -508953600, -177422400, -26625600}));
  CHECK(verify_pte(s));
  auto seven = construct_pte6(7);
  REQUIRE(seven.blocks.size() == 1);
  CHECK(sorted(seven.blocks[0]) == ints({-3, -2, -1, 1, 2, 3}));
  CHECK(seven.constants == ints({-36}));
  auto s91 = construct_pte6(91);
  auto reps = reps_hex_form(91);
  REQUIRE(s91.blocks.size() == reps.size());
  for (size_t i = 0; i < reps.size(); ++i) {
    long x = reps[i].x, y = reps[i].y;
    CHECK(s91.constants[i] == -q(x * y * (x + y)) * q(x * y * (x + y)));
  }
  CHECK(verify_pte(s91));
}

TEST_CASE("pte3") {
  auto s = construct_pte3(7);
  REQUIRE(s.blocks.size() == 3);
  CHECK(s.blocks[0] == ints({-7, 0, 7}));
  CHECK(s.blocks[1] == ints({5, -8, 3}));
  CHECK(s.blocks[2] == ints({-5, 8, -3}));
  CHECK(verify_pte(s));
  auto big = construct_pte3(1729);
  CHECK(big.blocks[0] == ints({-1729, 0, 1729}));
  CHECK(big.constants[0].is_zero());
  CHECK(sorted(big.blocks[1]) == ints({-1840, 249, 1591}));
  CHECK(abs(big.constants[1]) == kA5);
  std::vector<Rational> abs_constants;
  for (const auto& c : big.constants) abs_constants.push_back(abs(c));
  for (long v : {1678772880L, 1878480960L, 286101600L}) {
    CHECK(std::find(abs_constants.begin(), abs_constants.end(), q(v)) != abs_constants.end());
  }
}

TEST_CASE("verify_pte rejects overlapping or unequal blocks") {
  PteSet overlap{2, {ints({1, 2}), ints({2, 3})}, Poly(), {}};
  CHECK_FALSE(verify_pte(overlap));
  PteSet unequal{2, {ints({1, 4}), ints({2, 5})}, Poly(), {}};
  CHECK_FALSE(verify_pte(unequal));
}

TEST_CASE("decompose") {
  Poly v = P({0, -1729L * 1729, 0, 1});
  Poly f = (v * v - Poly::constant(kA5 * kA5)) * (v * v - Poly::constant(kB5 * kB5));
  auto d = decompose(f, 3);
  CHECK(d.inner == v);
  CHECK(sorted(d.p_list) == std::vector<Rational>{-kB5, -kA5, kA5, kB5});
  CHECK(compose(d.phi, d.inner) == f);

  auto triv = decompose(P({-36, 0, 1}), 1);
  CHECK(triv.inner == Poly::x());
  CHECK(triv.phi == P({-36, 0, 1}));

  Poly F = Poly::x() * P({-1729L * 1729, 1}) * P({-1729L * 1729, 1});
  Poly f6 = (F - Poly::constant(kA5 * kA5)) * (F - Poly::constant(kB5 * kB5));
  auto d6 = decompose(f6, 3);
  CHECK(d6.inner == F);
  CHECK(sorted(d6.p_list) == std::vector<Rational>{kA5 * kA5, kB5 * kB5});

  CHECK_THROWS_AS(decompose(P({1, -2, 1}), 1), Error);
  CHECK_THROWS_AS(decompose(P({-36, 0, 1}), 3), Error);
  // Simple rational roots but no cubic inner polynomial.
  try {
    decompose(testutil::from_int_roots({1, 2, 3, 4, 5, 7}), 3);
    FAIL("expected NoDecomposition");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoDecomposition);
  }
}

TEST_CASE("property: constructed sets round trip through decompose") {
  for (std::uint64_t M : {1105ULL, 65ULL, 5ULL}) {
    auto s = construct_pte4(M);
    Poly f = pte_polynomial(s);
    auto d = decompose(f, 4);
    CHECK(d.inner == s.shared);
    CHECK(compose(d.phi, d.inner) == f);
  }
  for (std::uint64_t M : {1729ULL, 91ULL, 7ULL}) {
    auto s = construct_pte6(M);
    auto d = decompose(pte_polynomial(s), 6);
    CHECK(d.inner == s.shared);
  }
  for (std::uint64_t M : {1729ULL, 7ULL, 13ULL}) {
    auto s = construct_pte3(M);
    auto d = decompose(pte_polynomial(s), 3);
    CHECK(d.inner == s.shared);
  }
}

TEST_CASE("property: pte3 and pte6 sums") {
  for (std::uint64_t M = 2; M <= 3000; ++M) {
    if (!is_admissible(M, QuadForm::Hex)) continue;
    const Rational m(M);
    auto s3 = construct_pte3(M);
    for (const auto& b : s3.blocks) {
      auto ps = power_sums(b, 2);
      CHECK(ps[0].is_zero());
      CHECK(ps[1] == 2 * m * m);
    }
    for (const auto& b : construct_pte6(M).blocks) {
      std::vector<Rational> pos;
      for (const auto& r : b) {
        if (r.sign() > 0) pos.push_back(r);
      }
      auto ps = power_sums(pos, 4);
      CHECK(ps[1] == 2 * m);
      CHECK(ps[3] == 2 * m * m);
    }
  }
}

TEST_CASE("property: random decompositions") {
  Rng rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    auto inst = random_decomposition_instance(rng);
    auto d = decompose(inst.f, inst.F.degree());
    CHECK(compose(d.phi, d.inner) == inst.f);
    Poly gauge = (inst.F - Poly::constant(inst.F.coeff(0))) * (Rational(1) / inst.F.leading());
    CHECK(d.inner == gauge);
  }
}
