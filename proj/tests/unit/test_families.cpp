#include "doctest.h"

#include "../oracles.hpp"
#include "fxgy/catalog.hpp"
#include "fxgy/discriminant.hpp"
#include "fxgy/error.hpp"
#include "fxgy/families.hpp"
#include "fxgy/obstruction.hpp"
#include "fxgy/roots.hpp"
#include "test_util.hpp"

using namespace fxgy;
using testutil::from_int_roots;
using testutil::P;
using testutil::q;

TEST_CASE("first kind") {
  auto fam = build_first_kind(from_int_roots({1, 2}), P({0, 0, 0, 1}));
  CHECK(fam.g == compose(fam.f, P({0, 0, 0, 1})));
  CHECK(verify_family(fam, 10).verified);

  Poly phi = from_int_roots({-17424, -82944, -138384, -304704});
  auto f61 = build_first_kind(phi, P({0, 0, -1105, 0, 1}));
  Poly g = Poly::constant(1);
  for (long t : {33, 4, 32, 9, 31, 12, 24, 23}) g *= P({-t * t, 0, 1});
  CHECK(f61.g == g);
  CHECK(verify_family(f61, 10).verified);

  Poly cubic = P({0, -1729L * 1729, 0, 1});
  auto mirrored = build_first_kind(P({0, -728932560L, 1}), cubic, true);
  CHECK(mirrored.f.degree() == 6);
  CHECK(mirrored.g.degree() == 2);
  CHECK(verify_family(mirrored, 10).verified);

  CHECK_THROWS_AS(build_first_kind(P({1, -2, 1}), P({0, 0, 1})), Error);
  CHECK_THROWS_AS(build_first_kind(from_int_roots({1, 2}), Poly::constant(3)), Error);
}

TEST_CASE("second kind") {
  Poly X = Poly::x();
  Poly G = X * P({-7, 1}) * P({-7, 1});
  auto fam = build_second_kind(P({-36, 1}), G, PolyParam{X * P({-7, 0, 1}), X * X});
  CHECK(fam.f == P({-36, 0, 1}));
  CHECK(verify_family(fam, 10).verified);

  PellEquation eq(2, -1);
  auto seq = make_sequence(eq, {1, 1}, {7, 5}, 6);
  PellParam src{seq, BiPoly::p(), BiPoly::q()};
  auto f12 = build_second_kind(from_int_roots({1, 49}), P({-1, 0, 2}), src);
  auto cert = verify_family(f12, 10);
  CHECK(cert.verified);
  CHECK(cert.check_kind == "finite-horizon");
  CHECK(cert.horizon == 10);

  // phi with roots 1, 49 and G = 2y^2 - 1: f = (x^2 - 1)(x^2 - 49), g = 2^2 (y^2 - 1)(y^2 - 25).
  CHECK(f12.g == P({-1, 0, 1}) * P({-25, 0, 1}) * q(4));

  CHECK_THROWS_AS(build_second_kind(from_int_roots({2}), P({-1, 0, 2}), src), Error);
  try {
    build_second_kind(from_int_roots({1}), from_int_roots({1, 2, 3}), PolyParam{X, X});
    FAIL("expected OddMultiplicityViolation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OddMultiplicityViolation);
  }
  try {
    build_second_kind(from_int_roots({1, 49}), P({-1, 0, 2}), PolyParam{X, X});
    FAIL("expected SolutionSourceInvalid");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SolutionSourceInvalid);
  }
}

TEST_CASE("third kind") {
  auto f71 = build_third_kind(3, 4, 7, {{14, 77}, {23, 71}});
  CHECK(*f71.phi == P({-98098, 1}) * P({-153502, 1}));
  CHECK(rational_roots(f71.f) == testutil::sorted({q(-77), q(-71), q(-23), q(-14), q(91), q(94)}));
  CHECK(verify_family(f71, 10).verified);

  auto f72 = build_third_kind(4, 3, 5, {{4, 22}, {10, 20}});
  CHECK(*f72.phi == P({-23506, 1}) * P({8750, 1}));
  CHECK(verify_family(f72, 10).verified);

  auto f73 = build_third_kind(6, 5, 7, {{211, 25}, {196, 49}});
  CHECK(verify_family(f73, 10).verified);

  try {
    build_third_kind(3, 4, 7, {{14, 77}, {1, 2}});
    FAIL("expected MismatchedB");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MismatchedB);
  }
  CHECK_THROWS_AS(build_third_kind(3, 6, 7, {{14, 77}}), Error);
}

TEST_CASE("fourth kind") {
  const Rational a74 = q(-10 * 65 * 65), b74 = q(65);
  PellEquation c74 = fourth_kind_curve(FourthVariant::V4_10, a74, b74);
  CHECK(c74.D == 10);
  CHECK(c74.N == -2600);
  auto seq74 = make_sequence(c74, {-80, 30}, {280, 90}, recurrence_multiplier(10));
  auto f74 = build_fourth_kind(FourthVariant::V4_10, a74, b74, {{2, 16}, {8, 14}}, seq74);
  const Rational b2 = b74 * b74;
  CHECK(*f74.phi == Poly{-q(7426) / b2, 1} * Poly{q(4094) / b2, 1});
  CHECK(verify_family(f74, 10).verified);

  auto single = build_fourth_kind(FourthVariant::V4_10, a74, b74, {{2, 16}}, seq74);
  CHECK(single.phi->degree() == 1);
  CHECK(verify_family(single, 10).verified);

  const Rational a75 = q(-14L * 91 * 91 * 91), b75 = q(91);
  PellEquation c75 = fourth_kind_curve(FourthVariant::V6_10, a75, b75);
  CHECK(c75.D == 14);
  CHECK(c75.N == -5096);
  auto seq75 = make_sequence(c75, {-140, 42}, {252, 70}, recurrence_multiplier(14));
  auto f75 = build_fourth_kind(FourthVariant::V6_10, a75, b75, {{16, 1}, {11, 8}}, seq75);
  const Rational b3 = b75 * b75 * b75;
  CHECK(*f75.phi == Poly{q(1433158) / b3, 1} * Poly{-q(1288442) / b3, 1});
  CHECK(verify_family(f75, 12).verified);

  auto wrong = make_sequence(PellEquation(10, -2600), {-80, 30}, {280, 90}, 38);
  CHECK_THROWS_AS(build_fourth_kind(FourthVariant::V6_10, a75, b75, {{16, 1}}, wrong), Error);
}

TEST_CASE("verify_family") {
  auto f13 = example_families("1.3").at(0);
  CHECK(f13.f == from_int_roots({-286, -13, 299}));
  CHECK(f13.g == P({8541936, 0, -8788, 0, 1}));
  Poly xX = P({338, 0, -52, 0, 1}), yX = P({0, -39, 0, 1});
  CHECK(compose(f13.f, xX) == compose(f13.g, yX));
  auto cert = verify_family(f13, 10);
  CHECK(cert.verified);
  CHECK(cert.check_kind == "polynomial-identity");

  auto f11 = example_families("1.1").at(0);
  CHECK(verify_family(f11, 10).verified);
  auto broken = f11;
  broken.g = broken.g + Poly::constant(1);
  auto bad = verify_family(broken, 10);
  CHECK_FALSE(bad.verified);
  bool any_failed = false;
  for (const auto& rec : bad.transcript) any_failed = any_failed || !rec.passed;
  CHECK(any_failed);

  auto f12 = example_families("1.2").at(0);
  auto broken12 = f12;
  broken12.g = broken12.g + Poly::constant(1);
  CHECK_FALSE(verify_family(broken12, 10).verified);
}

TEST_CASE("every catalog family verifies") {
  for (const auto& id : family_example_ids()) {
    for (const auto& fam : example_families(id)) {
      INFO(fam.id);
      CHECK(verify_family(fam, 10).verified);
      CHECK(is_simple_rational_rooted(fam.f));
    }
  }
  CHECK_THROWS_AS(example_families("8.8"), Error);
}

TEST_CASE("discriminant obstruction") {
  Poly U = from_int_roots({1, 2, -3});
  Poly V = P({-1, 0, 1}) * P({-4, 0, 1});
  auto r = disc_obstruction(U, V);
  CHECK(r.A1 * r.A1 + r.A1 * r.A2 + r.A2 * r.A2 == q(7));
  CHECK_FALSE(r.three_w_square);
  CHECK_FALSE(r.d_roots.rational);
  CHECK(r.finiteness_certified);
  CHECK(r.e_simple_root == q(-4));
  CHECK(r.e_double_root == q(9, 4));
  CHECK(rational_roots(discriminant_of_shift(V)) == std::vector<Rational>{q(-4), q(9, 4), q(9, 4)});
  Poly Dz = monic(discriminant_of_shift(U));
  const Rational& rp = r.d_roots.rational_part;
  CHECK(rp == q(-6));
  CHECK(Dz == Poly{rp * rp - r.d_roots.radicand, -2 * rp, 1});

  try {
    disc_obstruction(U, P({-1, 0, 1}) * P({-1, 0, 1}));
    FAIL("expected ShapeMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ShapeMismatch);
  }
  CHECK_THROWS_AS(disc_obstruction(P({0, 1}), V), Error);

  auto even = disc_obstruction(P({1, 0, 0, 0, 1}), P({1, 0, 0, 0, 0, 0, -1}));
  CHECK(even.shape == ObstructionReport::Shape::Even46);
  CHECK(even.leading_signs_differ.value_or(false));
  CHECK(even.finiteness_certified);
}

TEST_CASE("property: obstruction closed forms against the discriminant") {
  Rng rng(61);
  for (int trial = 0; trial < 30; ++trial) {
    auto d = random_obstruction_draw(rng);
    auto r = disc_obstruction(d.U(), d.V());
    auto eroots = rational_roots(discriminant_of_shift(d.V()));
    CHECK(eroots == testutil::sorted({r.e_simple_root, r.e_double_root, r.e_double_root}));
    Rational W = d.A1 * d.A1 + d.A1 * d.A2 + d.A2 * d.A2, s;
    CHECK(r.three_w_square == rational_sqrt(3 * W, s));
  }
}

TEST_CASE("cone parametrization") {
  auto check_round_trip = [](const Rational& a, const Rational& b, const Rational& c) {
    auto p = parametrize_3a2b2(a, b, c);
    CHECK(p.sa * p.w * 2 * p.u * p.v == a);
    CHECK(p.sb * p.w * (3 * p.u * p.u - p.v * p.v) == b);
    CHECK(p.sc * p.w * (3 * p.u * p.u + p.v * p.v) == c);
    return p;
  };
  auto z = check_round_trip(q(0), q(1), q(1));
  CHECK(z.u == q(0));
  CHECK(z.v == q(1));
  auto one = check_round_trip(q(1), q(1), q(2));
  CHECK(one.u == q(1));
  CHECK(one.v == q(1));
  CHECK(one.w == q(1, 2));
  auto two = check_round_trip(q(2), q(2), q(4));
  CHECK(two.w == q(1));
  CHECK_THROWS_AS(parametrize_3a2b2(q(1), q(1), q(1)), Error);
  Rng rng(62);
  for (int trial = 0; trial < 100; ++trial) {
    auto pt = random_cone_point(rng);
    check_round_trip(pt.a, pt.b, pt.c);
  }
}
