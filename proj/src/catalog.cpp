#include "fxgy/catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "fxgy/dickson.hpp"
#include "fxgy/error.hpp"
#include "fxgy/pte.hpp"
#include "fxgy/representations.hpp"
#include "fxgy/roots.hpp"

namespace fxgy {

namespace {

const Poly X = Poly::x();

Poly lin(const Rational& c) { return Poly{c, 1}; }

Poly roots_poly(std::initializer_list<long> rs) {
  Poly p = Poly::constant(1);
  for (long r : rs) p *= lin(-Rational(r));
  return p;
}

/// prod (x^2 - t^2)
Poly symmetric_poly(const std::vector<long>& ts) {
  Poly p = Poly::constant(1);
  for (long t : ts) p *= Poly{-Rational(t) * Rational(t), 0, 1};
  return p;
}

Poly prod_linear(const std::vector<Rational>& cs) {
  Poly p = Poly::constant(1);
  for (const auto& c : cs) p *= lin(c);
  return p;
}

const Rational kA5(728932560L);
const Rational kB5(1678772880L);
const Rational k1729sq(1729L * 1729L);

class Report {
 public:
  explicit Report(ExampleReport& r) : r_(r) {}

  void check(std::string name, bool ok, std::string detail = "") {
    r_.checks.push_back({std::move(name), ok, std::move(detail)});
  }
  void equal(std::string name, const Rational& got, const Rational& want) {
    check(std::move(name), got == want, got.to_string());
  }
  void equal(std::string name, const Poly& got, const Poly& want) {
    check(std::move(name), got == want, got == want ? to_string(got) : "got " + to_string(got));
  }
  void equal(std::string name, const BigInt& got, const BigInt& want) {
    check(std::move(name), got == want, got.get_str());
  }
  void simple(std::string name, const Poly& p) {
    bool ok = p.degree() >= 1 && is_simple_rational_rooted(p);
    check(std::move(name), ok, "deg " + std::to_string(p.degree()));
  }
  void certify(const EquationFamily& fam, int horizon) {
    Certificate c = verify_family(fam, horizon);
    size_t passed = std::count_if(c.transcript.begin(), c.transcript.end(), [](const CheckRecord& x) { return x.passed; });
    std::string detail = c.check_kind + ", " + std::to_string(passed) + "/" + std::to_string(c.transcript.size()) + " checks";
    if (c.check_kind == "finite-horizon") detail += ", horizon " + std::to_string(c.horizon);
    check("certificate " + fam.id, c.verified, detail);
    r_.certificates.push_back(std::move(c));
  }

 private:
  ExampleReport& r_;
};

EquationFamily tag(EquationFamily fam, std::string id, std::string provenance) {
  fam.id = std::move(id);
  fam.provenance = std::move(provenance);
  return fam;
}

// Sequences on x^2 - 2 y^2 = -1.
SolutionSeq pell_2() { return make_sequence(PellEquation(2, -1), {1, 1}, {7, 5}, recurrence_multiplier(2)); }

// Families -----------------------------------------------------------------

EquationFamily fam_1_1() {
  return tag(build_second_kind(lin(-36), X * pow(lin(-7), 2), PolyParam{X * Poly{-7, 0, 1}, pow(X, 2)}), "1.1",
             "second kind, F = x^2, G = y(y-7)^2");
}

EquationFamily fam_1_2() {
  PellParam src{pell_2(), BiPoly::p(), BiPoly::q()};
  return tag(build_second_kind(roots_poly({1, 49}), Poly{-1, 0, 2}, src), "1.2",
             "second kind, F = x^2, G = 2y^2 - 1, Pell x^2 - 2y^2 = -1");
}

EquationFamily fam_1_3() {
  return tag(build_third_kind(3, 4, 13, {{286, 13}}), "1.3", "third kind, (m, n) = (3, 4), b = 13");
}

std::vector<EquationFamily> fams_5_1() {
  return {tag(build_first_kind(roots_poly({1, 2}), pow(X, 3)), "5.1a", "first kind, F = x, G = y^3"),
          tag(build_first_kind(roots_poly({1, 2, -3}), Poly{0, 1, 1}), "5.1b", "first kind, F = x, G = y^2 + y")};
}

Poly cubic_1729() { return Poly{0, -k1729sq, 0, 1}; }

EquationFamily fam_5_2() {
  Poly phi = Poly{-kA5 * kA5, 0, 1} * Poly{-kB5 * kB5, 0, 1};
  return tag(build_first_kind(phi, cubic_1729(), true), "5.2", "first kind mirrored, F = x^3 - 1729^2 x, G = y");
}

EquationFamily fam_5_3() {
  Poly v = lin(1);
  Poly G = X * pow(v, 2);
  Poly xs = X * compose(v, pow(X, 2));
  return tag(build_second_kind(roots_poly({1, 4, 9}), G, PolyParam{xs, pow(X, 2)}), "5.3",
             "second kind, G = y v(y)^2, v = y + 1");
}

EquationFamily fam_5_4() {
  Poly v = lin(2);
  Poly G = Poly{-1, 0, 2} * pow(v, 2);
  PellParam src{pell_2(), BiPoly::p() * BiPoly::in_q(v), BiPoly::q()};
  return tag(build_second_kind(roots_poly({1, 25}), G, src), "5.4",
             "second kind, G = (2y^2 - 1) v(y)^2, v = y + 2, Pell x^2 - 2y^2 = -1");
}

EquationFamily fam_5_5() {
  return tag(build_first_kind(Poly{0, -kA5, 1}, cubic_1729(), true), "5.5",
             "first kind mirrored, F = x^3 - 1729^2 x, G = y");
}

EquationFamily fam_5_6() {
  Poly G = X * pow(lin(-k1729sq), 2);
  Poly phi = lin(-kA5 * kA5) * lin(-kB5 * kB5);
  return tag(build_second_kind(phi, G, PolyParam{pow(X, 2), cubic_1729()}, true),
             "5.6", "second kind mirrored, F = x(x - 1729^2)^2, G = y^2");
}

EquationFamily fam_5_7() {
  Poly G = Poly{0, 0, 26} * Poly{-1105, 0, 1};
  Poly phi = lin(Rational(26 * 132 * 132)) * lin(Rational(26 * 288 * 288));
  SolutionSeq seq = make_sequence(PellEquation(26, -28730), {247, -1248}, {117, 572}, recurrence_multiplier(26), true);
  PellParam src{seq, BiPoly::p(), BiPoly::p() * BiPoly::q()};
  return tag(build_second_kind(phi, G, src, true), "5.7",
             "second kind mirrored, F = 26x^2(x^2 - 1105), G = y^2, Pell Y^2 - 26X^2 = -28730");
}

const std::vector<Rational> kC41{17424, 82944, 138384, 304704};
const std::vector<Rational> kC42{26625600, 177422400, 508953600, 761760000};
const std::vector<Rational> kC43{728932560L, 1678772880L, 1878480960L, 286101600L};

std::vector<EquationFamily> fams_6_1() {
  std::vector<EquationFamily> out;
  out.push_back(tag(build_first_kind(prod_linear(kC41), Poly{0, 0, -1105, 0, 1}), "6.1a", "first kind, G = y^4 - 1105y^2"));
  std::vector<Rational> neg;
  for (const auto& c : kC42) neg.push_back(-c);
  out.push_back(tag(build_first_kind(prod_linear(neg), Poly{0, 0, k1729sq, 0, -2 * 1729, 0, 1}), "6.1b",
                    "first kind, G = y^6 - 2*1729y^4 + 1729^2y^2"));
  Poly phi3 = X;
  for (const auto& c : kC43) phi3 *= Poly{-c * c, 0, 1};
  out.push_back(tag(build_first_kind(phi3, cubic_1729()), "6.1c", "first kind, G = y^3 - 1729^2y"));
  return out;
}

std::vector<EquationFamily> fams_6_2() {
  PellParam src{pell_2(), BiPoly::p(), BiPoly::q()};
  return {tag(build_second_kind(roots_poly({1, 49}), Poly{-1, 0, 2}, src), "6.2", "second kind, G = 2y^2 - 1, s = 2"),
          tag(build_second_kind(roots_poly({1, 49, 1681}), Poly{-1, 0, 2}, src), "6.2s3",
              "second kind, G = 2y^2 - 1, s = 3")};
}

EquationFamily fam_third(const std::string& id) {
  if (id == "7.1") return tag(build_third_kind(3, 4, 7, {{14, 77}, {23, 71}}), id, "third kind, (m, n) = (3, 4), b = 7");
  if (id == "7.2") return tag(build_third_kind(4, 3, 5, {{4, 22}, {10, 20}}), id, "third kind, (m, n) = (4, 3), b = 5");
  return tag(build_third_kind(6, 5, 7, {{211, 25}, {196, 49}}), id, "third kind, (m, n) = (6, 5), b = 7");
}

struct FourthData {
  FourthVariant variant;
  Rational a, b;
  std::vector<std::pair<Rational, Rational>> reps;
  IntPair s0, s1;
};

FourthData fourth_data(const std::string& id) {
  if (id == "7.4") return {FourthVariant::V4_10, Rational(-10 * 65 * 65), 65, {{2, 16}, {8, 14}}, {-80, 30}, {280, 90}};
  return {FourthVariant::V6_10, Rational(-14L * 91 * 91 * 91), 91, {{16, 1}, {11, 8}}, {-140, 42}, {252, 70}};
}

EquationFamily fam_fourth(const std::string& id) {
  FourthData d = fourth_data(id);
  PellEquation eq = fourth_kind_curve(d.variant, d.a, d.b);
  SolutionSeq seq = make_sequence(eq, d.s0, d.s1, recurrence_multiplier(eq.D));
  const char* prov = d.variant == FourthVariant::V4_10 ? "fourth kind, (m, n) = (4, 10), b = 65"
                                                       : "fourth kind, (m, n) = (6, 10), b = 91";
  return tag(build_fourth_kind(d.variant, d.a, d.b, d.reps, seq), id, prov);
}

const std::vector<long> kT1{22, -22, 61, -61, 86, -86, 127, -127, 140, -140, 151, -151};
const std::vector<long> kT2{35, -35, 47, -47, 94, -94, 121, -121, 146, -146, 148, -148};
const std::vector<long> kT3{-98, -82, -58, -34, 13, 16, 69, 75, 99};

Poly roots_of(const std::vector<long>& ts) {
  Poly p = Poly::constant(1);
  for (long t : ts) p *= lin(-Rational(t));
  return p;
}

Rational prod_of(const std::vector<long>& ts) {
  Rational r(1);
  for (long t : ts) r *= Rational(t);
  return r;
}

struct Data91 {
  Poly v;
  Rational A;
};

Data91 data_9_1() {
  Poly p1 = roots_of(kT1), p2 = roots_of(kT2);
  return {(p1 + p2) * Rational(1, 2), (prod_of(kT1) - prod_of(kT2)) / Rational(2)};
}

EquationFamily fam_9_1() {
  auto [v, A] = data_9_1();
  return tag(build_first_kind(Poly{-A * A, 0, 1}, v), "9.1", "first kind, F = x, G = v(y), ideal PTE pair of size 12");
}

struct Data92 {
  Poly v;
  Rational A;
};

Data92 data_9_2() {
  Rational A = prod_of(kT3);
  Poly yT = roots_of(kT3) + Poly::constant(A);
  Poly T = exact_div(yT, X);
  std::vector<Rational> even;
  for (int i = 0; i <= T.degree(); i += 2) even.push_back(T.coeff(i));
  return {Poly(even), A};
}

EquationFamily fam_9_2() {
  auto [v, A] = data_9_2();
  Poly G = X * pow(v, 2);
  Poly xs = X * compose(v, pow(X, 2));
  return tag(build_second_kind(lin(-A * A), G, PolyParam{xs, pow(X, 2)}), "9.2",
             "second kind, F = x^2, G = y v(y)^2, ideal PTE pair of size 9");
}

// Examples -----------------------------------------------------------------

void ex_1_1(Report& r, int h) {
  auto fam = fam_1_1();
  r.equal("f = (x - 6)(x + 6)", fam.f, roots_poly({6, -6}));
  r.equal("g = (y - 1)(y - 4)(y - 9)", fam.g, roots_poly({1, 4, 9}));
  r.certify(fam, h);
}

void ex_1_2(Report& r, int h) {
  auto fam = fam_1_2();
  r.equal("f = (x - 7)(x - 1)(x + 1)(x + 7)", fam.f, roots_poly({7, 1, -1, -7}));
  r.equal("g = 4(y - 5)(y - 1)(y + 1)(y + 5)", fam.g, roots_poly({5, 1, -1, -5}) * Rational(4));
  r.equal("Pell multiplier for D = 2", recurrence_multiplier(2), BigInt(6));
  auto terms = generate(std::get<PellParam>(fam.param).seq, 3);
  r.check("third Pell term (41, 29)", terms[2] == IntPair{41, 29}, terms[2].first.get_str() + ", " + terms[2].second.get_str());
  r.certify(fam, h);
}

void ex_1_3(Report& r, int h) {
  auto fam = fam_1_3();
  r.equal("f = (x + 286)(x + 13)(x - 299)", fam.f, roots_poly({-286, -13, 299}));
  r.equal("g = y^4 - 8788y^2 + 8541936", fam.g, Poly{8541936, 0, -8788, 0, 1});
  const auto& pp = std::get<PolyParam>(fam.param);
  r.equal("x(X) = X^4 - 52X^2 + 338", pp.x, Poly{338, 0, -52, 0, 1});
  r.equal("y(X) = X^3 - 39X", pp.y, Poly{0, -39, 0, 1});
  r.equal("phi = x - 1111682", *fam.phi, lin(-1111682));
  Poly diff = compose(fam.f, Poly{338, 0, -52, 0, 1}) - compose(fam.g, Poly{0, -39, 0, 1});
  r.check("f(X^4 - 52X^2 + 338) = g(X^3 - 39X)", diff.is_zero(), diff.is_zero() ? "0" : to_string(diff, 'X'));
  r.certify(fam, h);
}

void check_pte_blocks(Report& r, const PteSet& set) {
  r.check("power sums agree for j = 1.." + std::to_string(set.m - 1), verify_pte(set), std::to_string(set.blocks.size()) + " blocks");
}

void ex_4_1(Report& r, int) {
  auto reps = reps_sum_two_squares(1105);
  std::vector<RepPair> want{{33, 4}, {32, 9}, {31, 12}, {24, 23}};
  r.check("1105 = x^2 + y^2 for (33,4), (32,9), (31,12), (24,23)", reps == want, std::to_string(reps.size()) + " reps");
  PteSet set = construct_pte4(1105);
  r.equal("shared polynomial x^4 - 1105x^2", set.shared, Poly{0, 0, -1105, 0, 1});
  const std::vector<std::vector<long>> blocks{{33, 4}, {32, 9}, {31, 12}, {24, 23}};
  for (size_t i = 0; i < kC41.size() && i < set.constants.size(); ++i) {
    r.equal("added constant " + kC41[i].to_string(), set.constants[i], kC41[i]);
    r.equal("x^4 - 1105x^2 + " + kC41[i].to_string() + " factors", set.shared + Poly::constant(kC41[i]), symmetric_poly(blocks[i]));
  }
  r.check("four blocks", set.constants.size() == 4, std::to_string(set.constants.size()));
  check_pte_blocks(r, set);
}

void ex_4_2(Report& r, int) {
  auto reps = reps_hex_form(1729);
  std::vector<RepPair> want{{40, 3, QuadForm::Hex}, {37, 8, QuadForm::Hex}, {32, 15, QuadForm::Hex}, {25, 23, QuadForm::Hex}};
  r.check("1729 = x^2 + xy + y^2 for (40,3), (37,8), (32,15), (25,23)", reps == want, std::to_string(reps.size()) + " reps");
  PteSet set = construct_pte6(1729);
  r.equal("shared polynomial x^6 - 2*1729x^4 + 1729^2x^2", set.shared, Poly{0, 0, k1729sq, 0, -3458, 0, 1});
  const std::vector<std::vector<long>> blocks{{3, 40, 43}, {8, 37, 45}, {15, 32, 47}, {23, 25, 48}};
  for (size_t i = 0; i < kC42.size() && i < set.constants.size(); ++i) {
    r.equal("subtracted constant " + kC42[i].to_string(), -set.constants[i], kC42[i]);
    r.equal("shared - " + kC42[i].to_string() + " factors", set.shared - Poly::constant(kC42[i]), symmetric_poly(blocks[i]));
  }
  r.check("four blocks", set.constants.size() == 4, std::to_string(set.constants.size()));
  check_pte_blocks(r, set);
}

void ex_4_3(Report& r, int) {
  PteSet set = construct_pte3(1729);
  r.equal("shared polynomial x^3 - 1729^2x", set.shared, cubic_1729());
  std::set<std::vector<Rational>> got;
  for (auto b : set.blocks) {
    std::sort(b.begin(), b.end());
    got.insert(b);
  }
  std::set<std::vector<Rational>> want;
  const std::vector<std::vector<long>> triples{{-1729, 0, 1729}, {1840, -249, -1591}, {1961, -656, -1305},
                                               {1984, -1185, -799}, {1775, -96, -1679}};
  for (const auto& t : triples) {
    for (int sign : {1, -1}) {
      std::vector<Rational> b;
      for (long v : t) b.push_back(Rational(sign * v));
      std::sort(b.begin(), b.end());
      want.insert(b);
    }
  }
  r.check("the nine triples", got == want && set.blocks.size() == 9, std::to_string(set.blocks.size()) + " blocks");
  for (const auto& b : set.blocks) {
    Rational sum, sq;
    for (const auto& v : b) {
      sum += v;
      sq += v * v;
    }
    r.check("triple " + b[0].to_string() + ", " + b[1].to_string() + ", " + b[2].to_string() + " has sum 0 and sum of squares 5978882",
            sum.is_zero() && sq == Rational(5978882), sq.to_string());
  }
  std::set<Rational> consts(set.constants.begin(), set.constants.end());
  std::set<Rational> want_c{0};
  for (const auto& c : kC43) {
    want_c.insert(c);
    want_c.insert(-c);
  }
  r.check("added constants 0, +-728932560, +-1678772880, +-1878480960, +-286101600", consts == want_c,
          std::to_string(consts.size()) + " distinct");
  for (size_t i = 0; i < set.blocks.size(); ++i) {
    r.equal("block " + std::to_string(i) + " polynomial", block_polynomial(set, i), from_roots(1, set.blocks[i]));
  }
  check_pte_blocks(r, set);
}

void ex_5_1(Report& r, int h) {
  for (const auto& fam : fams_5_1()) {
    r.check(fam.id + ": deg f divides deg g", fam.g.degree() % fam.f.degree() == 0,
            std::to_string(fam.f.degree()) + " | " + std::to_string(fam.g.degree()));
    r.certify(fam, h);
  }
}

void ex_5_2(Report& r, int h) {
  Poly v = cubic_1729();
  r.equal("v(x) + 728932560 = (x + 1840)(x - 249)(x - 1591)", v + Poly::constant(kA5), roots_poly({-1840, 249, 1591}));
  r.equal("v(x) - 728932560 = (x - 1840)(x + 249)(x + 1591)", v - Poly::constant(kA5), roots_poly({1840, -249, -1591}));
  r.equal("v(x) + 1678772880 = (x + 1961)(x - 656)(x - 1305)", v + Poly::constant(kB5), roots_poly({-1961, 656, 1305}));
  r.equal("v(x) - 1678772880 = (x - 1961)(x + 656)(x + 1305)", v - Poly::constant(kB5), roots_poly({1961, -656, -1305}));
  auto fam = fam_5_2();
  Poly f = symmetric_poly({1840, 249, 1591, 1961, 656, 1305});
  r.equal("f = (v^2 - 728932560^2)(v^2 - 1678772880^2)", fam.f, f);
  r.simple("g has simple rational roots", fam.g);
  auto dec = decompose(f, 3);
  r.equal("decomposition recovers F = x^3 - 1729^2x", dec.inner, v);
  r.certify(fam, h);
}

void ex_5_3(Report& r, int h) {
  auto fam = fam_5_3();
  r.equal("f = (x - 1)(x + 1)(x - 2)(x + 2)(x - 3)(x + 3)", fam.f, symmetric_poly({1, 2, 3}));
  r.certify(fam, h);
}

void ex_5_4(Report& r, int h) {
  auto fam = fam_5_4();
  r.equal("f = (x - 1)(x + 1)(x - 5)(x + 5)", fam.f, symmetric_poly({1, 5}));
  r.certify(fam, h);
}

void ex_5_5(Report& r, int h) {
  auto fam = fam_5_5();
  r.equal("f = (x + 1729)x(x - 1729)(x - 1840)(x + 249)(x + 1591)", fam.f, roots_poly({-1729, 0, 1729, 1840, -249, -1591}));
  r.equal("g = y(y - 728932560)", fam.g, Poly{0, -kA5, 1});
  r.simple("g has simple integer roots", fam.g);
  r.certify(fam, h);
}

void ex_5_6(Report& r, int h) {
  Poly F = X * pow(lin(-k1729sq), 2);
  auto sq = [](long t) { return Rational(t) * Rational(t); };
  r.equal("x(x - 1729^2)^2 - 728932560^2 = (x - 1840^2)(x - 249^2)(x - 1591^2)", F - Poly::constant(kA5 * kA5),
          lin(-sq(1840)) * lin(-sq(249)) * lin(-sq(1591)));
  r.equal("x(x - 1729^2)^2 - 1678772880^2 = (x - 1961^2)(x - 656^2)(x - 1305^2)", F - Poly::constant(kB5 * kB5),
          lin(-sq(1961)) * lin(-sq(656)) * lin(-sq(1305)));
  auto fam = fam_5_6();
  Poly f = Poly::constant(1);
  for (long t : {249, 1591, 1840, 656, 1305, 1961}) f *= lin(-sq(t));
  r.equal("f = prod (x - t^2)", fam.f, f);
  r.equal("g = (y^2 - 728932560^2)(y^2 - 1678772880^2)", fam.g, Poly{-kA5 * kA5, 0, 1} * Poly{-kB5 * kB5, 0, 1});
  r.simple("g has simple rational roots", fam.g);
  auto dec = decompose(f, 3);
  r.equal("decomposition recovers F = x(x - 1729^2)^2", dec.inner, F);
  r.certify(fam, h);
}

void ex_5_7(Report& r, int h) {
  auto fam = fam_5_7();
  r.equal("f = 26^2(x^2 - 33^2)(x^2 - 4^2)(x^2 - 32^2)(x^2 - 9^2)", fam.f, symmetric_poly({33, 4, 32, 9}) * Rational(676));
  r.equal("Pell multiplier for D = 26", recurrence_multiplier(26), BigInt(102));
  const auto& seq = std::get<PellParam>(fam.param).seq;
  bool seeds_ok = true;
  for (const auto& [x, y] : {IntPair{247, -1248}, IntPair{117, 572}}) seeds_ok = seeds_ok && 26 * (x * x - 1105) == y * y;
  r.check("seeds (247, -1248), (117, 572) solve 26(x^2 - 1105) = Y^2", seeds_ok, "");
  auto terms = generate(seq, 3);
  r.check("third term is 102 (117, 572) - (247, -1248)", terms[2] == IntPair{11687, 59592},
          terms[2].first.get_str() + ", " + terms[2].second.get_str());
  r.certify(fam, h);
}

void ex_6_1(Report& r, int h) {
  auto fams = fams_6_1();
  r.equal("6.1a: g = prod (y^2 - t^2)", fams[0].g, symmetric_poly({33, 4, 32, 9, 31, 12, 24, 23}));
  r.equal("6.1b: g = prod (y^2 - a^2)", fams[1].g, symmetric_poly({3, 40, 43, 8, 37, 45, 15, 32, 47, 23, 25, 48}));
  r.equal("6.1c: g = y prod (y^2 - a^2)", fams[2].g,
          X * symmetric_poly({1729, 1840, 249, 1591, 1961, 656, 1305, 1984, 1185, 799, 1775, 96, 1679}));
  for (const auto& fam : fams) {
    r.simple(fam.id + ": g has simple rational roots", fam.g);
    r.certify(fam, h);
  }
}

void ex_6_2(Report& r, int h) {
  auto fams = fams_6_2();
  r.equal("s = 2: g = 2^2 (y^2 - 1)(y^2 - 25)", fams[0].g, symmetric_poly({1, 5}) * Rational(4));
  r.equal("s = 3: g = 2^3 (y^2 - 1)(y^2 - 25)(y^2 - 841)", fams[1].g, symmetric_poly({1, 5, 29}) * Rational(8));
  for (const auto& fam : fams) {
    r.simple(fam.id + ": g has simple rational roots", fam.g);
    r.certify(fam, h);
  }
}

void factorization_row(Report& r, int N, long w1, long w2, const Rational& b, const Rational& u, std::optional<Rational> given_b = {}) {
  auto df = param_factorization(N, w1, w2, given_b);
  std::string tag = "N = " + std::to_string(N) + ", (" + std::to_string(w1) + ", " + std::to_string(w2) + ")";
  r.equal(tag + ": b = " + b.to_string(), df.b, b);
  r.equal(tag + ": u = " + u.to_string(), df.u, u);
  r.check(tag + ": D_N(x, b) + u = prod (x + w_i)", verify_factorization(df), "");
}

void ex_7_table(Report& r, int) {
  factorization_row(r, 1, 7, 0, 5, 7, Rational(5));
  factorization_row(r, 2, 3, -3, 5, 1, Rational(5));
  factorization_row(r, 3, 14, 77, 2401, -98098);
  factorization_row(r, 3, 23, 71, 2401, -153502);
  factorization_row(r, 4, 4, 22, 125, -23506);
  factorization_row(r, 4, 10, 20, 125, 8750);
  factorization_row(r, 4, 2, 16, 65, -7426);
  factorization_row(r, 4, 8, 14, 65, 4094);
  factorization_row(r, 6, 211, 25, 16807, Rational(7945347009886L));
  factorization_row(r, 6, 196, 49, 16807, Rational(3958608139486L));
  factorization_row(r, 6, 16, 1, 91, 1433158);
  factorization_row(r, 6, 11, 8, 91, -1288442);
  factorization_row(r, 3, 286, 13, 28561, -1111682);
}

void ex_7_third(Report& r, int h, const std::string& id) {
  auto fam = fam_third(id);
  if (id == "7.1") {
    r.equal("phi = (x - 14*77*91)(x - 23*71*94)", *fam.phi, lin(-98098) * lin(-153502));
    r.equal("f roots {-14, -77, 91, -23, -71, 94}", fam.f, roots_poly({-14, -77, 91, -23, -71, 94}));
    r.equal("g = (D_4(y, 7^3) - 98098)(D_4(y, 7^3) - 153502)", fam.g,
            (dickson(4, 343) + Poly::constant(-98098)) * (dickson(4, 343) + Poly::constant(-153502)));
    r.check("D_3(D_4(x, 7), 7^4) = D_4(D_3(x, 7), 7^3)", verify_commutation(3, 4, 7), "");
  } else if (id == "7.2") {
    r.equal("phi = (x - 23506)(x + 8750)", *fam.phi, lin(-23506) * lin(8750));
    r.equal("f = prod over +-4, +-22, +-10, +-20", fam.f, symmetric_poly({4, 22, 10, 20}));
    r.equal("D_4(x, 5^3) = (x^2 - 16)(x^2 - 484) + 23506", dickson(4, 125), symmetric_poly({4, 22}) + Poly::constant(23506));
    r.equal("D_4(x, 5^3) = (x^2 - 100)(x^2 - 400) - 8750", dickson(4, 125), symmetric_poly({10, 20}) - Poly::constant(8750));
    r.check("D_4(D_3(x, 5), 5^3) = D_3(D_4(x, 5), 5^4)", verify_commutation(4, 3, 5), "");
  } else {
    r.equal("phi = (x + 7945347009886)(x + 3958608139486)", *fam.phi,
            lin(Rational(7945347009886L)) * lin(Rational(3958608139486L)));
    r.equal("f = prod over +-211, +-25, +-236, +-196, +-49, +-245", fam.f, symmetric_poly({211, 25, 236, 196, 49, 245}));
    r.equal("D_6(x, 7^5) = prod(211, 25, 236) - 7945347009886", dickson(6, 16807),
            symmetric_poly({211, 25, 236}) - Poly::constant(Rational(7945347009886L)));
    r.equal("D_6(x, 7^5) = prod(196, 49, 245) - 3958608139486", dickson(6, 16807),
            symmetric_poly({196, 49, 245}) - Poly::constant(Rational(3958608139486L)));
    r.check("D_6(D_5(x, 7), 7^5) = D_5(D_6(x, 7), 7^6)", verify_commutation(6, 5, 7), "");
  }
  r.certify(fam, h);
}

void ex_7_fourth(Report& r, int h, const std::string& id) {
  FourthData d = fourth_data(id);
  const bool v4 = d.variant == FourthVariant::V4_10;
  PellEquation eq = fourth_kind_curve(d.variant, d.a, d.b);
  if (v4) {
    r.check("conic is v1^2 - 10v2^2 = -2600", eq.D == 10 && eq.N == -2600, eq.D.get_str() + ", " + eq.N.get_str());
    r.equal("Pell multiplier for D = 10", recurrence_multiplier(10), BigInt(38));
  } else {
    r.check("conic is v1^2 - 14v2^2 = -5096", eq.D == 14 && eq.N == -5096, eq.D.get_str() + ", " + eq.N.get_str());
    r.equal("Pell multiplier for D = 14", recurrence_multiplier(14), BigInt(30));
  }
  auto fam = fam_fourth(id);
  if (v4) {
    Rational s = pow(d.b, -2);
    r.equal("phi = (x - 7426 b^-2)(x + 4094 b^-2)", *fam.phi, lin(Rational(-7426) * s) * lin(Rational(4094) * s));
    r.equal("f = b^-4 prod over +-2, +-16, +-8, +-14", fam.f, symmetric_poly({2, 16, 8, 14}) * pow(d.b, -4));
    r.equal("D_4(x, 65) = prod(2, 16) + 7426", dickson(4, 65), symmetric_poly({2, 16}) + Poly::constant(7426));
    r.equal("D_4(x, 65) = prod(8, 14) - 4094", dickson(4, 65), symmetric_poly({8, 14}) - Poly::constant(4094));
  } else {
    Rational s = pow(d.b, -3);
    r.equal("phi = (x + 1433158 b^-3)(x - 1288442 b^-3)", *fam.phi, lin(Rational(1433158) * s) * lin(Rational(-1288442) * s));
    r.equal("f = b^-6 prod over +-16, +-1, +-17, +-11, +-8, +-19", fam.f, symmetric_poly({16, 1, 17, 11, 8, 19}) * pow(d.b, -6));
    r.equal("D_6(x, 91) = prod(16, 1, 17) - 1433158", dickson(6, 91), symmetric_poly({16, 1, 17}) - Poly::constant(1433158));
    r.equal("D_6(x, 91) = prod(11, 8, 19) + 1288442", dickson(6, 91), symmetric_poly({11, 8, 19}) + Poly::constant(1288442));
  }
  const auto& seq = std::get<PellParam>(fam.param).seq;
  auto terms = generate(seq, h);
  size_t ok = 0;
  for (const auto& t : terms) {
    IntPair c = seq.to_curve(t);
    Rational v1(c.first), v2(c.second);
    if (v4 ? verify_bridge_4_10(d.a, d.b, v1, v2) : verify_bridge_6_10(d.a, d.b, v1, v2)) ++ok;
  }
  r.check("bridge identity on the first " + std::to_string(h) + " terms", ok == terms.size(),
          std::to_string(ok) + "/" + std::to_string(terms.size()));
  r.certify(fam, h);
}

bool ideal_pair(const std::vector<long>& a, const std::vector<long>& b, int jmax) {
  std::vector<Rational> ra(a.begin(), a.end()), rb(b.begin(), b.end());
  return power_sums(ra, jmax) == power_sums(rb, jmax);
}

void ex_9_1(Report& r, int h) {
  r.check("T1, T2 have equal power sums for j = 1..11", ideal_pair(kT1, kT2, 11), "");
  auto [v, A] = data_9_1();
  std::vector<long> all = kT1;
  all.insert(all.end(), kT2.begin(), kT2.end());
  r.equal("prod over T1 u T2 = v^2 - A^2", roots_of(all), pow(v, 2) - Poly::constant(A * A));
  r.equal("v + A = prod over T1", v + Poly::constant(A), roots_of(kT1));
  auto fam = fam_9_1();
  r.equal("g = prod over T1 u T2", fam.g, roots_of(all));
  r.simple("g has simple rational roots", fam.g);
  r.check("A is nonzero", !A.is_zero(), A.to_string());
  r.certify(fam, h);
}

void ex_9_2(Report& r, int h) {
  std::vector<long> t4;
  for (long t : kT3) t4.push_back(-t);
  r.check("T3, -T3 have equal power sums for j = 1..8", ideal_pair(kT3, t4, 8), "");
  auto [v, A] = data_9_2();
  r.equal("A = prod T3", A, Rational(1688712516691200L));
  Poly yT = roots_of(kT3) + Poly::constant(A);
  bool odd = true;
  for (int i = 0; i <= yT.degree(); i += 2) odd = odd && yT.coeff(i).is_zero();
  r.check("yT(y) is odd", odd, "");
  r.equal("v(y) = y^4 - 20730y^3 + 139725633y^2 - 336534863320y + 182883894939216", v,
          Poly{Rational(182883894939216L), Rational(-336534863320L), 139725633, -20730, 1});
  Poly g = Poly::constant(1);
  for (long t : kT3) g *= lin(-Rational(t) * Rational(t));
  r.equal("prod (y - t^2) = y v(y)^2 - A^2", g, X * pow(v, 2) - Poly::constant(A * A));
  auto fam = fam_9_2();
  r.equal("f = (x - A)(x + A)", fam.f, lin(-A) * lin(A));
  r.equal("g = prod (y - t^2)", fam.g, g);
  r.check("deg g / deg f = 9/2", fam.g.degree() == 9 && fam.f.degree() == 2, "");
  r.certify(fam, h);
}

struct Entry {
  const char* id;
  const char* title;
  std::function<void(Report&, int)> run;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> e{
      {"1.1", "second kind, deg f does not divide deg g", ex_1_1},
      {"1.2", "second kind driven by x^2 = 2y^2 - 1", ex_1_2},
      {"1.3", "third kind with m = 3, n = 4, s = 1", ex_1_3},
      {"4.1", "PTE_4 blocks from 1105 = x^2 + y^2", ex_4_1},
      {"4.2", "PTE_6 blocks from 1729 = x^2 + xy + y^2", ex_4_2},
      {"4.3", "PTE_3 triples from 1729", ex_4_3},
      {"5.1", "first kind with F = x", ex_5_1},
      {"5.2", "first kind, both sides simple-rooted", ex_5_2},
      {"5.3", "second kind with G = y v(y)^2", ex_5_3},
      {"5.4", "second kind with G = (2y^2 - 1) v(y)^2", ex_5_4},
      {"5.5", "first kind, g = phi", ex_5_5},
      {"5.6", "second kind with F = x v(x)^2", ex_5_6},
      {"5.7", "second kind with F = 26x^2(x^2 - 1105)", ex_5_7},
      {"6.1", "first kind with deg G in {4, 6, 3}", ex_6_1},
      {"6.2", "second kind with G = 2y^2 - 1", ex_6_2},
      {"7.table", "Dickson factorizations D_N(x, b) + u", ex_7_table},
      {"7.1", "third kind (3, 4), b = 7", [](Report& r, int h) { ex_7_third(r, h, "7.1"); }},
      {"7.2", "third kind (4, 3), b = 5", [](Report& r, int h) { ex_7_third(r, h, "7.2"); }},
      {"7.3", "third kind (6, 5), b = 7", [](Report& r, int h) { ex_7_third(r, h, "7.3"); }},
      {"7.4", "fourth kind (4, 10), b = 65", [](Report& r, int h) { ex_7_fourth(r, h, "7.4"); }},
      {"7.5", "fourth kind (6, 10), b = 91", [](Report& r, int h) { ex_7_fourth(r, h, "7.5"); }},
      {"9.1", "first kind from an ideal PTE pair of size 12", ex_9_1},
      {"9.2", "second kind from an ideal PTE pair of size 9", ex_9_2},
  };
  return e;
}

const Entry& find_entry(const std::string& id) {
  for (const auto& e : entries()) {
    if (id == e.id) return e;
  }
  throw Error(ErrorCode::UnknownExampleId, "unknown example id '" + id + "'");
}

}  // namespace

bool ExampleReport::passed() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.passed; });
}

const std::vector<std::string>& example_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& e : entries()) out.emplace_back(e.id);
    return out;
  }();
  return ids;
}

ExampleReport run_example(const std::string& id, int horizon) {
  const Entry& e = find_entry(id);
  ExampleReport rep;
  rep.id = e.id;
  rep.title = e.title;
  Report r(rep);
  try {
    e.run(r, horizon);
  } catch (const Error& err) {
    r.check("example ran without error", false, std::string(error_name(err.code())) + ": " + err.what());
  }
  return rep;
}

std::vector<ExampleReport> run_examples(const std::string& selection, int horizon) {
  std::vector<std::string> wanted;
  if (selection == "all") {
    wanted = example_ids();
  } else {
    std::set<std::string> chosen;
    std::stringstream ss(selection);
    std::string item;
    while (std::getline(ss, item, ',')) {
      find_entry(item);
      chosen.insert(item);
    }
    if (chosen.empty()) throw Error(ErrorCode::UnknownExampleId, "empty example selection");
    for (const auto& id : example_ids()) {
      if (chosen.count(id)) wanted.push_back(id);
    }
  }
  std::vector<ExampleReport> out;
  for (const auto& id : wanted) out.push_back(run_example(id, horizon));
  return out;
}

const std::vector<std::string>& family_example_ids() {
  static const std::vector<std::string> ids{"1.1", "1.2", "1.3", "5.1", "5.2", "5.3", "5.4", "5.5", "5.6",
                                            "5.7", "6.1", "6.2", "7.1", "7.2", "7.3", "7.4", "7.5", "9.1", "9.2"};
  return ids;
}

std::vector<EquationFamily> example_families(const std::string& id) {
  static const std::map<std::string, std::function<std::vector<EquationFamily>()>> table{
      {"1.1", [] { return std::vector{fam_1_1()}; }},
      {"1.2", [] { return std::vector{fam_1_2()}; }},
      {"1.3", [] { return std::vector{fam_1_3()}; }},
      {"5.1", fams_5_1},
      {"5.2", [] { return std::vector{fam_5_2()}; }},
      {"5.3", [] { return std::vector{fam_5_3()}; }},
      {"5.4", [] { return std::vector{fam_5_4()}; }},
      {"5.5", [] { return std::vector{fam_5_5()}; }},
      {"5.6", [] { return std::vector{fam_5_6()}; }},
      {"5.7", [] { return std::vector{fam_5_7()}; }},
      {"6.1", fams_6_1},
      {"6.2", fams_6_2},
      {"7.1", [] { return std::vector{fam_third("7.1")}; }},
      {"7.2", [] { return std::vector{fam_third("7.2")}; }},
      {"7.3", [] { return std::vector{fam_third("7.3")}; }},
      {"7.4", [] { return std::vector{fam_fourth("7.4")}; }},
      {"7.5", [] { return std::vector{fam_fourth("7.5")}; }},
      {"9.1", [] { return std::vector{fam_9_1()}; }},
      {"9.2", [] { return std::vector{fam_9_2()}; }},
  };
  auto it = table.find(id);
  if (it == table.end()) throw Error(ErrorCode::UnknownExampleId, "no family for example '" + id + "'");
  return it->second();
}

}  // namespace fxgy
