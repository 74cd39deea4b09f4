#include "fxgy/stdpairs.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "fxgy/dickson.hpp"
#include "fxgy/error.hpp"
#include "fxgy/roots.hpp"

namespace fxgy {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorCode::InvalidParameters, msg); }

void require_nonzero(const Rational& r, const char* name) {
  if (r.is_zero()) bad(std::string(name) + " must be nonzero");
}

/// alpha^(-e) as an exact rational (e may be any integer).
Rational inverse_power(const Rational& alpha, int e) { return pow(alpha, -e); }

}  // namespace

std::string_view kind_name(PairKind kind) {
  switch (kind) {
    case PairKind::First: return "FIRST";
    case PairKind::Second: return "SECOND";
    case PairKind::Third: return "THIRD";
    case PairKind::Fourth: return "FOURTH";
    case PairKind::Fifth: return "FIFTH";
  }
  return "?";
}

PairKind kind_of(const StandardPair& sp) { return static_cast<PairKind>(sp.index()); }

std::pair<Poly, Poly> realize(const StandardPair& sp) {
  const Poly x = Poly::x();
  if (auto* a = std::get_if<FirstKind>(&sp)) {
    if (a->q < 1 || a->p < 0 || a->p >= a->q || std::gcd(a->p, a->q) != 1) bad("FIRST: need 0 <= p < q, gcd(p, q) = 1");
    require_nonzero(a->alpha, "alpha");
    if (a->v.is_zero()) bad("FIRST: v must be nonzero");
    if (a->p + a->v.degree() <= 0) bad("FIRST: need p + deg v > 0");
    return {pow(x, a->q), a->alpha * pow(x, a->p) * pow(a->v, a->q)};
  }
  if (auto* a = std::get_if<SecondKind>(&sp)) {
    require_nonzero(a->alpha, "alpha");
    require_nonzero(a->beta, "beta");
    if (a->v.is_zero()) bad("SECOND: v must be nonzero");
    return {pow(x, 2), Poly{a->beta, 0, a->alpha} * pow(a->v, 2)};
  }
  if (auto* a = std::get_if<ThirdKind>(&sp)) {
    if (a->mu < 1 || a->nu < 1 || std::gcd(a->mu, a->nu) != 1) bad("THIRD: need gcd(mu, nu) = 1");
    require_nonzero(a->alpha, "alpha");
    return {dickson(a->mu, pow(a->alpha, a->nu)), dickson(a->nu, pow(a->alpha, a->mu))};
  }
  if (auto* a = std::get_if<FourthKind>(&sp)) {
    if (a->mu < 1 || a->nu < 1 || std::gcd(a->mu, a->nu) != 2) bad("FOURTH: need gcd(mu, nu) = 2");
    require_nonzero(a->alpha, "alpha");
    require_nonzero(a->beta, "beta");
    return {dickson(a->mu, a->alpha) * inverse_power(a->alpha, a->mu / 2),
            dickson(a->nu, a->beta) * (-inverse_power(a->beta, a->nu / 2))};
  }
  const auto& a = std::get<FifthKind>(sp);
  require_nonzero(a.alpha, "alpha");
  return {pow(Poly{-1, 0, a.alpha}, 3), Poly{0, 0, 0, -4, 3}};
}

DicksonFactorization param_factorization(int N, const Rational& w1, const Rational& w2,
                                         const std::optional<Rational>& b) {
  DicksonFactorization df;
  df.N = N;
  switch (N) {
    case 1:
      if (!b) bad("N = 1 needs b");
      df.b = *b;
      df.w = {w1};
      df.u = w1;
      break;
    case 2:
      if (!b) bad("N = 2 needs b");
      df.b = *b;
      df.w = {w1, -w1};
      df.u = Rational(2) * *b - w1 * w1;
      break;
    case 3:
      df.w = {w1, w2, -w1 - w2};
      df.b = (w1 * w1 + w1 * w2 + w2 * w2) / Rational(3);
      df.u = -w1 * w1 * w2 - w1 * w2 * w2;
      break;
    case 4: {
      df.w = {w1, w2, -w1, -w2};
      Rational s1 = w1 * w1, s2 = w2 * w2;
      df.b = (s1 + s2) / Rational(4);
      df.u = -(s1 * s1 - Rational(6) * s1 * s2 + s2 * s2) / Rational(8);
      break;
    }
    case 6: {
      Rational w3 = w1 + w2;
      df.w = {w1, w2, w3, -w1, -w2, -w3};
      Rational W = w1 * w1 + w1 * w2 + w2 * w2;
      df.b = W / Rational(3);
      Rational p = w1 * w2 * w3;
      df.u = Rational(2) * W * W * W / Rational(27) - p * p;
      break;
    }
    default:
      bad("N must be one of 1, 2, 3, 4, 6");
  }
  if (df.b.is_zero()) throw Error(ErrorCode::ZeroB, "parametrization gives b = 0");
  std::set<Rational> distinct(df.w.begin(), df.w.end());
  if (distinct.size() != df.w.size()) throw Error(ErrorCode::DegenerateRoots, "parametrization gives repeated roots");
  return df;
}

bool verify_factorization(const DicksonFactorization& df) {
  if (df.b.is_zero() || df.N < 1 || static_cast<int>(df.w.size()) != df.N) return false;
  std::vector<Rational> roots;
  for (const auto& w : df.w) roots.push_back(-w);
  return dickson(df.N, df.b) + Poly::constant(df.u) == from_roots(1, roots);
}

std::vector<DegreeTriple> classify_degrees(int k, int l, bool both_simple) {
  if (k < 1 || l < 1) throw Error(ErrorCode::InvalidInput, "classify: degrees must be positive");
  auto in = [](int v, std::initializer_list<int> set) { return std::find(set.begin(), set.end(), v) != set.end(); };
  std::vector<DegreeTriple> out;
  const int g = std::gcd(k, l);
  for (int s = 1; s <= g; ++s) {
    if (g % s != 0) continue;
    int m = k / s, n = l / s;
    bool ok = in(m, {1, 2, 3, 4, 6}) || in(n, {1, 2});
    if (both_simple) ok = k <= l ? in(m, {1, 2}) : in(n, {1, 2});
    if (ok) out.push_back({m, n, s});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<KindConstraint> feasible_kinds(const Poly& f) {
  if (f.degree() < 1 || !is_simple_rational_rooted(f)) {
    throw Error(ErrorCode::NotSimpleRooted, "feasible_kinds: f must have only simple rational roots");
  }
  const int k = f.degree();
  auto divisors_in = [k](std::initializer_list<int> set) {
    std::vector<int> out;
    for (int d : set) {
      if (k % d == 0) out.push_back(d);
    }
    return out;
  };
  std::vector<KindConstraint> out;
  out.push_back({PairKind::First, true, {}, "min(deg F, deg G) <= 2"});
  out.push_back({PairKind::Second, true, {}, "min(deg F, deg G) <= 2"});
  auto third = divisors_in({1, 2, 3, 4, 6});
  out.push_back({PairKind::Third, !third.empty(), third, "deg F in {1,2,3,4,6}"});
  auto fourth = divisors_in({2, 4, 6});
  out.push_back({PairKind::Fourth, !fourth.empty(), fourth, "deg F in {2,4,6}"});
  out.push_back({PairKind::Fifth, false, {}, "F' has a multiple root"});
  return out;
}

}  // namespace fxgy
