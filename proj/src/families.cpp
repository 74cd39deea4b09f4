#include "fxgy/families.hpp"

#include <algorithm>
#include <numeric>

#include "fxgy/dickson.hpp"
#include "fxgy/error.hpp"
#include "fxgy/roots.hpp"

namespace fxgy {

BiPoly BiPoly::p() {
  BiPoly b;
  b.terms_.push_back({Rational(1), 1, 0});
  return b;
}

BiPoly BiPoly::q() {
  BiPoly b;
  b.terms_.push_back({Rational(1), 0, 1});
  return b;
}

BiPoly BiPoly::constant(const Rational& c) {
  BiPoly b;
  if (!c.is_zero()) b.terms_.push_back({c, 0, 0});
  return b;
}

BiPoly BiPoly::in_p(const Poly& poly) {
  BiPoly b;
  for (int i = 0; i <= poly.degree(); ++i) {
    if (!poly.coeff(i).is_zero()) b.terms_.push_back({poly.coeff(i), i, 0});
  }
  return b;
}

BiPoly BiPoly::in_q(const Poly& poly) {
  BiPoly b;
  for (int j = 0; j <= poly.degree(); ++j) {
    if (!poly.coeff(j).is_zero()) b.terms_.push_back({poly.coeff(j), 0, j});
  }
  return b;
}

Rational BiPoly::operator()(const Rational& p, const Rational& q) const {
  Rational acc;
  for (const auto& t : terms_) acc += t.c * pow(p, t.i) * pow(q, t.j);
  return acc;
}

void BiPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  });
  std::vector<Term> merged;
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().i == t.i && merged.back().j == t.j) {
      merged.back().c += t.c;
    } else {
      merged.push_back(t);
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.c.is_zero(); });
  terms_ = std::move(merged);
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  normalize();
  return *this;
}

BiPoly& BiPoly::operator*=(const BiPoly& o) {
  std::vector<Term> out;
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) out.push_back({a.c * b.c, a.i + b.i, a.j + b.j});
  }
  terms_ = std::move(out);
  normalize();
  return *this;
}

std::string to_string(const BiPoly& b) {
  if (b.terms().empty()) return "0";
  std::string out;
  auto power = [](char v, int e) { return e == 1 ? std::string(1, v) : std::string(1, v) + "^" + std::to_string(e); };
  for (const auto& t : b.terms()) {
    Rational mag = abs(t.c);
    if (out.empty()) {
      if (t.c.sign() < 0) out += "-";
    } else {
      out += t.c.sign() < 0 ? " - " : " + ";
    }
    std::vector<std::string> factors;
    if (mag != Rational(1) || (t.i == 0 && t.j == 0)) factors.push_back(mag.to_string());
    if (t.i > 0) factors.push_back(power('p', t.i));
    if (t.j > 0) factors.push_back(power('q', t.j));
    for (size_t k = 0; k < factors.size(); ++k) out += (k ? "*" : "") + factors[k];
  }
  return out;
}

namespace {

void require_simple(const Poly& p, const char* what) {
  if (p.degree() < 1 || !is_simple_rational_rooted(p)) {
    throw Error(ErrorCode::NotSimpleRooted, std::string(what) + " must have only simple rational roots");
  }
}

std::pair<Rational, Rational> eval_pell(const PellParam& pp, const IntPair& term) {
  Rational p(term.first), q(term.second);
  return {pp.map_x(p, q), pp.map_y(p, q)};
}

Poly from_negated(const std::vector<Rational>& w) {
  std::vector<Rational> roots;
  for (const auto& v : w) roots.push_back(-v);
  return from_roots(1, roots);
}

}  // namespace

EquationFamily build_first_kind(const Poly& phi, const Poly& G, bool mirrored) {
  if (G.degree() < 1) throw Error(ErrorCode::InvalidInput, "first kind: G must be nonconstant");
  EquationFamily fam;
  fam.kind = PairKind::First;
  Poly composed = compose(phi, G);
  fam.phi = phi;
  if (!mirrored) {
    require_simple(phi, "phi");
    fam.f = phi;
    fam.g = composed;
    fam.F = Poly::x();
    fam.G = G;
    fam.param = PolyParam{G, Poly::x()};
  } else {
    require_simple(composed, "phi(G)");
    fam.f = composed;
    fam.g = phi;
    fam.F = G;
    fam.G = Poly::x();
    fam.param = PolyParam{Poly::x(), G};
  }
  return fam;
}

EquationFamily build_second_kind(const Poly& phi, const Poly& G, const SolutionSource& source, bool mirrored) {
  if (G.degree() < 1) throw Error(ErrorCode::InvalidInput, "second kind: G must be nonconstant");
  const Poly sq = pow(Poly::x(), 2);
  EquationFamily fam;
  fam.kind = PairKind::Second;
  fam.phi = phi;
  if (!mirrored) {
    fam.f = compose(phi, sq);
    fam.g = compose(phi, G);
    fam.F = sq;
    fam.G = G;
  } else {
    fam.f = compose(phi, G);
    fam.g = compose(phi, sq);
    fam.F = G;
    fam.G = sq;
  }
  require_simple(fam.f, "f");
  if (odd_multiplicity_root_count(G) > 2) {
    throw Error(ErrorCode::OddMultiplicityViolation, "second kind: G has more than two roots of odd multiplicity");
  }
  // The source must solve F(x) = G(y) for the oriented pair.
  const Poly& Fo = *fam.F;
  const Poly& Go = *fam.G;
  if (const auto* pp = std::get_if<PolyParam>(&source)) {
    if (compose(Fo, pp->x) != compose(Go, pp->y)) {
      throw Error(ErrorCode::SolutionSourceInvalid, "second kind: parametrization does not solve the square equation");
    }
  } else {
    const auto& pell = std::get<PellParam>(source);
    for (const auto* s : {&pell.seq.seed0, &pell.seq.seed1}) {
      auto [x, y] = eval_pell(pell, *s);
      if (Fo(x) != Go(y)) {
        throw Error(ErrorCode::SolutionSourceInvalid, "second kind: sequence seed does not solve the square equation");
      }
    }
  }
  fam.param = source;
  return fam;
}

EquationFamily build_third_kind(int Nf, int Ng, const Rational& b, const std::vector<std::pair<Rational, Rational>>& reps) {
  if (Nf != 3 && Nf != 4 && Nf != 6) throw Error(ErrorCode::InvalidParameters, "third kind: N_f must be 3, 4 or 6");
  if (Ng < 1 || std::gcd(Nf, Ng) != 1) throw Error(ErrorCode::InvalidParameters, "third kind: need gcd(N_f, N_g) = 1");
  if (b.is_zero()) throw Error(ErrorCode::ZeroB, "third kind: b must be nonzero");
  if (reps.empty()) throw Error(ErrorCode::InvalidInput, "third kind: need at least one representation");
  const Rational bf = pow(b, Ng);
  EquationFamily fam;
  fam.kind = PairKind::Third;
  fam.F = dickson(Nf, bf);
  fam.G = dickson(Ng, pow(b, Nf));
  Poly f = Poly::constant(1), phi = Poly::constant(1);
  for (const auto& [w1, w2] : reps) {
    auto df = param_factorization(Nf, w1, w2);
    if (df.b != bf) {
      throw Error(ErrorCode::MismatchedB, "third kind: (" + w1.to_string() + ", " + w2.to_string() + ") gives b = " +
                                              df.b.to_string() + ", expected " + bf.to_string());
    }
    f *= from_negated(df.w);
    phi *= Poly{df.u, 1};
  }
  require_simple(f, "f");
  fam.f = f;
  fam.phi = phi;
  fam.g = compose(phi, *fam.G);
  fam.param = PolyParam{dickson(Ng, b), dickson(Nf, b)};
  return fam;
}

PellEquation fourth_kind_curve(FourthVariant variant, const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) throw Error(ErrorCode::InvalidParameters, "fourth kind: a and b must be nonzero");
  // b^e v1^2 + a v2^2 = 4ab  <=>  v1^2 - (-a/b^e) v2^2 = 4a/b^(e-1)
  const int e = variant == FourthVariant::V4_10 ? 2 : 3;
  Rational D = -a / pow(b, e);
  Rational N = Rational(4) * a / pow(b, e - 1);
  if (!D.is_integer() || !N.is_integer()) {
    throw Error(ErrorCode::InvalidParameters, "fourth kind: the conic is not an integral Pell equation");
  }
  return PellEquation(D.num(), N.num());
}

EquationFamily build_fourth_kind(FourthVariant variant, const Rational& a, const Rational& b,
                                 const std::vector<std::pair<Rational, Rational>>& reps, const SolutionSeq& seq) {
  if (a.is_zero() || b.is_zero()) throw Error(ErrorCode::InvalidParameters, "fourth kind: a and b must be nonzero");
  if (reps.empty()) throw Error(ErrorCode::InvalidInput, "fourth kind: need at least one representation");
  const bool v4 = variant == FourthVariant::V4_10;
  for (const auto* s : {&seq.seed0, &seq.seed1}) {
    IntPair c = seq.to_curve(*s);
    Rational v1(c.first), v2(c.second);
    bool ok = v4 ? on_conic_4_10(a, b, v1, v2) : on_conic_6_10(a, b, v1, v2);
    if (!ok) throw Error(ErrorCode::ConstraintViolated, "fourth kind: seed is not on the bridge conic");
  }
  const int Nf = v4 ? 4 : 6;
  const int k = Nf / 2;
  const Rational scale = pow(b, -k);
  EquationFamily fam;
  fam.kind = PairKind::Fourth;
  fam.F = dickson(Nf, b) * scale;
  fam.G = dickson(10, a) * (-pow(a, -5));
  Poly f = Poly::constant(1), phi = Poly::constant(1);
  for (const auto& [w1, w2] : reps) {
    auto df = param_factorization(Nf, w1, w2);
    if (df.b != b) {
      throw Error(ErrorCode::MismatchedB, "fourth kind: (" + w1.to_string() + ", " + w2.to_string() + ") gives b = " +
                                              df.b.to_string() + ", expected " + b.to_string());
    }
    f *= from_negated(df.w) * scale;
    phi *= Poly{df.u * scale, 1};
  }
  require_simple(f, "f");
  fam.f = f;
  fam.phi = phi;
  fam.g = compose(phi, *fam.G);
  PellParam pp{seq, {}, {}};
  Poly d5 = dickson(5, b) * pow(b, -2);
  BiPoly v1 = BiPoly::p(), v2 = BiPoly::q();
  if (seq.swapped) std::swap(v1, v2);
  // Sequence terms are (v1, v2) on the curve.
  if (!seq.swapped) {
    pp.map_x = BiPoly::in_q(d5);
  } else {
    pp.map_x = BiPoly::in_p(d5);
  }
  pp.map_y = v4 ? v1 * v2 : v1 * (v2 * v2 + BiPoly::constant(-b));
  fam.param = std::move(pp);
  return fam;
}

Certificate verify_family(const EquationFamily& fam, int horizon) {
  Certificate cert;
  cert.family_id = fam.id;
  auto record = [&cert](std::string name, bool ok, std::string detail) {
    cert.transcript.push_back({std::move(name), ok, std::move(detail)});
  };

  bool simple = false;
  try {
    simple = fam.f.degree() >= 1 && is_simple_rational_rooted(fam.f);
  } catch (const Error&) {
  }
  record("f has simple rational roots", simple, "deg f = " + std::to_string(fam.f.degree()));

  if (fam.phi && fam.F) {
    record("f = phi(F)", compose(*fam.phi, *fam.F) == fam.f, "");
  }
  if (fam.phi && fam.G) {
    record("g = phi(G)", compose(*fam.phi, *fam.G) == fam.g, "");
  }

  if (const auto* pp = std::get_if<PolyParam>(&fam.param)) {
    cert.check_kind = "polynomial-identity";
    Poly diff = compose(fam.f, pp->x) - compose(fam.g, pp->y);
    record("f(x(X)) - g(y(X)) = 0", diff.is_zero(), diff.is_zero() ? "0" : to_string(diff, 'X'));
  } else {
    const auto& pell = std::get<PellParam>(fam.param);
    cert.check_kind = "finite-horizon";
    cert.horizon = horizon;
    std::vector<IntPair> terms;
    try {
      terms = generate(pell.seq, horizon);
      record("sequence on curve", true, std::to_string(terms.size()) + " terms");
    } catch (const Error& e) {
      record("sequence on curve", false, e.what());
    }
    for (size_t i = 0; i < terms.size(); ++i) {
      auto [x, y] = eval_pell(pell, terms[i]);
      Rational fx = fam.f(x), gy = fam.g(y);
      std::string at = "term " + std::to_string(i) + ": x = " + x.to_string() + ", y = " + y.to_string();
      record("f(x) = g(y)", fx == gy, at + ", f(x) = " + fx.to_string());
      if (fam.F && fam.G) {
        Rational Fx = (*fam.F)(x), Gy = (*fam.G)(y);
        record("F(x) = G(y)", Fx == Gy, at + ", F(x) = " + Fx.to_string());
      }
    }
  }
  cert.verified = !cert.transcript.empty() &&
                  std::all_of(cert.transcript.begin(), cert.transcript.end(), [](const CheckRecord& r) { return r.passed; });
  return cert;
}

}  // namespace fxgy
