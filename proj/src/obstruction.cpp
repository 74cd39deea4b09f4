#include "fxgy/obstruction.hpp"

#include <algorithm>

#include "fxgy/error.hpp"
#include "fxgy/roots.hpp"

namespace fxgy {

namespace {

[[noreturn]] void mismatch(const std::string& msg) { throw Error(ErrorCode::ShapeMismatch, msg); }

int sign_of(const Rational& r) { return r.sign() < 0 ? -1 : 1; }

}  // namespace

ObstructionReport disc_obstruction(const Poly& U, const Poly& V) {
  ObstructionReport rep;
  if (U.degree() == 4 && V.degree() == 6) {
    rep.shape = ObstructionReport::Shape::Even46;
    rep.leading_signs_differ = U.leading().sign() != V.leading().sign();
    rep.finiteness_certified = *rep.leading_signs_differ;
    return rep;
  }
  if (U.degree() != 3 || V.degree() != 4) mismatch("disc_obstruction: need degrees (3, 4) or (4, 6)");
  if (U.leading() != Rational(1)) mismatch("disc_obstruction: U must be monic");

  auto ur = rational_roots(U);
  if (ur.size() != 3 || std::adjacent_find(ur.begin(), ur.end()) != ur.end()) {
    mismatch("disc_obstruction: U needs three distinct rational roots");
  }
  if (!(ur[0] + ur[1] + ur[2]).is_zero()) mismatch("disc_obstruction: roots of U must sum to 0");

  for (int i : {1, 3}) {
    if (!V.coeff(i).is_zero()) mismatch("disc_obstruction: V must be even");
  }
  auto vr = rational_roots(V);
  if (vr.size() != 4 || std::adjacent_find(vr.begin(), vr.end()) != vr.end() || vr[2].sign() <= 0) {
    mismatch("disc_obstruction: V needs four distinct nonzero rational roots");
  }

  rep.A1 = ur[0];
  rep.A2 = ur[1];
  rep.Delta = V.leading();
  rep.B1 = vr[3];
  rep.B2 = vr[2];

  const Rational& a1 = rep.A1;
  const Rational& a2 = rep.A2;
  Rational W = a1 * a1 + a1 * a2 + a2 * a2;
  rep.d_roots.rational_part = -a1 * a1 * a2 - a1 * a2 * a2;
  // ((2/9) sqrt(3 W^3))^2 = 4 W^3 / 27
  rep.d_roots.radicand = Rational(4) * W * W * W / Rational(27);
  Rational root;
  rep.d_roots.rational = rational_sqrt(rep.d_roots.radicand, root);
  rep.three_w_square = rational_sqrt(Rational(3) * W, root);

  Rational s1 = rep.B1 * rep.B1, s2 = rep.B2 * rep.B2;
  rep.e_simple_root = -rep.Delta * s1 * s2;
  Rational half = (s1 - s2) / Rational(2);
  rep.e_double_root = rep.Delta * half * half;

  if (!rep.d_roots.rational) {
    rep.d_roots_off_e = 2;
  } else {
    rational_sqrt(rep.d_roots.radicand, root);
    for (const Rational& z : {rep.d_roots.rational_part + root, rep.d_roots.rational_part - root}) {
      if (z != rep.e_simple_root && z != rep.e_double_root) ++rep.d_roots_off_e;
    }
  }
  rep.required = U.degree() / 2;
  rep.finiteness_certified = rep.d_roots_off_e >= rep.required;
  return rep;
}

ConeParametrization parametrize_3a2b2(const Rational& a, const Rational& b, const Rational& c) {
  if (Rational(3) * a * a + b * b != c * c) throw Error(ErrorCode::NotOnCone, "parametrize_3a2b2: 3a^2 + b^2 != c^2");
  ConeParametrization out;
  if (a.is_zero()) {
    // 3u^2 - v^2 = -1 and 3u^2 + v^2 = 1 at (u, v) = (0, 1).
    out.u = Rational(0);
    out.v = Rational(1);
    out.w = abs(c);
    out.sb = -sign_of(b);
    out.sc = sign_of(c);
  } else {
    // With |a|, |b|, |c| > 0: c + b = 6 w u^2 and a = 2 w u v give u/v = (b + c)/(3a).
    Rational pa = abs(a), pb = abs(b), pc = abs(c);
    Rational t = (pb + pc) / (Rational(3) * pa);
    out.u = Rational(t.num());
    out.v = Rational(t.den());
    out.w = (pb + pc) / (Rational(6) * out.u * out.u);
    out.sa = sign_of(a);
    out.sb = sign_of(b);
    out.sc = sign_of(c);
  }
  const Rational& u = out.u;
  const Rational& v = out.v;
  const Rational& w = out.w;
  bool ok = Rational(out.sa) * w * Rational(2) * u * v == a &&
            Rational(out.sb) * w * (Rational(3) * u * u - v * v) == b &&
            Rational(out.sc) * w * (Rational(3) * u * u + v * v) == c;
  if (!ok) throw Error(ErrorCode::NotOnCone, "parametrize_3a2b2: round trip failed");
  return out;
}

}  // namespace fxgy
