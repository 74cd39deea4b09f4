#pragma once

#include <optional>
#include <vector>

#include "fxgy/poly.hpp"

namespace fxgy {

/// r + sqrt(radicand) and r - sqrt(radicand).
struct QuadraticRoots {
  Rational rational_part;
  Rational radicand;
  bool rational = false;  // radicand is the square of a rational
};

struct ObstructionReport {
  enum class Shape { Cubic34, Even46 };
  Shape shape = Shape::Cubic34;

  // Cubic34: U = (x - A1)(x - A2)(x + A1 + A2), V = Delta (y^2 - B1^2)(y^2 - B2^2).
  Rational A1, A2, Delta, B1, B2;
  /// Roots of D(z) = disc(U + z): -A1^2 A2 - A1 A2^2 +- (2/9) sqrt(3 W^3),
  /// W = A1^2 + A1 A2 + A2^2.
  QuadraticRoots d_roots;
  /// 3 W is the square of a rational.
  bool three_w_square = false;
  /// Roots of E(z) = disc(V + z): -Delta B1^2 B2^2 and the double root
  /// Delta ((B1^2 - B2^2)/2)^2.
  Rational e_simple_root;
  Rational e_double_root;
  /// Roots of D with E != 0 (counted with multiplicity one each).
  int d_roots_off_e = 0;
  int required = 1;  // [deg U / 2]

  // Even46: leading coefficients of the two even-degree sides.
  std::optional<bool> leading_signs_differ;

  bool finiteness_certified = false;
};

/// Accepts the (3, 4) shape above or a pair of even degrees (4, 6), where
/// the verdict is the leading-sign test. Throws ShapeMismatch otherwise.
ObstructionReport disc_obstruction(const Poly& U, const Poly& V);

/// a = sa w (2uv), b = sb w (3u^2 - v^2), c = sc w (3u^2 + v^2).
struct ConeParametrization {
  Rational u, v, w;
  int sa = 1, sb = 1, sc = 1;
};

/// Rational point of 3a^2 + b^2 = c^2 written through (u, v, w) with u, v
/// coprime integers. Throws NotOnCone.
ConeParametrization parametrize_3a2b2(const Rational& a, const Rational& b, const Rational& c);

}  // namespace fxgy
