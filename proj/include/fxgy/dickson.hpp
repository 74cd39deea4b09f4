#pragma once

#include "fxgy/poly.hpp"

namespace fxgy {

/// D_mu(x, delta) = sum_i mu/(mu-i) * C(mu-i, i) * (-delta)^i * x^(mu-2i).
/// Throws ZeroDelta, InvalidInput for mu < 1.
Poly dickson(int mu, const Rational& delta);

/// Checks D_mu(y + delta/y, delta) = y^mu + (delta/y)^mu at y = 1..samples.
bool verify_laurent_identity(int mu, const Rational& delta, int samples);

/// D_m(D_n(x, b), b^n) == D_n(D_m(x, b), b^m) coefficientwise.
/// Throws NotCoprime, ZeroDelta.
bool verify_commutation(int m, int n, const Rational& b);

/// b^2 v1^2 + a v2^2 == 4ab.
bool on_conic_4_10(const Rational& a, const Rational& b, const Rational& v1, const Rational& v2);
/// b^3 v1^2 + a v2^2 == 4ab.
bool on_conic_6_10(const Rational& a, const Rational& b, const Rational& v1, const Rational& v2);

/// b^-2 D_4(b^-2 D_5(v2, b), b) == -a^-5 D_10(v1 v2, a), given the conic.
/// Throws ConstraintViolated off the conic.
bool verify_bridge_4_10(const Rational& a, const Rational& b, const Rational& v1, const Rational& v2);

/// b^-3 D_6(b^-2 D_5(v2, b), b) == -a^-5 D_10(v1 (v2^2 - b), a), given the
/// conic. Throws ConstraintViolated.
bool verify_bridge_6_10(const Rational& a, const Rational& b, const Rational& v1, const Rational& v2);

}  // namespace fxgy
