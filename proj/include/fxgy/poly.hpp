#pragma once

#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fxgy/rational.hpp"

namespace fxgy {

/// Dense univariate polynomial over Q. Coefficients are ascending; the zero
/// polynomial is the empty sequence and every other value has a nonzero
/// leading coefficient.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<Rational> coeffs) : Poly(std::vector<Rational>(coeffs)) {}

  static Poly constant(const Rational& c);
  static Poly x();
  static Poly monomial(const Rational& c, int degree);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int i) const;
  const Rational& leading() const;

  Rational operator()(const Rational& x) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) = default;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

Poly add(const Poly& p, const Poly& q);
Poly mul(const Poly& p, const Poly& q);
/// compose(p, q)(x) = p(q(x)).
Poly compose(const Poly& p, const Poly& q);
Rational evaluate(const Poly& p, const Rational& x);

Poly pow(const Poly& p, int e);
Poly derivative(const Poly& p);
Poly monic(const Poly& p);

/// Quotient and remainder; throws DivisionByZero for a zero divisor.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Exact quotient; throws InvalidInput if the remainder is nonzero.
Poly exact_div(const Poly& a, const Poly& b);
/// Monic gcd (zero when both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);

/// lead * prod (x - r).
Poly from_roots(const Rational& lead, std::span<const Rational> roots);

/// The affine substitution x -> a*x + b with a != 0.
class LinearSubst {
 public:
  LinearSubst(Rational a, Rational b);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  LinearSubst inverse() const;
  Poly as_poly() const { return Poly{b_, a_}; }
  Rational apply(const Rational& x) const { return a_ * x + b_; }

 private:
  Rational a_;
  Rational b_;
};

/// p(a*x + b).
Poly similar(const Poly& p, const LinearSubst& s);

/// [sum r, sum r^2, ..., sum r^jmax].
std::vector<Rational> power_sums(std::span<const Rational> roots, int jmax);

/// Power sums of the roots of a nonconstant polynomial, read off its
/// coefficients with Newton's identities.
std::vector<Rational> newton_power_sums(const Poly& p, int jmax);

/// Human-readable form in descending powers, e.g. "x^2 - 36".
std::string to_string(const Poly& p, char var = 'x');
std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace fxgy
