#include "fxgy/dickson.hpp"

#include <numeric>

#include "fxgy/error.hpp"

namespace fxgy {

namespace {

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

void check_args(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) throw Error(ErrorCode::ZeroDelta, "bridge: a and b must be nonzero");
}

}  // namespace

Poly dickson(int mu, const Rational& delta) {
  if (mu < 1) throw Error(ErrorCode::InvalidInput, "dickson: mu must be positive");
  if (delta.is_zero()) throw Error(ErrorCode::ZeroDelta, "dickson: delta must be nonzero");
  std::vector<Rational> c(static_cast<size_t>(mu) + 1);
  const Rational minus_delta = -delta;
  Rational power(1);
  for (int i = 0; 2 * i <= mu; ++i) {
    auto n = static_cast<unsigned long>(mu - i);
    Rational d = Rational(BigInt(mu) * binomial(n, static_cast<unsigned long>(i)), BigInt(mu - i)) * power;
    c[static_cast<size_t>(mu - 2 * i)] = d;
    power *= minus_delta;
  }
  return Poly(std::move(c));
}

bool verify_laurent_identity(int mu, const Rational& delta, int samples) {
  Poly d = dickson(mu, delta);
  for (int k = 1; k <= samples; ++k) {
    Rational y(k);
    Rational other = delta / y;
    if (d(y + other) != pow(y, mu) + pow(other, mu)) return false;
  }
  return true;
}

bool verify_commutation(int m, int n, const Rational& b) {
  if (m < 1 || n < 1) throw Error(ErrorCode::InvalidInput, "verify_commutation: degrees must be positive");
  if (std::gcd(m, n) != 1) throw Error(ErrorCode::NotCoprime, "verify_commutation: gcd(m, n) != 1");
  if (b.is_zero()) throw Error(ErrorCode::ZeroDelta, "verify_commutation: b must be nonzero");
  Poly lhs = compose(dickson(m, pow(b, n)), dickson(n, b));
  Poly rhs = compose(dickson(n, pow(b, m)), dickson(m, b));
  return lhs == rhs;
}

bool on_conic_4_10(const Rational& a, const Rational& b, const Rational& v1, const Rational& v2) {
  return b * b * v1 * v1 + a * v2 * v2 == Rational(4) * a * b;
}

bool on_conic_6_10(const Rational& a, const Rational& b, const Rational& v1, const Rational& v2) {
  return b * b * b * v1 * v1 + a * v2 * v2 == Rational(4) * a * b;
}

bool verify_bridge_4_10(const Rational& a, const Rational& b, const Rational& v1, const Rational& v2) {
  check_args(a, b);
  if (!on_conic_4_10(a, b, v1, v2)) throw Error(ErrorCode::ConstraintViolated, "bridge 4/10: b^2 v1^2 + a v2^2 != 4ab");
  Rational x = dickson(5, b)(v2) / (b * b);
  Rational lhs = dickson(4, b)(x) / pow(b, 2);
  Rational rhs = -dickson(10, a)(v1 * v2) / pow(a, 5);
  return lhs == rhs;
}

bool verify_bridge_6_10(const Rational& a, const Rational& b, const Rational& v1, const Rational& v2) {
  check_args(a, b);
  if (!on_conic_6_10(a, b, v1, v2)) throw Error(ErrorCode::ConstraintViolated, "bridge 6/10: b^3 v1^2 + a v2^2 != 4ab");
  Rational x = dickson(5, b)(v2) / (b * b);
  Rational lhs = dickson(6, b)(x) / pow(b, 3);
  Rational rhs = -dickson(10, a)(v1 * (v2 * v2 - b)) / pow(a, 5);
  return lhs == rhs;
}

}  // namespace fxgy
