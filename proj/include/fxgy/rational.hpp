#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace fxgy {

using BigInt = mpz_class;

BigInt parse_bigint(std::string_view text);
BigInt gcd(const BigInt& a, const BigInt& b);
BigInt isqrt(const BigInt& n);
bool is_perfect_square(const BigInt& n);

/// Exact rational number, always stored in lowest terms with a positive
/// denominator.
class Rational {
 public:
  Rational() = default;

  template <std::signed_integral T>
  Rational(T v) : value_(static_cast<long>(v)) {}

  template <std::unsigned_integral T>
  Rational(T v) : value_(static_cast<unsigned long>(v)) {}

  Rational(const BigInt& v) : value_(v) {}
  Rational(const BigInt& num, const BigInt& den);

  explicit Rational(const mpq_class& v) : value_(v) { value_.canonicalize(); }

  /// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
  static Rational parse(std::string_view text);

  const BigInt& num() const { return value_.get_num(); }
  const BigInt& den() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// "p" when the denominator is 1, "p/q" otherwise.
  std::string to_string() const;

  Rational operator-() const { return Rational(mpq_class(-value_)); }

  Rational& operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
  }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  mpq_class value_;
};

Rational abs(const Rational& r);
/// Integer power; negative exponents invert (zero base throws).
Rational pow(const Rational& r, int e);
BigInt floor(const Rational& r);
BigInt ceil(const Rational& r);
/// Exact square root when r is the square of a rational.
bool rational_sqrt(const Rational& r, Rational& root);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace fxgy
