#include "fxgy/rational.hpp"

#include <cctype>
#include <ostream>

#include "fxgy/error.hpp"

namespace fxgy {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool valid_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

BigInt parse_bigint(std::string_view text) {
  text = trim(text);
  if (!valid_integer_text(text)) {
    throw Error(ErrorCode::InvalidInput, "not an integer: '" + std::string(text) + "'");
  }
  if (text.front() == '+') text.remove_prefix(1);
  return BigInt(std::string(text), 10);
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

BigInt isqrt(const BigInt& n) {
  if (n < 0) throw Error(ErrorCode::InvalidInput, "isqrt of a negative integer");
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_perfect_square(const BigInt& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  text = trim(text);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text));
  BigInt num = parse_bigint(text.substr(0, slash));
  std::string_view den_text = trim(text.substr(slash + 1));
  if (!den_text.empty() && den_text.front() == '-') {
    throw Error(ErrorCode::InvalidInput, "denominator must be positive: '" + std::string(text) + "'");
  }
  BigInt den = parse_bigint(den_text);
  if (den == 0) throw Error(ErrorCode::InvalidInput, "zero denominator: '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string Rational::to_string() const { return value_.get_str(10); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  value_ /= o.value_;
  return *this;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& r, int e) {
  if (e < 0) return pow(Rational(1) / r, -e);
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), r.num().get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), r.den().get_mpz_t(), static_cast<unsigned long>(e));
  return Rational(n, d);
}

BigInt floor(const Rational& r) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
  return q;
}

BigInt ceil(const Rational& r) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
  return q;
}

bool rational_sqrt(const Rational& r, Rational& root) {
  if (r.sign() < 0) return false;
  if (!is_perfect_square(r.num()) || !is_perfect_square(r.den())) return false;
  root = Rational(isqrt(r.num()), isqrt(r.den()));
  return true;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace fxgy
