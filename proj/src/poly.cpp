#include "fxgy/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "fxgy/error.hpp"

namespace fxgy {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::x() { return Poly{Rational(0), Rational(1)}; }

Poly Poly::monomial(const Rational& c, int degree) {
  if (degree < 0) throw Error(ErrorCode::InvalidInput, "negative monomial degree");
  std::vector<Rational> v(static_cast<size_t>(degree) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<size_t>(i)];
}

const Rational& Poly::leading() const {
  if (coeffs_.empty()) throw Error(ErrorCode::ZeroPolynomial, "zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Rational Poly::operator()(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (coeffs_.empty() || o.coeffs_.empty()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> r(coeffs_.size() + o.coeffs_.size() - 1);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(r);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& v : coeffs_) v *= c;
  return *this;
}

Poly add(const Poly& p, const Poly& q) { return p + q; }

Poly mul(const Poly& p, const Poly& q) { return p * q; }

Poly compose(const Poly& p, const Poly& q) {
  Poly acc;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= q;
    acc += Poly::constant(*it);
  }
  return acc;
}

Rational evaluate(const Poly& p, const Rational& x) { return p(x); }

Poly pow(const Poly& p, int e) {
  if (e < 0) throw Error(ErrorCode::InvalidInput, "negative polynomial power");
  Poly result = Poly::constant(1);
  Poly base = p;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Poly derivative(const Poly& p) {
  if (p.degree() < 1) return Poly();
  std::vector<Rational> d(static_cast<size_t>(p.degree()));
  for (int i = 1; i <= p.degree(); ++i) d[static_cast<size_t>(i - 1)] = p.coeff(i) * Rational(i);
  return Poly(std::move(d));
}

Poly monic(const Poly& p) {
  if (p.is_zero()) return p;
  return p * (Rational(1) / p.leading());
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Rational> rem = a.coeffs();
  std::vector<Rational> quot(static_cast<size_t>(a.degree() - b.degree() + 1));
  const Rational inv_lead = Rational(1) / b.leading();
  const int db = b.degree();
  for (int k = a.degree() - db; k >= 0; --k) {
    Rational q = rem[static_cast<size_t>(k + db)] * inv_lead;
    quot[static_cast<size_t>(k)] = q;
    if (q.is_zero()) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<size_t>(k + j)] -= q * b.coeff(j);
  }
  rem.resize(static_cast<size_t>(db));
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error(ErrorCode::InvalidInput, "polynomial division is not exact");
  return q;
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly u = a, v = b;
  while (!v.is_zero()) {
    Poly r = divmod(u, v).second;
    u = std::move(v);
    v = monic(r);
  }
  return monic(u);
}

Poly from_roots(const Rational& lead, std::span<const Rational> roots) {
  if (lead.is_zero()) throw Error(ErrorCode::ZeroLeadingCoefficient, "from_roots: leading coefficient is zero");
  Poly p = Poly::constant(lead);
  for (const auto& r : roots) p *= Poly{-r, Rational(1)};
  return p;
}

LinearSubst::LinearSubst(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.is_zero()) throw Error(ErrorCode::InvalidParameters, "linear substitution needs a != 0");
}

LinearSubst LinearSubst::inverse() const {
  Rational inv = Rational(1) / a_;
  return LinearSubst(inv, -b_ * inv);
}

Poly similar(const Poly& p, const LinearSubst& s) { return compose(p, s.as_poly()); }

std::vector<Rational> power_sums(std::span<const Rational> roots, int jmax) {
  if (jmax < 1) throw Error(ErrorCode::InvalidInput, "power_sums: jmax must be positive");
  std::vector<Rational> sums(static_cast<size_t>(jmax));
  for (const auto& r : roots) {
    Rational p = r;
    for (int j = 0; j < jmax; ++j) {
      sums[static_cast<size_t>(j)] += p;
      p *= r;
    }
  }
  return sums;
}

std::vector<Rational> newton_power_sums(const Poly& p, int jmax) {
  if (p.degree() < 1) throw Error(ErrorCode::ConstantPolynomial, "newton_power_sums: constant polynomial");
  if (jmax < 1) throw Error(ErrorCode::InvalidInput, "newton_power_sums: jmax must be positive");
  const int n = p.degree();
  // a[k] is the coefficient of x^(n-k) of the monic polynomial.
  std::vector<Rational> a(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) a[static_cast<size_t>(k)] = p.coeff(n - k) / p.leading();
  std::vector<Rational> s(static_cast<size_t>(jmax) + 1);
  for (int j = 1; j <= jmax; ++j) {
    Rational acc = j <= n ? -Rational(j) * a[static_cast<size_t>(j)] : Rational(0);
    for (int i = 1; i < j && i <= n; ++i) acc -= a[static_cast<size_t>(i)] * s[static_cast<size_t>(j - i)];
    s[static_cast<size_t>(j)] = acc;
  }
  return {s.begin() + 1, s.end()};
}

std::string to_string(const Poly& p, char var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const Rational& c = p.coeffs()[static_cast<size_t>(i)];
    if (c.is_zero()) continue;
    Rational mag = abs(c);
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == Rational(1);
    if (i == 0 || !unit) {
      if (!mag.is_integer() && i > 0) {
        os << '(' << mag << ")";
      } else {
        os << mag;
      }
      if (i > 0) os << '*';
    }
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << to_string(p); }

}  // namespace fxgy
