#include "fxgy/discriminant.hpp"

#include "fxgy/error.hpp"

namespace fxgy {

Rational determinant(Matrix m) {
  const size_t n = m.size();
  Rational det(1);
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    const Rational inv = Rational(1) / m[col][col];
    det *= m[col][col];
    for (size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      Rational factor = m[r][col] * inv;
      for (size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  return det;
}

Matrix sylvester_matrix(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "sylvester_matrix: zero polynomial");
  const int m = p.degree(), n = q.degree();
  const size_t size = static_cast<size_t>(m + n);
  Matrix s(size, std::vector<Rational>(size));
  // Rows hold descending coefficients, shifted one column per row.
  for (int r = 0; r < n; ++r) {
    for (int i = 0; i <= m; ++i) s[static_cast<size_t>(r)][static_cast<size_t>(r + i)] = p.coeff(m - i);
  }
  for (int r = 0; r < m; ++r) {
    for (int i = 0; i <= n; ++i) s[static_cast<size_t>(n + r)][static_cast<size_t>(r + i)] = q.coeff(n - i);
  }
  return s;
}

Rational resultant(const Poly& p, const Poly& q) {
  if (p.degree() == 0 && q.degree() == 0) return Rational(1);
  return determinant(sylvester_matrix(p, q));
}

Rational discriminant(const Poly& p) {
  const int n = p.degree();
  if (n < 1) throw Error(ErrorCode::ConstantPolynomial, "discriminant: constant polynomial");
  if (n == 1) return Rational(1);
  Rational r = resultant(p, derivative(p)) / p.leading();
  if ((n * (n - 1) / 2) % 2 == 1) r = -r;
  return r;
}

Poly interpolate(std::span<const Rational> xs, std::span<const Rational> ys) {
  if (xs.size() != ys.size()) throw Error(ErrorCode::InvalidInput, "interpolate: size mismatch");
  const size_t n = xs.size();
  // Newton divided differences.
  std::vector<Rational> coef(ys.begin(), ys.end());
  for (size_t j = 1; j < n; ++j) {
    for (size_t i = n - 1; i >= j; --i) {
      Rational dx = xs[i] - xs[i - j];
      if (dx.is_zero()) throw Error(ErrorCode::InvalidInput, "interpolate: repeated abscissa");
      coef[i] = (coef[i] - coef[i - 1]) / dx;
    }
  }
  Poly result;
  for (size_t k = n; k-- > 0;) {
    result *= Poly{-xs[k], Rational(1)};
    result += Poly::constant(coef[k]);
  }
  return result;
}

Poly discriminant_of_shift(const Poly& p) {
  const int n = p.degree();
  if (n < 1) throw Error(ErrorCode::ConstantPolynomial, "discriminant_of_shift: constant polynomial");
  // disc(p + z) has degree at most n - 1 in z.
  std::vector<Rational> xs, ys;
  for (int k = 0; k < n; ++k) {
    xs.emplace_back(k);
    ys.push_back(discriminant(p + Poly::constant(Rational(k))));
  }
  return interpolate(xs, ys);
}

}  // namespace fxgy
