#pragma once

#include <span>
#include <vector>

#include "fxgy/poly.hpp"

namespace fxgy {

using Matrix = std::vector<std::vector<Rational>>;

/// Exact determinant by Gaussian elimination over Q.
Rational determinant(Matrix m);

/// (deg p + deg q) square Sylvester matrix. Both inputs must be nonzero.
Matrix sylvester_matrix(const Poly& p, const Poly& q);
Rational resultant(const Poly& p, const Poly& q);

/// (-1)^(n(n-1)/2) Res(p, p') / lc(p). Throws ConstantPolynomial.
Rational discriminant(const Poly& p);

/// disc(p(x) + z) as a polynomial in z.
Poly discriminant_of_shift(const Poly& p);

/// The unique polynomial of degree < xs.size() through the points.
Poly interpolate(std::span<const Rational> xs, std::span<const Rational> ys);

}  // namespace fxgy
