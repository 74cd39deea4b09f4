#pragma once

#include <utility>
#include <vector>

#include "fxgy/poly.hpp"

namespace fxgy {

/// All rational roots with multiplicity, ascending.
///
/// Real roots of the squarefree part are isolated exactly (Descartes' rule of
/// signs with bisection), each isolating interval is narrowed until it can
/// hold at most one fraction whose denominator divides the leading
/// coefficient, and the simplest fraction in it is tested exactly. There is
/// no bound on coefficient size.
std::vector<Rational> rational_roots(const Poly& p);

/// True iff p has deg(p) distinct rational roots. Throws ConstantPolynomial.
bool is_simple_rational_rooted(const Poly& p);

/// Squarefree decomposition (Yun): pairs (factor, multiplicity) with monic,
/// pairwise coprime, nonconstant factors and p = lc * prod factor^mult.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p);

Poly squarefree_part(const Poly& p);

/// Number of complex roots (counted once each) whose multiplicity is odd.
int odd_multiplicity_root_count(const Poly& p);

/// The fraction with the smallest denominator in the closed interval [lo, hi].
Rational simplest_rational_between(const Rational& lo, const Rational& hi);

/// Primitive integer polynomial with positive leading coefficient that is a
/// rational multiple of p (ascending coefficients).
std::vector<BigInt> primitive_integer_coeffs(const Poly& p);

}  // namespace fxgy
