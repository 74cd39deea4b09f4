#pragma once

#include <cstdint>
#include <vector>

#include "fxgy/poly.hpp"

namespace fxgy {

/// s blocks of m rationals. Block i is the root set of shared(x) + constants[i].
struct PteSet {
  int m = 0;
  std::vector<std::vector<Rational>> blocks;
  Poly shared;
  std::vector<Rational> constants;
};

/// shared + constants[i].
Poly block_polynomial(const PteSet& set, size_t i);
/// Product of all block polynomials.
Poly pte_polynomial(const PteSet& set);

/// Blocks {a1, a2, -a1, -a2} from x^2 + y^2 = M; shared x^4 - M x^2, added
/// value (a1 a2)^2. Throws BadModulusClass.
PteSet construct_pte4(std::uint64_t M);

/// Blocks {x, y, x+y, -x, -y, -(x+y)} from x^2 + xy + y^2 = M; shared
/// x^6 - 2M x^4 + M^2 x^2, added value -(x y (x+y))^2. Throws BadModulusClass.
PteSet construct_pte6(std::uint64_t M);

/// The base triple (-M, 0, M), then for each representation the triple
/// (M + x(y-x), -M + y(y-x), x^2 - y^2) followed by its negation. Shared
/// x^3 - M^2 x, added value minus the product of the triple. Throws
/// BadModulusClass.
PteSet construct_pte3(std::uint64_t M);

/// Equal power sums for j = 1..m-1, blocks of size m, all roots distinct.
bool verify_pte(const PteSet& set);

struct PteDecomposition {
  Poly phi;
  Poly inner;
  std::vector<Rational> p_list;
};

/// f = phi(inner) with inner monic of degree m and inner(0) = 0.
/// Throws NotSimpleRooted, DegreeMismatch, NoDecomposition.
PteDecomposition decompose(const Poly& f, int m);

}  // namespace fxgy
