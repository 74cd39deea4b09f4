#pragma once

#include <random>

#include "fxgy/poly.hpp"

namespace fxgy {

using Rng = std::mt19937_64;

/// Nonzero p/q with |p| <= num_bound, 1 <= q <= den_bound.
Rational random_nonzero_rational(Rng& rng, int num_bound, int den_bound);

/// (w1, w2) with pairwise distinct roots for param_factorization(N, ...).
struct FactorizationDraw {
  int N = 3;
  Rational w1, w2;
};
FactorizationDraw random_factorization_draw(Rng& rng, int N);

/// f = phi(F) with f simple-rooted over Q, deg phi in [1, 3], deg F in
/// [1, 4], disguised by a random affine change of x and of the inner value.
struct DecompositionInstance {
  Poly phi;
  Poly F;
  Poly f;
};
DecompositionInstance random_decomposition_instance(Rng& rng);

/// A point of 3a^2 + b^2 = c^2 built from the forward formulas.
struct ConePoint {
  Rational a, b, c;
};
ConePoint random_cone_point(Rng& rng);

/// (A1, A2, Delta, B1, B2) with U and V both having distinct roots.
struct ObstructionDraw {
  Rational A1, A2, Delta, B1, B2;
  Poly U() const;
  Poly V() const;
};
ObstructionDraw random_obstruction_draw(Rng& rng);

}  // namespace fxgy
