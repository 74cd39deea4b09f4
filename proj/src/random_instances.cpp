#include "fxgy/random_instances.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "fxgy/error.hpp"
#include "fxgy/pte.hpp"
#include "fxgy/roots.hpp"
#include "fxgy/stdpairs.hpp"

namespace fxgy {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Rational random_rational(Rng& rng, int num_bound, int den_bound) {
  return Rational(BigInt(uniform(rng, -num_bound, num_bound)), BigInt(uniform(rng, 1, den_bound)));
}

/// k distinct indices from [0, n).
std::vector<size_t> pick(Rng& rng, size_t n, size_t k) {
  std::vector<size_t> idx(n);
  std::iota(idx.begin(), idx.end(), size_t{0});
  std::shuffle(idx.begin(), idx.end(), rng);
  idx.resize(k);
  std::sort(idx.begin(), idx.end());
  return idx;
}

}  // namespace

Rational random_nonzero_rational(Rng& rng, int num_bound, int den_bound) {
  for (;;) {
    Rational r = random_rational(rng, num_bound, den_bound);
    if (!r.is_zero()) return r;
  }
}

FactorizationDraw random_factorization_draw(Rng& rng, int N) {
  for (;;) {
    FactorizationDraw d{N, random_rational(rng, 60, 6), random_rational(rng, 60, 6)};
    try {
      param_factorization(N, d.w1, d.w2);
      return d;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DegenerateRoots && e.code() != ErrorCode::ZeroB) throw;
    }
  }
}

DecompositionInstance random_decomposition_instance(Rng& rng) {
  const int degF = uniform(rng, 1, 4);
  const int s = uniform(rng, 1, 3);
  Poly F;
  std::vector<Rational> p;  // roots of phi
  if (degF == 1) {
    F = Poly{random_rational(rng, 20, 3), 1};
    std::set<Rational> seen;
    while (static_cast<int>(seen.size()) < s) seen.insert(random_rational(rng, 40, 4));
    p.assign(seen.begin(), seen.end());
  } else if (degF == 2) {
    // F(x) - F(r) = (x - r)(x + c + r) always splits.
    const Rational c(uniform(rng, -9, 9));
    F = Poly{0, c, 1};
    std::set<Rational> values;
    while (static_cast<int>(values.size()) < s) {
      Rational r(uniform(rng, -30, 30));
      if (r * Rational(2) == -c) continue;
      values.insert(F(r));
    }
    p.assign(values.begin(), values.end());
  } else {
    static const std::uint64_t kM3[] = {91, 133, 247, 1729, 2821};
    static const std::uint64_t kM4[] = {65, 85, 1105, 1885, 2465};
    const auto M = degF == 3 ? kM3[uniform(rng, 0, 4)] : kM4[uniform(rng, 0, 4)];
    PteSet set = degF == 3 ? construct_pte3(M) : construct_pte4(M);
    F = set.shared;
    for (size_t i : pick(rng, set.constants.size(), std::min<size_t>(static_cast<size_t>(s), set.constants.size()))) {
      p.push_back(-set.constants[i]);
    }
  }
  // Disguise: F~ = lam F(a x + b) + mu and phi~(y) = c phi((y - mu) / lam).
  const Rational a = random_nonzero_rational(rng, 3, 2);
  const Rational b = random_rational(rng, 5, 2);
  const Rational lam = random_nonzero_rational(rng, 4, 3);
  const Rational mu = random_rational(rng, 10, 3);
  const Rational c = random_nonzero_rational(rng, 5, 2);
  Poly Ft = compose(F, Poly{b, a}) * lam + Poly::constant(mu);
  std::vector<Rational> pt;
  for (const auto& v : p) pt.push_back(lam * v + mu);
  Poly phi = from_roots(c, pt);
  return {phi, Ft, compose(phi, Ft)};
}

ConePoint random_cone_point(Rng& rng) {
  int u = 0, v = 0;
  while (std::gcd(u, v) != 1) {
    u = uniform(rng, -20, 20);
    v = uniform(rng, -20, 20);
  }
  const Rational w = random_nonzero_rational(rng, 12, 5);
  const Rational U(u), V(v);
  Rational a = w * Rational(2) * U * V;
  Rational b = w * (Rational(3) * U * U - V * V);
  Rational c = w * (Rational(3) * U * U + V * V);
  if (uniform(rng, 0, 1)) a = -a;
  if (uniform(rng, 0, 1)) b = -b;
  if (uniform(rng, 0, 1)) c = -c;
  return {a, b, c};
}

Poly ObstructionDraw::U() const {
  return Poly{-A1, 1} * Poly{-A2, 1} * Poly{A1 + A2, 1};
}

Poly ObstructionDraw::V() const {
  return Poly{-B1 * B1, 0, 1} * Poly{-B2 * B2, 0, 1} * Delta;
}

ObstructionDraw random_obstruction_draw(Rng& rng) {
  for (;;) {
    ObstructionDraw d{random_rational(rng, 30, 3), random_rational(rng, 30, 3), random_nonzero_rational(rng, 9, 4),
                      random_nonzero_rational(rng, 20, 3), random_nonzero_rational(rng, 20, 3)};
    const Rational A3 = -d.A1 - d.A2;
    if (d.A1 == d.A2 || d.A1 == A3 || d.A2 == A3) continue;
    if (d.B1 * d.B1 == d.B2 * d.B2) continue;
    return d;
  }
}

}  // namespace fxgy
