#include "fxgy/pte.hpp"

#include <algorithm>
#include <set>

#include "fxgy/error.hpp"
#include "fxgy/representations.hpp"
#include "fxgy/roots.hpp"

namespace fxgy {

Poly block_polynomial(const PteSet& set, size_t i) {
  if (i >= set.constants.size()) throw Error(ErrorCode::InvalidInput, "block index out of range");
  return set.shared + Poly::constant(set.constants[i]);
}

Poly pte_polynomial(const PteSet& set) {
  Poly p = Poly::constant(1);
  for (size_t i = 0; i < set.constants.size(); ++i) p *= block_polynomial(set, i);
  return p;
}

PteSet construct_pte4(std::uint64_t M) {
  auto reps = reps_sum_two_squares(M);
  PteSet s;
  s.m = 4;
  Rational m(M);
  s.shared = Poly{0, 0, -m, 0, 1};
  for (const auto& r : reps) {
    Rational a1(r.x), a2(r.y);
    s.blocks.push_back({a1, a2, -a1, -a2});
    s.constants.push_back(a1 * a1 * a2 * a2);
  }
  return s;
}

PteSet construct_pte6(std::uint64_t M) {
  auto reps = reps_hex_form(M);
  PteSet s;
  s.m = 6;
  Rational m(M);
  s.shared = Poly{0, 0, m * m, 0, Rational(-2) * m, 0, 1};
  for (const auto& r : reps) {
    Rational x(r.x), y(r.y), z(r.x + r.y);
    s.blocks.push_back({x, y, z, -x, -y, -z});
    Rational p = x * y * z;
    s.constants.push_back(-(p * p));
  }
  return s;
}

PteSet construct_pte3(std::uint64_t M) {
  auto reps = reps_hex_form(M);
  PteSet s;
  s.m = 3;
  Rational m(M);
  s.shared = Poly{0, -(m * m), 0, 1};
  s.blocks.push_back({-m, Rational(0), m});
  s.constants.emplace_back(0);
  for (const auto& r : reps) {
    Rational x(r.x), y(r.y);
    Rational t1 = m + x * (y - x);
    Rational t2 = -m + y * (y - x);
    Rational t3 = x * x - y * y;
    Rational prod = t1 * t2 * t3;
    s.blocks.push_back({t1, t2, t3});
    s.constants.push_back(-prod);
    s.blocks.push_back({-t1, -t2, -t3});
    s.constants.push_back(prod);
  }
  return s;
}

bool verify_pte(const PteSet& set) {
  if (set.m < 1 || set.blocks.empty()) return false;
  std::set<Rational> seen;
  std::vector<Rational> reference;
  for (const auto& block : set.blocks) {
    if (static_cast<int>(block.size()) != set.m) return false;
    for (const auto& r : block) {
      if (!seen.insert(r).second) return false;
    }
    if (set.m < 2) continue;
    auto sums = power_sums(block, set.m - 1);
    if (reference.empty()) {
      reference = std::move(sums);
    } else if (sums != reference) {
      return false;
    }
  }
  return true;
}

PteDecomposition decompose(const Poly& f, int m) {
  if (f.degree() < 1 || !is_simple_rational_rooted(f)) {
    throw Error(ErrorCode::NotSimpleRooted, "decompose: f must have only simple rational roots");
  }
  const int n = f.degree();
  if (m < 1 || n % m != 0) throw Error(ErrorCode::DegreeMismatch, "decompose: m must divide deg f");
  const int s = n / m;
  const Rational p0 = f.leading();
  const Poly g = monic(f);

  // Undetermined coefficients: for k < m, [x^(n-k)] g only sees H^s, and
  // there h_(m-k) enters linearly with weight s.
  std::vector<Rational> h(static_cast<size_t>(m) + 1);
  h[static_cast<size_t>(m)] = Rational(1);
  for (int k = 1; k < m; ++k) {
    Poly partial(h);
    Rational c = pow(partial, s).coeff(n - k);
    h[static_cast<size_t>(m - k)] = (g.coeff(n - k) - c) / Rational(s);
  }
  Poly inner(h);

  // Base-inner expansion of g; every digit must be a constant.
  std::vector<Rational> digits;
  Poly rest = g;
  while (!rest.is_zero()) {
    auto [q, r] = divmod(rest, inner);
    if (r.degree() > 0) throw Error(ErrorCode::NoDecomposition, "decompose: f is not a polynomial in a degree-m inner");
    digits.push_back(r.coeff(0));
    rest = std::move(q);
  }
  Poly phi = Poly(std::move(digits)) * p0;
  if (phi.degree() != s) throw Error(ErrorCode::NoDecomposition, "decompose: outer degree mismatch");

  auto roots = rational_roots(phi);
  if (static_cast<int>(roots.size()) != s || std::adjacent_find(roots.begin(), roots.end()) != roots.end()) {
    throw Error(ErrorCode::NoDecomposition, "decompose: outer polynomial lacks distinct rational roots");
  }
  for (const auto& p : roots) {
    if (!is_simple_rational_rooted(inner - Poly::constant(p))) {
      throw Error(ErrorCode::NoDecomposition, "decompose: inner - p has a non-rational or repeated root");
    }
  }
  return {phi, inner, roots};
}

}  // namespace fxgy
