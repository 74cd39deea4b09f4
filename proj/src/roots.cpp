#include "fxgy/roots.hpp"

#include <algorithm>
#include <tuple>

#include "fxgy/error.hpp"

namespace fxgy {

namespace {

using IntPoly = std::vector<BigInt>;  // ascending coefficients

void taylor_shift_one(IntPoly& q) {
  const size_t n = q.size();
  for (size_t i = 0; i + 1 < n; ++i) {
    for (size_t j = n - 1; j-- > i;) q[j] += q[j + 1];
  }
}

int sign_variations(const IntPoly& q) {
  int count = 0;
  int last = 0;
  for (const auto& c : q) {
    int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

/// Upper bound on the number of roots of q in (0, 1).
int descartes_bound(const IntPoly& q) {
  IntPoly t(q.rbegin(), q.rend());
  taylor_shift_one(t);
  return sign_variations(t);
}

int sign_at(const Poly& p, const Rational& x) { return p(x).sign(); }

void strip_trailing_zeros(IntPoly& q) {
  while (!q.empty() && q.back() == 0) q.pop_back();
}

/// Isolating intervals (and exact dyadic hits) for roots of the squarefree
/// integer polynomial in (0, +inf). p(0) must be nonzero.
void isolate_positive(const IntPoly& p, std::vector<std::pair<Rational, Rational>>& intervals,
                      std::vector<Rational>& exact) {
  const int n = static_cast<int>(p.size()) - 1;
  if (n < 1) return;
  BigInt max_tail = 0;
  for (int i = 0; i < n; ++i) max_tail = std::max<BigInt>(max_tail, BigInt(::abs(p[static_cast<size_t>(i)])));
  BigInt lead = ::abs(p.back());
  BigInt cauchy = 1 + (max_tail + lead - 1) / lead;
  BigInt bound = 1;
  while (bound <= cauchy) bound *= 2;

  // q(x) = p(bound * x); roots of interest now lie in (0, 1).
  IntPoly q = p;
  BigInt scale = 1;
  for (auto& c : q) {
    c *= scale;
    scale *= bound;
  }

  struct Node {
    IntPoly q;
    BigInt c;
    unsigned long k;
  };
  std::vector<Node> stack;
  stack.push_back({std::move(q), 0, 0});
  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();
    if (node.q.size() < 2) continue;
    int v = descartes_bound(node.q);
    if (v == 0) continue;
    BigInt denom = BigInt(1) << node.k;
    if (v == 1) {
      intervals.emplace_back(Rational(BigInt(bound * node.c), denom),
                             Rational(BigInt(bound * (node.c + 1)), denom));
      continue;
    }
    // Left half: 2^deg * q(x/2). Right half: left(x + 1).
    const size_t deg = node.q.size() - 1;
    IntPoly left = node.q;
    for (size_t i = 0; i <= deg; ++i) mpz_mul_2exp(left[i].get_mpz_t(), left[i].get_mpz_t(), deg - i);
    IntPoly right = left;
    taylor_shift_one(right);
    if (right.front() == 0) {
      exact.emplace_back(BigInt(bound * (2 * node.c + 1)), BigInt(denom * 2));
      right.erase(right.begin());
      // Divide left by (x - 1) with synthetic division from the top.
      IntPoly quot(deg);
      BigInt carry = 0;
      for (size_t i = deg; i-- > 0;) {
        carry += left[i + 1];
        quot[i] = carry;
      }
      left = std::move(quot);
      strip_trailing_zeros(left);
    }
    stack.push_back({std::move(right), 2 * node.c + 1, node.k + 1});
    stack.push_back({std::move(left), 2 * node.c, node.k + 1});
  }
}

void collect_positive_roots(const Poly& sqfree, const IntPoly& ints, const BigInt& lead,
                            std::vector<Rational>& out) {
  std::vector<std::pair<Rational, Rational>> intervals;
  std::vector<Rational> exact;
  isolate_positive(ints, intervals, exact);
  // Interval endpoints can only be roots if they were hit exactly; dividing
  // those out keeps the endpoint signs nonzero during refinement.
  Poly reduced = sqfree;
  for (auto& r : exact) {
    out.push_back(r);
    reduced = exact_div(reduced, Poly{-r, Rational(1)});
  }
  // Two fractions with denominators dividing `lead` differ by >= 1/lead^2.
  const Rational target(BigInt(1), BigInt(2 * lead * lead));
  for (auto [lo, hi] : intervals) {
    int slo = sign_at(reduced, lo);
    bool found = false;
    while (hi - lo >= target) {
      Rational mid = (lo + hi) / Rational(2);
      int sm = sign_at(reduced, mid);
      if (sm == 0) {
        out.push_back(mid);
        found = true;
        break;
      }
      if (sm == slo) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    if (found) continue;
    Rational cand = simplest_rational_between(lo, hi);
    if (reduced(cand).is_zero()) out.push_back(cand);
  }
}

IntPoly negate_variable(IntPoly q) {
  for (size_t i = 1; i < q.size(); i += 2) q[i] = -q[i];
  if (q.back() < 0) {
    for (auto& c : q) c = -c;
  }
  return q;
}

}  // namespace

std::vector<BigInt> primitive_integer_coeffs(const Poly& p) {
  if (p.is_zero()) return {};
  BigInt l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
  IntPoly out;
  out.reserve(p.coeffs().size());
  BigInt g = 0;
  for (const auto& c : p.coeffs()) {
    BigInt v = c.num() * (l / c.den());
    g = gcd(g, v);
    out.push_back(std::move(v));
  }
  if (out.back() < 0) g = -g;
  for (auto& v : out) v /= g;
  return out;
}

Rational simplest_rational_between(const Rational& lo, const Rational& hi) {
  if (hi < lo) return simplest_rational_between(hi, lo);
  if (lo.sign() <= 0 && hi.sign() >= 0) return Rational(0);
  if (hi.sign() < 0) return -simplest_rational_between(-hi, -lo);
  BigInt fl = floor(lo);
  if (Rational(fl) == lo) return lo;
  Rational up(BigInt(fl + 1));
  if (up <= hi) return up;
  Rational base(fl);
  Rational inner = simplest_rational_between(Rational(1) / (hi - base), Rational(1) / (lo - base));
  return base + Rational(1) / inner;
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "squarefree_decomposition: zero polynomial");
  std::vector<std::pair<Poly, int>> out;
  if (p.degree() == 0) return out;
  Poly dp = derivative(p);
  Poly a0 = gcd(p, dp);
  Poly b = exact_div(p, a0);
  Poly c = exact_div(dp, a0);
  Poly d = c - derivative(b);
  for (int i = 1; b.degree() > 0; ++i) {
    Poly a = gcd(b, d);
    if (a.degree() > 0) out.emplace_back(monic(a), i);
    b = exact_div(b, a);
    c = exact_div(d, a);
    d = c - derivative(b);
  }
  return out;
}

Poly squarefree_part(const Poly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "squarefree_part: zero polynomial");
  if (p.degree() == 0) return Poly::constant(1);
  return monic(exact_div(p, gcd(p, derivative(p))));
}

int odd_multiplicity_root_count(const Poly& p) {
  int count = 0;
  for (const auto& [factor, mult] : squarefree_decomposition(p)) {
    if (mult % 2 == 1) count += factor.degree();
  }
  return count;
}

std::vector<Rational> rational_roots(const Poly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "rational_roots: zero polynomial");
  std::vector<Rational> distinct;
  if (p.degree() >= 1) {
    Poly sq = squarefree_part(p);
    // Remove a root at zero before isolating.
    if (sq.coeff(0).is_zero()) {
      distinct.emplace_back(0);
      sq = exact_div(sq, Poly::x());
    }
    if (sq.degree() >= 1) {
      IntPoly ints = primitive_integer_coeffs(sq);
      BigInt lead = ints.back();
      collect_positive_roots(sq, ints, lead, distinct);
      Poly mirrored = compose(sq, Poly{Rational(0), Rational(-1)});
      std::vector<Rational> neg;
      collect_positive_roots(mirrored, negate_variable(ints), lead, neg);
      for (auto& r : neg) distinct.push_back(-r);
    }
  }
  std::vector<Rational> roots;
  for (const auto& r : distinct) {
    Poly rest = p;
    const Poly lin{-r, Rational(1)};
    while (rest.degree() >= 1) {
      auto [q, rem] = divmod(rest, lin);
      if (!rem.is_zero()) break;
      roots.push_back(r);
      rest = std::move(q);
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

bool is_simple_rational_rooted(const Poly& p) {
  if (p.degree() < 1) throw Error(ErrorCode::ConstantPolynomial, "is_simple_rational_rooted: constant polynomial");
  auto roots = rational_roots(p);
  if (static_cast<int>(roots.size()) != p.degree()) return false;
  return std::adjacent_find(roots.begin(), roots.end()) == roots.end();
}

}  // namespace fxgy
