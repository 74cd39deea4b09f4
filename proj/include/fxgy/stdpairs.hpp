#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

#include "fxgy/poly.hpp"

namespace fxgy {

enum class PairKind { First, Second, Third, Fourth, Fifth };

std::string_view kind_name(PairKind kind);

/// (x^q, alpha x^p v(x)^q)
struct FirstKind {
  int q = 1;
  int p = 0;
  Rational alpha;
  Poly v;
};
/// (x^2, (alpha x^2 + beta) v(x)^2)
struct SecondKind {
  Rational alpha;
  Rational beta;
  Poly v;
};
/// (D_mu(x, alpha^nu), D_nu(x, alpha^mu))
struct ThirdKind {
  int mu = 1;
  int nu = 1;
  Rational alpha;
};
/// (alpha^(-mu/2) D_mu(x, alpha), -beta^(-nu/2) D_nu(x, beta))
struct FourthKind {
  int mu = 2;
  int nu = 2;
  Rational alpha;
  Rational beta;
};
/// ((alpha x^2 - 1)^3, 3x^4 - 4x^3)
struct FifthKind {
  Rational alpha;
};

using StandardPair = std::variant<FirstKind, SecondKind, ThirdKind, FourthKind, FifthKind>;

PairKind kind_of(const StandardPair& sp);

/// The concrete pair. Throws InvalidParameters when the kind's parameter
/// restrictions fail.
std::pair<Poly, Poly> realize(const StandardPair& sp);

/// D_N(x, b) + u = prod (x + w_i).
struct DicksonFactorization {
  int N = 0;
  std::vector<Rational> w;
  Rational b;
  Rational u;
};

/// Root pattern and (b, u) for N in {1, 2, 3, 4, 6}. N = 1 and N = 2 take b
/// from the caller (required); N = 1 uses w1 only, N = 2 ignores w2.
/// Throws InvalidParameters, DegenerateRoots, ZeroB.
DicksonFactorization param_factorization(int N, const Rational& w1, const Rational& w2,
                                         const std::optional<Rational>& b = std::nullopt);

bool verify_factorization(const DicksonFactorization& df);

struct DegreeTriple {
  int m = 0;
  int n = 0;
  int s = 0;

  friend auto operator<=>(const DegreeTriple&, const DegreeTriple&) = default;
};

/// Every (m, n, s) with k = m s, l = n s and m in {1,2,3,4,6} or n in {1,2}.
/// With both_simple the sharper form applies: m in {1,2} when k <= l and,
/// by symmetry, n in {1,2} when k > l.
std::vector<DegreeTriple> classify_degrees(int k, int l, bool both_simple);

struct KindConstraint {
  PairKind kind;
  bool admissible = false;
  /// Degrees of F compatible with f; empty when unconstrained.
  std::vector<int> inner_degrees;
  std::string note;
};

/// Standard-pair kinds still possible for f = phi(F) with f simple-rooted
/// over Q. Throws NotSimpleRooted.
std::vector<KindConstraint> feasible_kinds(const Poly& f);

}  // namespace fxgy
