#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fxgy/pell.hpp"
#include "fxgy/poly.hpp"
#include "fxgy/stdpairs.hpp"

namespace fxgy {

/// Polynomial in two variables (p, q) over Q, used to turn a sequence term
/// (p, q) into a solution pair.
class BiPoly {
 public:
  struct Term {
    Rational c;
    int i = 0;  // power of p
    int j = 0;  // power of q
  };

  BiPoly() = default;
  static BiPoly p();
  static BiPoly q();
  static BiPoly constant(const Rational& c);
  /// poly(p) or poly(q).
  static BiPoly in_p(const Poly& poly);
  static BiPoly in_q(const Poly& poly);

  Rational operator()(const Rational& p, const Rational& q) const;
  const std::vector<Term>& terms() const { return terms_; }

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator*=(const BiPoly& o);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator*(BiPoly a, const BiPoly& b) { return a *= b; }

 private:
  void normalize();
  std::vector<Term> terms_;  // sorted by (i, j), no zero coefficients
};

std::string to_string(const BiPoly& b);

/// Solutions (x(X), y(X)) for every X.
struct PolyParam {
  Poly x;
  Poly y;
};

/// Solutions (map_x(p, q), map_y(p, q)) for each sequence term (p, q).
struct PellParam {
  SolutionSeq seq;
  BiPoly map_x;
  BiPoly map_y;
};

struct EquationFamily {
  std::string id;
  PairKind kind = PairKind::First;
  Poly f;
  Poly g;
  /// f = phi(F), g = phi(G) when known.
  std::optional<Poly> F;
  std::optional<Poly> G;
  std::optional<Poly> phi;
  std::variant<PolyParam, PellParam> param;
  std::string provenance;
};

struct CheckRecord {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Certificate {
  std::string family_id;
  std::string check_kind;  // "polynomial-identity" or "finite-horizon"
  int horizon = 0;
  bool verified = false;
  std::vector<CheckRecord> transcript;
};

/// f = phi, g = phi(G), solutions (G(X), X). With `mirrored`, f = phi(G),
/// g = phi and solutions (X, G(X)). The side playing f must have only simple
/// rational roots (NotSimpleRooted); G must be nonconstant (InvalidInput).
EquationFamily build_first_kind(const Poly& phi, const Poly& G, bool mirrored = false);

/// Solutions of x^2 = G(y) (or y^2 = G(x) when mirrored).
using SolutionSource = std::variant<PolyParam, PellParam>;

/// f = phi(x^2), g = phi(G). With `mirrored`, f = phi(G), g = phi(y^2).
/// The source must solve the square equation: as a polynomial identity, or
/// on both seeds for a sequence (SolutionSourceInvalid). G may have at most
/// two roots of odd multiplicity (OddMultiplicityViolation); the f side must
/// be simple-rooted over Q (NotSimpleRooted).
EquationFamily build_second_kind(const Poly& phi, const Poly& G, const SolutionSource& source, bool mirrored = false);

/// F = D_Nf(x, b^Ng), G = D_Ng(y, b^Nf); each (w1, w2) must factor
/// D_Nf(x, b^Ng) + u (MismatchedB otherwise); phi = prod (x + u_i);
/// solutions (D_Ng(X, b), D_Nf(X, b)). Throws InvalidParameters for
/// Nf not in {3,4,6} or gcd(Nf, Ng) != 1, NotSimpleRooted.
EquationFamily build_third_kind(int Nf, int Ng, const Rational& b, const std::vector<std::pair<Rational, Rational>>& reps);

enum class FourthVariant { V4_10, V6_10 };

/// The conic of the bridge as a Pell equation v1^2 - D v2^2 = N. Throws
/// InvalidParameters when D or N is not an integer.
PellEquation fourth_kind_curve(FourthVariant variant, const Rational& a, const Rational& b);

/// F = b^-k D_Nf(x, b) with k = Nf/2, G = -a^-5 D_10(y, a),
/// phi = prod (x + u_i b^-k). Sequence terms (v1, v2) map to
/// x = b^-2 D_5(v2, b) and y = v1 v2 (4_10) or v1 (v2^2 - b) (6_10).
/// Throws ConstraintViolated, MismatchedB, NotSimpleRooted.
EquationFamily build_fourth_kind(FourthVariant variant, const Rational& a, const Rational& b,
                                 const std::vector<std::pair<Rational, Rational>>& reps, const SolutionSeq& seq);

/// PolyParam: f(x(X)) - g(y(X)) must vanish identically. PellParam: the first
/// `horizon` terms must lie on the curve and satisfy f(x) = g(y) (and
/// F(x) = G(y) when F, G are known). Never throws on failed checks.
Certificate verify_family(const EquationFamily& fam, int horizon);

}  // namespace fxgy
