#pragma once

#include <json.hpp>

#include "fxgy/blocks.hpp"
#include "fxgy/families.hpp"
#include "fxgy/obstruction.hpp"
#include "fxgy/pell.hpp"
#include "fxgy/poly.hpp"
#include "fxgy/pte.hpp"
#include "fxgy/representations.hpp"
#include "fxgy/stdpairs.hpp"

namespace fxgy {

using json = nlohmann::ordered_json;

json to_json(const Rational& r);
json to_json(const Poly& p);
json to_json(const RepPair& r);
json to_json(const PteSet& s);
json to_json(const PteDecomposition& d);
json to_json(const DicksonFactorization& df);
json to_json(const DegreeTriple& t);
json to_json(const KindConstraint& k);
json to_json(const IntPair& p);
json to_json(const SolutionSeq& seq, const std::vector<IntPair>& terms);
json to_json(const Certificate& c);
json to_json(const EquationFamily& fam);
json to_json(const BlockProductInstance& inst);
json to_json(const Census& c);
json to_json(const ObstructionReport& r);
json to_json(const ConeParametrization& p);

/// Rationals are strings "p" or "p/q"; integers are also accepted as JSON
/// numbers. Throws InvalidInput on anything else.
Rational rational_from_json(const json& j);
/// {"coeffs": [...]} ascending. Throws InvalidInput on schema mismatch.
Poly poly_from_json(const json& j);

}  // namespace fxgy
