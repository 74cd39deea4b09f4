#include "fxgy/json_io.hpp"

#include "fxgy/error.hpp"

namespace fxgy {

namespace {

json bigint(const BigInt& v) { return v.get_str(); }

json rationals(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& r : v) a.push_back(to_json(r));
  return a;
}

[[noreturn]] void schema(const std::string& msg) { throw Error(ErrorCode::InvalidInput, "schema: " + msg); }

}  // namespace

json to_json(const Rational& r) { return r.to_string(); }

json to_json(const Poly& p) { return json{{"coeffs", rationals(p.coeffs())}}; }

json to_json(const RepPair& r) { return json{{"x", r.x}, {"y", r.y}, {"form", form_name(r.form)}}; }

json to_json(const PteSet& s) {
  json blocks = json::array();
  for (const auto& b : s.blocks) blocks.push_back(rationals(b));
  return json{{"m", s.m}, {"s", s.blocks.size()}, {"shared", to_json(s.shared)}, {"blocks", blocks},
              {"constants", rationals(s.constants)}};
}

json to_json(const PteDecomposition& d) {
  return json{{"phi", to_json(d.phi)}, {"inner", to_json(d.inner)}, {"p_list", rationals(d.p_list)}};
}

json to_json(const DicksonFactorization& df) {
  return json{{"N", df.N}, {"w", rationals(df.w)}, {"b", to_json(df.b)}, {"u", to_json(df.u)}};
}

json to_json(const DegreeTriple& t) { return json{{"m", t.m}, {"n", t.n}, {"s", t.s}}; }

json to_json(const KindConstraint& k) {
  return json{{"kind", kind_name(k.kind)}, {"admissible", k.admissible}, {"inner_degrees", k.inner_degrees}, {"note", k.note}};
}

json to_json(const IntPair& p) { return json::array({bigint(p.first), bigint(p.second)}); }

json to_json(const SolutionSeq& seq, const std::vector<IntPair>& terms) {
  json t = json::array();
  for (const auto& p : terms) t.push_back(to_json(p));
  return json{{"D", bigint(seq.eq.D)}, {"N", bigint(seq.eq.N)}, {"seeds", json::array({to_json(seq.seed0), to_json(seq.seed1)})},
              {"t", bigint(seq.t)}, {"swapped", seq.swapped}, {"terms", t}};
}

json to_json(const Certificate& c) {
  json tr = json::array();
  for (const auto& r : c.transcript) tr.push_back(json{{"check", r.name}, {"passed", r.passed}, {"detail", r.detail}});
  return json{{"family", c.family_id}, {"check_kind", c.check_kind}, {"horizon", c.horizon}, {"verified", c.verified},
              {"transcript", tr}};
}

json to_json(const EquationFamily& fam) {
  json j{{"id", fam.id}, {"kind", kind_name(fam.kind)}, {"f", to_json(fam.f)}, {"g", to_json(fam.g)}};
  if (fam.F) j["F"] = to_json(*fam.F);
  if (fam.G) j["G"] = to_json(*fam.G);
  if (fam.phi) j["phi"] = to_json(*fam.phi);
  if (const auto* pp = std::get_if<PolyParam>(&fam.param)) {
    j["param"] = json{{"type", "poly"}, {"x", to_json(pp->x)}, {"y", to_json(pp->y)}};
  } else {
    const auto& pell = std::get<PellParam>(fam.param);
    j["param"] = json{{"type", "pell"}, {"sequence", to_json(pell.seq, {pell.seq.seed0, pell.seq.seed1})},
                      {"map_x", to_string(pell.map_x)}, {"map_y", to_string(pell.map_y)}};
  }
  j["provenance"] = fam.provenance;
  return j;
}

json to_json(const BlockProductInstance& inst) {
  return json{{"blockA", json::array({inst.a_lo, inst.a_hi})}, {"blockB", json::array({inst.b_lo, inst.b_hi})},
              {"chosenA", inst.chosen_a}, {"chosenB", inst.chosen_b}, {"k", inst.chosen_a.size()},
              {"l", inst.chosen_b.size()}, {"product", bigint(inst.product)}, {"class", class_name(inst.divisibility)},
              {"sporadic", inst.divisibility == DivClass::Sporadic}};
}

json to_json(const Census& c) {
  json by_class = json::object();
  for (auto cls : {DivClass::KDividesL, DivClass::KDivides2L, DivClass::Sporadic}) {
    auto it = c.by_class.find(cls);
    by_class[std::string(class_name(cls))] = it == c.by_class.end() ? 0 : it->second;
  }
  json by_sizes = json::array();
  for (const auto& [kl, n] : c.by_sizes) by_sizes.push_back(json{{"k", kl.first}, {"l", kl.second}, {"count", n}});
  return json{{"by_class", by_class}, {"by_sizes", by_sizes}};
}

json to_json(const ObstructionReport& r) {
  if (r.shape == ObstructionReport::Shape::Even46) {
    return json{{"shape", "4,6"}, {"leading_signs_differ", r.leading_signs_differ.value_or(false)},
                {"finiteness_certified", r.finiteness_certified}};
  }
  return json{{"shape", "3,4"},
              {"A1", to_json(r.A1)},
              {"A2", to_json(r.A2)},
              {"Delta", to_json(r.Delta)},
              {"B1", to_json(r.B1)},
              {"B2", to_json(r.B2)},
              {"D_roots", json{{"rational_part", to_json(r.d_roots.rational_part)},
                               {"radicand", to_json(r.d_roots.radicand)},
                               {"rational", r.d_roots.rational}}},
              {"three_W_square", r.three_w_square},
              {"E_roots", json{{"simple", to_json(r.e_simple_root)}, {"double", to_json(r.e_double_root)}}},
              {"D_roots_off_E", r.d_roots_off_e},
              {"required", r.required},
              {"finiteness_certified", r.finiteness_certified}};
}

json to_json(const ConeParametrization& p) {
  return json{{"u", to_json(p.u)}, {"v", to_json(p.v)}, {"w", to_json(p.w)},
              {"signs", json::array({p.sa, p.sb, p.sc})}};
}

Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(BigInt(j.dump()));
  schema("expected a rational string \"p/q\", got " + j.dump());
}

Poly poly_from_json(const json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j.at("coeffs").is_array()) schema("polynomial must be {\"coeffs\": [...]}");
  for (const auto& [key, _] : j.items()) {
    if (key != "coeffs") schema("unexpected polynomial field '" + key + "'");
  }
  std::vector<Rational> c;
  for (const auto& e : j.at("coeffs")) c.push_back(rational_from_json(e));
  return Poly(std::move(c));
}

}  // namespace fxgy
