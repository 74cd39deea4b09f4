#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>

#include "fxgy/blocks.hpp"
#include "fxgy/catalog.hpp"
#include "fxgy/dickson.hpp"
#include "fxgy/error.hpp"
#include "fxgy/json_io.hpp"
#include "fxgy/obstruction.hpp"
#include "fxgy/random_instances.hpp"

namespace fxgy {

namespace {

struct Globals {
  bool json = false;
  int horizon = 10;
  std::uint64_t seed = 1;
};

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorCode::InvalidInput, msg); }

json parse_json_arg(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    bad(what + ": invalid JSON (" + std::string(e.what()) + ")");
  }
}

void check_keys(const json& j, std::initializer_list<const char*> required, std::initializer_list<const char*> optional,
                const std::string& what) {
  if (!j.is_object()) bad(what + " must be a JSON object");
  for (const auto& [key, _] : j.items()) {
    bool known = std::any_of(required.begin(), required.end(), [&](const char* k) { return key == k; }) ||
                 std::any_of(optional.begin(), optional.end(), [&](const char* k) { return key == k; });
    if (!known) bad(what + ": unexpected field '" + key + "'");
  }
  for (const char* k : required) {
    if (!j.contains(k)) bad(what + ": missing field '" + std::string(k) + "'");
  }
}

int int_field(const json& j, const char* key) {
  const json& v = j.at(key);
  if (!v.is_number_integer()) bad(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

BigInt integer_from_json(const json& j) {
  Rational r = rational_from_json(j);
  if (!r.is_integer()) bad("expected an integer, got " + j.dump());
  return r.num();
}

IntPair pair_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) bad("expected a pair [x, y], got " + j.dump());
  return {integer_from_json(j[0]), integer_from_json(j[1])};
}

IntPair pair_from_text(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) bad("expected 'x,y', got '" + text + "'");
  return {parse_bigint(text.substr(0, comma)), parse_bigint(text.substr(comma + 1))};
}

std::vector<std::pair<Rational, Rational>> reps_from_json(const json& j) {
  if (!j.is_array()) bad("reps must be an array of [w1, w2] pairs");
  std::vector<std::pair<Rational, Rational>> out;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) bad("reps entries must be [w1, w2], got " + e.dump());
    out.emplace_back(rational_from_json(e[0]), rational_from_json(e[1]));
  }
  return out;
}

/// [{"c": "3/2", "i": 1, "j": 0}, ...] for sum c p^i q^j.
BiPoly bipoly_from_json(const json& j) {
  if (!j.is_array()) bad("a bivariate map must be an array of terms");
  BiPoly out;
  for (const auto& t : j) {
    check_keys(t, {"c", "i", "j"}, {}, "term");
    int i = int_field(t, "i"), k = int_field(t, "j");
    if (i < 0 || k < 0) bad("term exponents must be nonnegative");
    BiPoly term = BiPoly::constant(rational_from_json(t.at("c")));
    for (int e = 0; e < i; ++e) term *= BiPoly::p();
    for (int e = 0; e < k; ++e) term *= BiPoly::q();
    out += term;
  }
  return out;
}

SolutionSeq sequence_from_json(const json& j) {
  check_keys(j, {"D", "N", "seeds"}, {"t", "swapped", "type", "map_x", "map_y"}, "sequence");
  PellEquation eq(integer_from_json(j.at("D")), integer_from_json(j.at("N")));
  const json& seeds = j.at("seeds");
  if (!seeds.is_array() || seeds.size() != 2) bad("seeds must be two pairs");
  BigInt t = j.contains("t") ? integer_from_json(j.at("t")) : recurrence_multiplier(eq.D);
  bool swapped = j.value("swapped", false);
  return make_sequence(eq, pair_from_json(seeds[0]), pair_from_json(seeds[1]), t, swapped);
}

/// Inline JSON, or the path of a file holding it.
Poly poly_arg(const std::string& text, const std::string& what) {
  std::string body = text;
  if (!text.empty() && text.front() != '{') {
    std::ifstream in(text);
    if (!in) bad(what + ": not JSON and not a readable file: '" + text + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    body = ss.str();
  }
  return poly_from_json(parse_json_arg(body, what));
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

// Subcommand handlers --------------------------------------------------------

int cmd_reps(const Globals&, std::uint64_t M, const std::string& form_text, bool all, std::ostream& out) {
  QuadForm form = parse_form(form_text);
  json j{{"M", M}, {"form", form_name(form)}};
  std::vector<RepPair> reps;
  if (all) {
    reps = reps_unrestricted(M, form);
    j["restricted"] = false;
  } else {
    reps = form == QuadForm::SumSquares ? reps_sum_two_squares(M) : reps_hex_form(M);
    const int rho = prime_count(M);
    j["restricted"] = true;
    j["rho"] = rho;
    j["expected_count"] = 1ULL << (rho - 1);
  }
  j["count"] = reps.size();
  json arr = json::array();
  for (const auto& r : reps) arr.push_back(to_json(r));
  j["reps"] = arr;
  emit(out, j);
  return kExitOk;
}

int cmd_pte_construct(int m, std::uint64_t M, std::ostream& out) {
  PteSet set;
  if (m == 3) {
    set = construct_pte3(M);
  } else if (m == 4) {
    set = construct_pte4(M);
  } else if (m == 6) {
    set = construct_pte6(M);
  } else {
    bad("--m must be 3, 4 or 6");
  }
  json j = to_json(set);
  bool ok = verify_pte(set);
  j["verified"] = ok;
  emit(out, j);
  return ok ? kExitOk : kExitVerification;
}

int cmd_pte_decompose(const std::string& poly, int m, std::ostream& out) {
  Poly f = poly_arg(poly, "--poly");
  PteDecomposition d = decompose(f, m);
  json j = to_json(d);
  bool ok = compose(d.phi, d.inner) == f;
  j["verified"] = ok;
  emit(out, j);
  return ok ? kExitOk : kExitVerification;
}

int cmd_factorize(int N, const std::string& w1, const std::string& w2, const std::optional<std::string>& b,
                  std::ostream& out) {
  std::optional<Rational> bq;
  if (b) bq = Rational::parse(*b);
  DicksonFactorization df = param_factorization(N, Rational::parse(w1), Rational::parse(w2), bq);
  json j = to_json(df);
  bool ok = verify_factorization(df);
  j["verified"] = ok;
  emit(out, j);
  return ok ? kExitOk : kExitVerification;
}

int cmd_kinds(const std::string& poly, std::ostream& out) {
  json arr = json::array();
  for (const auto& k : feasible_kinds(poly_arg(poly, "--poly"))) arr.push_back(to_json(k));
  emit(out, json{{"kinds", arr}});
  return kExitOk;
}

StandardPair pair_from_params(const std::string& kind, const json& p) {
  if (kind == "first") {
    check_keys(p, {"q", "p", "alpha", "v"}, {}, "--params");
    return FirstKind{int_field(p, "q"), int_field(p, "p"), rational_from_json(p.at("alpha")), poly_from_json(p.at("v"))};
  }
  if (kind == "second") {
    check_keys(p, {"alpha", "beta", "v"}, {}, "--params");
    return SecondKind{rational_from_json(p.at("alpha")), rational_from_json(p.at("beta")), poly_from_json(p.at("v"))};
  }
  if (kind == "third") {
    check_keys(p, {"mu", "nu", "alpha"}, {}, "--params");
    return ThirdKind{int_field(p, "mu"), int_field(p, "nu"), rational_from_json(p.at("alpha"))};
  }
  if (kind == "fourth") {
    check_keys(p, {"mu", "nu", "alpha", "beta"}, {}, "--params");
    return FourthKind{int_field(p, "mu"), int_field(p, "nu"), rational_from_json(p.at("alpha")),
                      rational_from_json(p.at("beta"))};
  }
  if (kind == "fifth") {
    check_keys(p, {"alpha"}, {}, "--params");
    return FifthKind{rational_from_json(p.at("alpha"))};
  }
  bad("unknown kind '" + kind + "'");
}

int cmd_realize(const std::string& kind, const std::string& params, std::ostream& out) {
  auto [F, G] = realize(pair_from_params(kind, parse_json_arg(params, "--params")));
  emit(out, json{{"kind", kind}, {"F", to_json(F)}, {"G", to_json(G)}});
  return kExitOk;
}

int cmd_classify(int k, int l, bool both_simple, std::ostream& out) {
  auto triples = classify_degrees(k, l, both_simple);
  json arr = json::array();
  for (const auto& t : triples) arr.push_back(to_json(t));
  emit(out, json{{"k", k}, {"l", l}, {"both_simple", both_simple}, {"triples", arr}, {"k_divides_2l", (2 * l) % k == 0}});
  return kExitOk;
}

int cmd_pell(const Globals& g, const std::string& D, const std::string& N, std::uint64_t bound,
             const std::optional<std::string>& s0, const std::optional<std::string>& s1, const std::optional<std::string>& t,
             bool swapped, std::optional<int> count, std::ostream& out) {
  PellEquation eq(parse_bigint(D), parse_bigint(N));
  if (s0 || s1) {
    if (!s0 || !s1) bad("--seed0 and --seed1 go together");
    BigInt mult = t ? parse_bigint(*t) : recurrence_multiplier(eq.D);
    SolutionSeq seq = make_sequence(eq, pair_from_text(*s0), pair_from_text(*s1), mult, swapped);
    emit(out, to_json(seq, generate(seq, count.value_or(g.horizon))));
    return kExitOk;
  }
  // Without seeds: the first found seed with y > 0 and its image under the
  // fundamental unit x0 + y0 sqrt(D) start the sequence.
  auto found = find_seeds(eq, bound);
  json seeds = json::array();
  for (const auto& p : found) seeds.push_back(to_json(p));
  BigInt mult = t ? parse_bigint(*t) : recurrence_multiplier(eq.D);
  json j{{"D", eq.D.get_str()}, {"N", eq.N.get_str()}, {"bound", bound}, {"seeds", seeds}, {"t", mult.get_str()}};
  auto first = std::find_if(found.begin(), found.end(), [](const IntPair& p) { return p.second > 0; });
  if (first != found.end()) {
    BigInt x0 = mult / 2;
    BigInt y0 = isqrt((x0 * x0 - 1) / eq.D);
    IntPair next{first->first * x0 + eq.D * first->second * y0, first->first * y0 + first->second * x0};
    SolutionSeq seq = make_sequence(eq, *first, next, mult, swapped);
    j["sequence"] = to_json(seq, generate(seq, count.value_or(g.horizon)));
  } else {
    j["sequence"] = nullptr;
  }
  emit(out, j);
  return kExitOk;
}

EquationFamily family_from_params(const std::string& kind, const json& p) {
  EquationFamily fam;
  if (kind == "first") {
    check_keys(p, {"phi", "G"}, {"mirrored"}, "--params");
    fam = build_first_kind(poly_from_json(p.at("phi")), poly_from_json(p.at("G")), p.value("mirrored", false));
  } else if (kind == "second") {
    check_keys(p, {"phi", "G", "source"}, {"mirrored"}, "--params");
    const json& src = p.at("source");
    if (!src.is_object() || !src.contains("type")) bad("source must be an object with a 'type'");
    SolutionSource source;
    if (src.at("type") == "poly") {
      check_keys(src, {"type", "x", "y"}, {}, "source");
      source = PolyParam{poly_from_json(src.at("x")), poly_from_json(src.at("y"))};
    } else if (src.at("type") == "pell") {
      check_keys(src, {"type", "D", "N", "seeds", "map_x", "map_y"}, {"t", "swapped"}, "source");
      source = PellParam{sequence_from_json(src), bipoly_from_json(src.at("map_x")), bipoly_from_json(src.at("map_y"))};
    } else {
      bad("source type must be 'poly' or 'pell'");
    }
    fam = build_second_kind(poly_from_json(p.at("phi")), poly_from_json(p.at("G")), source, p.value("mirrored", false));
  } else if (kind == "third") {
    check_keys(p, {"Nf", "Ng", "b", "reps"}, {}, "--params");
    fam = build_third_kind(int_field(p, "Nf"), int_field(p, "Ng"), rational_from_json(p.at("b")), reps_from_json(p.at("reps")));
  } else if (kind == "fourth") {
    check_keys(p, {"variant", "a", "b", "reps", "seeds"}, {"t", "swapped"}, "--params");
    std::string v = p.at("variant").is_string() ? p.at("variant").get<std::string>() : "";
    if (v != "4_10" && v != "6_10") bad("variant must be \"4_10\" or \"6_10\"");
    FourthVariant variant = v == "4_10" ? FourthVariant::V4_10 : FourthVariant::V6_10;
    Rational a = rational_from_json(p.at("a")), b = rational_from_json(p.at("b"));
    PellEquation eq = fourth_kind_curve(variant, a, b);
    const json& seeds = p.at("seeds");
    if (!seeds.is_array() || seeds.size() != 2) bad("seeds must be two pairs");
    BigInt t = p.contains("t") ? integer_from_json(p.at("t")) : recurrence_multiplier(eq.D);
    SolutionSeq seq = make_sequence(eq, pair_from_json(seeds[0]), pair_from_json(seeds[1]), t, p.value("swapped", false));
    fam = build_fourth_kind(variant, a, b, reps_from_json(p.at("reps")), seq);
  } else {
    bad("--kind must be first, second, third or fourth");
  }
  fam.id = kind;
  fam.provenance = kind + " kind, user parameters";
  return fam;
}

int cmd_family_build(const Globals& g, const std::optional<std::string>& example, const std::optional<std::string>& kind,
                     const std::optional<std::string>& params, std::ostream& out) {
  std::vector<EquationFamily> fams;
  if (example) {
    if (kind || params) bad("--example excludes --kind and --params");
    fams = example_families(*example);
  } else {
    if (!kind || !params) bad("need --example, or --kind with --params");
    fams.push_back(family_from_params(*kind, parse_json_arg(*params, "--params")));
  }
  json arr = json::array();
  bool ok = true;
  for (const auto& fam : fams) {
    Certificate c = verify_family(fam, g.horizon);
    ok = ok && c.verified;
    arr.push_back(json{{"family", to_json(fam)}, {"certificate", to_json(c)}});
  }
  emit(out, arr);
  return ok ? kExitOk : kExitVerification;
}

int cmd_obstruction(const std::string& U, const std::string& V, std::ostream& out) {
  emit(out, to_json(disc_obstruction(poly_arg(U, "--U"), poly_arg(V, "--V"))));
  return kExitOk;
}

int cmd_cone(const std::string& a, const std::string& b, const std::string& c, std::ostream& out) {
  emit(out, to_json(parametrize_3a2b2(Rational::parse(a), Rational::parse(b), Rational::parse(c))));
  return kExitOk;
}

int cmd_blocks(int N, int max_start, std::optional<int> kmax, std::optional<int> lmax, const std::optional<std::string>& cls,
               std::ostream& out) {
  int l = lmax.value_or(N);
  int k = kmax.value_or(l - 1);
  std::optional<DivClass> filter;
  if (cls) filter = parse_class(*cls);
  auto all = search(N, max_start, k, l);
  json arr = json::array();
  bool ok = true;
  for (const auto& inst : all) {
    ok = ok && verify_instance(inst, N) && classify_instance(inst) == inst.divisibility;
    if (filter && inst.divisibility != *filter) continue;
    arr.push_back(to_json(inst));
  }
  json j{{"N", N}, {"max_start", max_start}, {"kmax", k}, {"lmax", l}};
  if (filter) j["class_filter"] = class_name(*filter);
  j["count"] = arr.size();
  j["instances"] = arr;
  j["census"] = to_json(census(all));
  j["reverified"] = ok;
  j["note"] = "census over the searched window only; it makes no finiteness claim";
  emit(out, j);
  return ok ? kExitOk : kExitVerification;
}

int cmd_verify_paper(const Globals& g, const std::vector<std::string>& ids, std::ostream& out) {
  std::string selection;
  for (const auto& id : ids) selection += (selection.empty() ? "" : ",") + id;
  if (selection.empty()) selection = "all";
  auto reports = run_examples(selection, g.horizon);
  size_t failed = 0, checks = 0, checks_failed = 0;
  for (const auto& r : reports) {
    if (!r.passed()) ++failed;
    for (const auto& c : r.checks) {
      ++checks;
      if (!c.passed) ++checks_failed;
    }
  }
  if (g.json) {
    json arr = json::array();
    for (const auto& r : reports) {
      json cs = json::array();
      for (const auto& c : r.checks) cs.push_back(json{{"check", c.name}, {"passed", c.passed}, {"value", c.detail}});
      json certs = json::array();
      for (const auto& c : r.certificates) certs.push_back(to_json(c));
      arr.push_back(json{{"id", r.id}, {"title", r.title}, {"passed", r.passed()}, {"checks", cs}, {"certificates", certs}});
    }
    emit(out, json{{"command", "verify-paper " + selection},
                   {"horizon", g.horizon},
                   {"examples", arr},
                   {"summary", json{{"examples", reports.size()}, {"failed_examples", failed}, {"checks", checks},
                                    {"failed_checks", checks_failed}}}});
  } else {
    for (const auto& r : reports) {
      out << (r.passed() ? "PASS " : "FAIL ") << r.id << "  " << r.title << "\n";
      for (const auto& c : r.checks) {
        out << "  " << (c.passed ? "ok   " : "FAIL ") << c.name;
        if (!c.detail.empty()) out << "  [" << c.detail << "]";
        out << "\n";
      }
    }
    out << reports.size() - failed << "/" << reports.size() << " examples passed, " << checks - checks_failed << "/"
        << checks << " checks passed\n";
  }
  return failed == 0 ? kExitOk : kExitVerification;
}

int cmd_property(const Globals& g, const std::string& name, int count, std::ostream& out) {
  if (count < 1) bad("--count must be positive");
  Rng rng(g.seed);
  int failures = 0;
  json failed = json::array();
  auto fail = [&](json what) {
    ++failures;
    if (failed.size() < 10) failed.push_back(std::move(what));
  };
  if (name == "factorization") {
    for (int N : {3, 4, 6}) {
      for (int i = 0; i < count; ++i) {
        auto d = random_factorization_draw(rng, N);
        auto df = param_factorization(N, d.w1, d.w2);
        if (!verify_factorization(df)) fail(to_json(df));
      }
    }
  } else if (name == "commutation") {
    for (int m = 1; m <= 8; ++m) {
      for (int n = 1; n <= 8; ++n) {
        if (std::gcd(m, n) != 1) continue;
        for (int i = 0; i < count; ++i) {
          Rational b = random_nonzero_rational(rng, 9, 4);
          if (!verify_commutation(m, n, b)) fail(json{{"m", m}, {"n", n}, {"b", to_json(b)}});
        }
      }
    }
  } else if (name == "cone") {
    for (int i = 0; i < count; ++i) {
      auto pt = random_cone_point(rng);
      auto p = parametrize_3a2b2(pt.a, pt.b, pt.c);
      Rational a = Rational(p.sa) * p.w * Rational(2) * p.u * p.v;
      Rational b = Rational(p.sb) * p.w * (Rational(3) * p.u * p.u - p.v * p.v);
      Rational c = Rational(p.sc) * p.w * (Rational(3) * p.u * p.u + p.v * p.v);
      if (a != pt.a || b != pt.b || c != pt.c) fail(json{{"a", to_json(pt.a)}, {"b", to_json(pt.b)}, {"c", to_json(pt.c)}});
    }
  } else if (name == "decompose") {
    for (int i = 0; i < count; ++i) {
      auto inst = random_decomposition_instance(rng);
      auto d = decompose(inst.f, inst.F.degree());
      Poly gauge = (inst.F - Poly::constant(inst.F.coeff(0))) * (Rational(1) / inst.F.leading());
      if (compose(d.phi, d.inner) != inst.f || d.inner != gauge) fail(json{{"f", to_json(inst.f)}});
    }
  } else {
    bad("--name must be factorization, commutation, cone or decompose");
  }
  emit(out, json{{"property", name}, {"seed", g.seed}, {"count", count}, {"failures", failures}, {"failed", failed}});
  return failures == 0 ? kExitOk : kExitVerification;
}

int exit_code_for(ErrorCode code) {
  if (is_resource_error(code)) return kExitResource;
  if (code == ErrorCode::OffCurve) return kExitVerification;
  return kExitInput;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  Globals g;
  CLI::App app{"Exact tools for f(x) = g(y) with simple rational roots"};
  app.set_version_flag("--version", "fxgy 1.0");
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_option("--horizon", g.horizon, "Sequence terms to verify")->check(CLI::Range(1, 100000));
  app.add_option("--seed", g.seed, "Seed for randomized property runs");

  std::function<int()> action;

  auto* reps = app.add_subcommand("reps", "Representations by x^2 + y^2 or x^2 + xy + y^2");
  std::uint64_t reps_M = 0;
  std::string reps_form = "sq";
  bool reps_all = false;
  reps->add_option("--M,--m", reps_M, "Integer to represent")->required();
  reps->add_option("--form", reps_form, "sq or hex");
  reps->add_flag("--unrestricted,--all", reps_all, "Every x >= y >= 0, without coprimality or modulus conditions");
  reps->callback([&] { action = [&] { return cmd_reps(g, reps_M, reps_form, reps_all, out); }; });

  auto* pte = app.add_subcommand("pte", "PTE sets");
  pte->require_subcommand(1);
  auto* pte_c = pte->add_subcommand("construct", "Build a PTE_m set from representations of M");
  int pte_m = 0;
  std::uint64_t pte_M = 0;
  pte_c->add_option("--m", pte_m, "3, 4 or 6")->required();
  pte_c->add_option("--M", pte_M, "Admissible modulus")->required();
  pte_c->callback([&] { action = [&] { return cmd_pte_construct(pte_m, pte_M, out); }; });
  auto* pte_d = pte->add_subcommand("decompose", "Write f = phi(F) with deg F = m");
  std::string pte_poly;
  int pte_dm = 0;
  pte_d->add_option("--f,--poly", pte_poly, "Polynomial JSON {\"coeffs\": [...]} or a file holding it")->required();
  pte_d->add_option("--m", pte_dm, "Degree of the inner polynomial")->required();
  pte_d->callback([&] { action = [&] { return cmd_pte_decompose(pte_poly, pte_dm, out); }; });

  auto* sp = app.add_subcommand("stdpair", "Standard pairs and Dickson factorizations");
  sp->require_subcommand(1);
  auto* sp_f = sp->add_subcommand("factorize", "D_N(x, b) + u = prod (x + w_i) from w1, w2");
  int sp_N = 0;
  std::string sp_w1, sp_w2 = "0";
  std::optional<std::string> sp_b;
  sp_f->add_option("--N", sp_N, "1, 2, 3, 4 or 6")->required();
  sp_f->add_option("--w1", sp_w1, "Rational")->required();
  sp_f->add_option("--w2", sp_w2, "Rational");
  sp_f->add_option("--b", sp_b, "Rational, required for N = 1, 2");
  sp_f->callback([&] { action = [&] { return cmd_factorize(sp_N, sp_w1, sp_w2, sp_b, out); }; });
  auto* sp_k = sp->add_subcommand("kinds", "Standard-pair kinds still possible for a simple-rooted f");
  std::string sp_poly;
  sp_k->add_option("--f,--poly", sp_poly, "Polynomial JSON")->required();
  sp_k->callback([&] { action = [&] { return cmd_kinds(sp_poly, out); }; });
  auto* sp_r = sp->add_subcommand("realize", "The pair (F, G) of a given kind");
  std::string sp_kind, sp_params;
  sp_r->add_option("--kind", sp_kind, "first, second, third, fourth or fifth")->required();
  sp_r->add_option("--params", sp_params, "Parameter JSON")->required();
  sp_r->callback([&] { action = [&] { return cmd_realize(sp_kind, sp_params, out); }; });

  auto* cl = app.add_subcommand("classify", "Degree triples (m, n, s) for deg f = k, deg g = l");
  int cl_k = 0, cl_l = 0;
  bool cl_both = false;
  cl->add_option("--k", cl_k, "deg f")->required();
  cl->add_option("--l", cl_l, "deg g")->required();
  cl->add_flag("--both-simple", cl_both, "g also has only simple rational roots");
  cl->callback([&] { action = [&] { return cmd_classify(cl_k, cl_l, cl_both, out); }; });

  auto* pell = app.add_subcommand("pell", "x^2 - D y^2 = N: seeds, or a sequence from two seeds");
  std::string pell_D, pell_N;
  std::uint64_t pell_bound = 1000;
  std::optional<std::string> pell_s0, pell_s1, pell_t;
  bool pell_swapped = false;
  std::optional<int> pell_count;
  pell->add_option("--D", pell_D, "Positive nonsquare")->required();
  pell->add_option("--N", pell_N, "Nonzero integer")->required();
  pell->add_option("--bound", pell_bound, "Seed search bound on |y|");
  pell->add_option("--seed0", pell_s0, "First seed 'x,y'");
  pell->add_option("--seed1", pell_s1, "Second seed 'x,y'");
  pell->add_option("--t", pell_t, "Recurrence multiplier (default from the fundamental unit)");
  pell->add_flag("--swapped", pell_swapped, "Seeds are (y, x) on the curve");
  pell->add_option("--count", pell_count, "Terms to generate (default --horizon)");
  pell->callback([&] {
    action = [&] { return cmd_pell(g, pell_D, pell_N, pell_bound, pell_s0, pell_s1, pell_t, pell_swapped, pell_count, out); };
  });

  auto* fam = app.add_subcommand("family", "Equation families and finiteness checks");
  fam->require_subcommand(1);
  auto* fam_b = fam->add_subcommand("build", "Build and verify a family");
  std::optional<std::string> fam_ex, fam_kind, fam_params;
  fam_b->add_option("--example", fam_ex, "Example id");
  fam_b->add_option("--kind", fam_kind, "first, second, third or fourth");
  fam_b->add_option("--params", fam_params, "Parameter JSON");
  fam_b->callback([&] { action = [&] { return cmd_family_build(g, fam_ex, fam_kind, fam_params, out); }; });
  auto* fam_o = fam->add_subcommand("obstruction", "Discriminant test for U(x) = V(y)");
  std::string fam_U, fam_V;
  fam_o->add_option("--U", fam_U, "Polynomial JSON")->required();
  fam_o->add_option("--V", fam_V, "Polynomial JSON")->required();
  fam_o->callback([&] { action = [&] { return cmd_obstruction(fam_U, fam_V, out); }; });
  auto* fam_c = fam->add_subcommand("cone", "Parametrize a point of 3a^2 + b^2 = c^2");
  std::string cone_a, cone_b, cone_c;
  fam_c->add_option("--a", cone_a, "Rational")->required();
  fam_c->add_option("--b", cone_b, "Rational")->required();
  fam_c->add_option("--c", cone_c, "Rational")->required();
  fam_c->callback([&] { action = [&] { return cmd_cone(cone_a, cone_b, cone_c, out); }; });

  auto* blk = app.add_subcommand("blocks", "Equal products from two blocks of consecutive integers");
  blk->require_subcommand(1);
  auto* blk_s = blk->add_subcommand("search", "Exhaustive search");
  int blk_N = 0, blk_start = 0;
  std::optional<int> blk_k, blk_l;
  std::optional<std::string> blk_class;
  blk_s->add_option("--N", blk_N, "Maximum block length")->required();
  blk_s->add_option("--max-start", blk_start, "Largest block start")->required();
  blk_s->add_option("--kmax", blk_k, "Largest k (default lmax - 1)");
  blk_s->add_option("--lmax", blk_l, "Largest l (default N)");
  blk_s->add_option("--class", blk_class, "k-div-l, k-div-2l or k-ndiv-2l");
  blk_s->callback([&] { action = [&] { return cmd_blocks(blk_N, blk_start, blk_k, blk_l, blk_class, out); }; });

  auto* vp = app.add_subcommand("verify-paper", "Run the example regression suite");
  std::vector<std::string> vp_ids;
  vp->add_option("ids", vp_ids, "Example ids, or 'all' (default)");
  vp->callback([&] { action = [&] { return cmd_verify_paper(g, vp_ids, out); }; });

  auto* prop = app.add_subcommand("property", "Randomized property run (uses --seed)");
  std::string prop_name;
  int prop_count = 200;
  prop->add_option("--name", prop_name, "factorization, commutation, cone or decompose")->required();
  prop->add_option("--count", prop_count, "Draws per case");
  prop->callback([&] { action = [&] { return cmd_property(g, prop_name, prop_count, out); }; });

  int code = kExitOk;
  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
    code = action ? action() : kExitInput;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << app.version() << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (g.json) {
      emit(out, json{{"error", json{{"code", "InvalidInput"}, {"message", e.what()}}}});
    } else {
      err << "error: " << e.what() << "\n";
    }
    return kExitInput;
  } catch (const Error& e) {
    if (g.json) {
      emit(out, json{{"error", json{{"code", error_name(e.code())}, {"message", e.what()}}}});
    } else {
      err << "error: " << error_name(e.code()) << ": " << e.what() << "\n";
    }
    code = exit_code_for(e.code());
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  err << "wall time: " << ms << " ms\n";
  return code;
}

}  // namespace fxgy
