#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "fxgy/json_io.hpp"

using namespace fxgy;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  json j() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("verify-paper") {
  auto r = run({"verify-paper", "1.2"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("PASS 1.2") != std::string::npos);
  CHECK(r.err.find("wall time") != std::string::npos);

  auto j = run({"--json", "verify-paper", "4.2"});
  CHECK(j.code == kExitOk);
  auto doc = j.j();
  CHECK(doc["summary"]["failed_examples"] == 0);
  CHECK(j.out.find("761760000") != std::string::npos);

  auto unknown = run({"--json", "verify-paper", "9.9"});
  CHECK(unknown.code == kExitInput);
  CHECK(unknown.j()["error"]["code"] == "UnknownExampleId");
}

TEST_CASE("reps") {
  auto r = run({"--json", "reps", "--m", "65", "--form", "sq"});
  CHECK(r.code == kExitOk);
  auto reps = r.j()["reps"];
  REQUIRE(reps.size() == 2);
  CHECK(reps[0]["x"] == 8);
  CHECK(reps[1]["y"] == 4);

  auto bad = run({"--json", "reps", "--M", "21", "--form", "sq"});
  CHECK(bad.code == kExitInput);
  CHECK(bad.j()["error"]["code"] == "BadModulusClass");

  auto loose = run({"--json", "reps", "--m", "50421", "--form", "hex", "--unrestricted"});
  CHECK(loose.code == kExitOk);
  CHECK(loose.out.find("211") != std::string::npos);

  auto text = run({"reps", "--M", "21", "--form", "sq"});
  CHECK(text.code == kExitInput);
  CHECK(text.err.find("error: BadModulusClass") != std::string::npos);
}

TEST_CASE("pte") {
  auto c = run({"--json", "pte", "construct", "--m", "4", "--M", "1105"});
  CHECK(c.code == kExitOk);
  CHECK(c.j()["verified"] == true);

  const std::string path = "cli_test_poly.json";
  {
    std::ofstream f(path);
    f << R"({"coeffs": ["-36", "0", "1"]})";
  }
  auto d = run({"--json", "pte", "decompose", "--f", path, "--m", "1"});
  std::remove(path.c_str());
  CHECK(d.code == kExitOk);
  CHECK(d.j()["inner"]["coeffs"] == json::array({"0", "1"}));

  auto inline_json = run({"--json", "pte", "decompose", "--poly", R"({"coeffs": ["1", "-2", "1"]})", "--m", "1"});
  CHECK(inline_json.code == kExitInput);
  CHECK(inline_json.j()["error"]["code"] == "NotSimpleRooted");

  auto schema = run({"--json", "pte", "decompose", "--f", R"({"coefs": [1]})", "--m", "1"});
  CHECK(schema.code == kExitInput);
  CHECK(schema.j()["error"]["code"] == "InvalidInput");
}

TEST_CASE("stdpair and classify") {
  auto f = run({"--json", "stdpair", "factorize", "--N", "3", "--w1", "14", "--w2", "77"});
  CHECK(f.code == kExitOk);
  CHECK(f.j()["u"] == "-98098");
  CHECK(f.j()["b"] == "2401");

  auto c = run({"--json", "classify", "--k", "5", "--l", "7", "--both-simple"});
  CHECK(c.code == kExitOk);
  CHECK(c.j()["triples"].empty());
}

TEST_CASE("pell") {
  auto s = run({"--json", "pell", "--D", "10", "--N", "-2600", "--bound", "100"});
  CHECK(s.code == kExitOk);
  auto seeds = s.j()["seeds"];
  CHECK(std::find(seeds.begin(), seeds.end(), json::array({"280", "90"})) != seeds.end());

  auto g = run({"--json", "pell", "--D", "2", "--N", "-1", "--seed0", "1,1", "--seed1", "7,5", "--count", "4"});
  CHECK(g.code == kExitOk);
  CHECK(g.out.find("239") != std::string::npos);

  auto off = run({"--json", "pell", "--D", "2", "--N", "-1", "--seed0", "1,2", "--seed1", "7,5"});
  CHECK(off.code == kExitVerification);
  CHECK(off.j()["error"]["code"] == "OffCurve");
}

TEST_CASE("family and blocks") {
  auto f = run({"--json", "--horizon", "12", "family", "build", "--example", "7.4"});
  CHECK(f.code == kExitOk);
  CHECK(f.j()[0]["certificate"]["verified"] == true);
  CHECK(f.j()[0]["certificate"]["horizon"] == 12);

  auto b = run({"--json", "blocks", "search", "--N", "3", "--max-start", "20"});
  CHECK(b.code == kExitOk);
  CHECK(b.out.find("\"210\"") != std::string::npos);

  auto big = run({"--json", "blocks", "search", "--N", "13", "--max-start", "20"});
  CHECK(big.code == kExitResource);
  CHECK(big.j()["error"]["code"] == "ResourceBoundExceeded");
}

TEST_CASE("argument errors and stability") {
  CHECK(run({"--json", "nope"}).code == kExitInput);
  CHECK(run({"reps", "--form", "sq"}).code == kExitInput);
  CHECK(run({"--horizon", "0", "verify-paper", "1.1"}).code == kExitInput);
  auto a = run({"--json", "blocks", "search", "--N", "4", "--max-start", "50"});
  auto b = run({"--json", "blocks", "search", "--N", "4", "--max-start", "50"});
  CHECK(a.out == b.out);
}
