#include <hilb/cli.hpp>
#include <hilb/errors.hpp>
#include <hilb/report.hpp>

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace hilb;

namespace {

const std::filesystem::path kData = HILB_TEST_DATA_DIR;

struct RunResult {
  int code;
  std::string out, err;
};

RunResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json strip_timings(Json j) {
  j.erase("timings");
  return j;
}

}  // namespace

TEST_CASE("ideal file parsing") {
  const auto f = parse_ideal_file(
      "# comment\n"
      "vars: x y z   # trailing comment\n"
      "\n"
      "deg x = (1, 2)\n"
      "deg y = (2, 1)\n"
      "deg z = (3, -3)\n"
      "gen: y^3 - x^3*z\n"
      "gen: x^4\n");
  CHECK(f.ring->variables() == std::vector<std::string>{"x", "y", "z"});
  CHECK(f.ring->grading().rows == 2);
  CHECK(f.ring->grading().degrees[2] == MultiDegree{3, -3});
  REQUIRE(f.generators.size() == 2);
  CHECK(f.generators[0] == parse_polynomial("y^3 - x^3*z", f.ring));

  const auto s = parse_ideal_file("vars: a b\ngen: a*b\n", MonomialOrder::lex());
  CHECK(s.ring->grading() == MultiGrading::standard(2));
  CHECK(s.ring->order() == MonomialOrder::lex());
}

TEST_CASE("ideal file errors") {
  CHECK_THROWS_AS(parse_ideal_file("gen: x\n"), ParseError);
  CHECK_THROWS_AS(parse_ideal_file("vars: x\nvars: y\n"), ParseError);
  CHECK_THROWS_AS(parse_ideal_file("vars: x y\nfoo: 1\n"), ParseError);
  CHECK_THROWS_AS(parse_ideal_file("vars: x y\ndeg x = (1, a)\ndeg y = (1, 1)\n"), ParseError);
  CHECK_THROWS_AS(parse_ideal_file("vars: x y\ndeg x = (1)\n"), InputError);
  CHECK_THROWS_AS(parse_ideal_file("vars: x y\ndeg x = (1)\ndeg y = (1, 2)\n"), InputError);
  CHECK_THROWS_AS(parse_ideal_file("vars: x y\ndeg x = (1)\ndeg y = (1)\ndeg w = (1)\n"), InputError);
  CHECK_THROWS_AS(parse_ideal_file("vars: x x\n"), InputError);
  CHECK_THROWS_AS(parse_ideal_file("vars: x y\ngen: x + w\n"), InputError);
  try {
    parse_ideal_file("vars: x y\n\ngen: x + * y\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    CHECK(e.position() == 20);  // offset of the stray * in the whole text
  }
  CHECK_THROWS_AS(read_ideal_file(kData / "does-not-exist.ideal"), InputError);
}

TEST_CASE("report json and golden comparison") {
  VerificationReport r;
  r.colength = 24;
  r.tangent_total = 99;
  r.weight_marginal = {{-2, 3}, {0, 1}, {10, 2}};
  r.torus_weight0_dim = 1;
  r.parity_violation = true;
  r.timings_ms = {{"groebner", 5}};
  const Json j = to_json(r);
  CHECK(j["weight_marginal"].dump() == R"({"-2":3,"0":1,"10":2})");
  CHECK(j["timings"]["groebner"] == 5);

  CHECK(compare_golden(j, j).equal);
  Json other = j;
  other["timings"]["groebner"] = 500;
  CHECK(compare_golden(j, other).equal);
  other["tangent_total"] = 98;
  const auto cmp = compare_golden(j, other);
  CHECK_FALSE(cmp.equal);
  CHECK(cmp.mismatched_keys == std::vector<std::string>{"tangent_total"});
  Json missing = j;
  missing.erase("colength");
  CHECK(compare_golden(j, missing).mismatched_keys == std::vector<std::string>{"colength"});
  CHECK_THROWS_AS(compare_golden_file(j, kData / "does-not-exist.json"), InputError);
  CHECK_THROWS_AS(compare_golden_file(j, kData / "twopoints.ideal"), InputError);
}

TEST_CASE("verify on the built-in ideal") {
  const auto res = run_cli({"verify"});
  CHECK(res.code == 0);
  const Json j = Json::parse(res.out);
  CHECK(j["colength"] == 24);
  CHECK(j["tangent_total"] == 99);
  CHECK(j["torus_weight0_dim"] == 1);
  CHECK(j["parity_violation"] == true);
  CHECK(j["weight_marginal"]["0"] == 1);
  CHECK(compare_golden_file(j, kData / "counterexample_golden.json").equal);

  const auto again = run_cli({"verify", "--order", "lex"});
  CHECK(again.code == 0);
  CHECK(strip_timings(Json::parse(again.out)) == strip_timings(j));
  CHECK(strip_timings(Json::parse(run_cli({"verify"}).out)).dump() == strip_timings(j).dump());
}

TEST_CASE("golden option") {
  CHECK(run_cli({"verify", "--golden", (kData / "counterexample_golden.json").string()}).code == 0);

  const auto tmp = std::filesystem::temp_directory_path() / "hilbcheck_golden_98.json";
  {
    std::ifstream in(kData / "counterexample_golden.json");
    Json g = Json::parse(in);
    g["tangent_total"] = 98;
    std::ofstream(tmp) << g.dump();
  }
  const auto bad = run_cli({"verify", "--golden", tmp.string()});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("tangent_total") != std::string::npos);
  std::filesystem::remove(tmp);

  CHECK(run_cli({"verify", "--golden", (kData / "missing.json").string()}).code == 2);
}

TEST_CASE("json option writes the report") {
  const auto tmp = std::filesystem::temp_directory_path() / "hilbcheck_report.json";
  const auto res = run_cli({"tangent", "--input", (kData / "twopoints.ideal").string(), "--json", tmp.string()});
  CHECK(res.code == 0);
  std::ifstream in(tmp);
  CHECK(Json::parse(in) == Json::parse(res.out));
  std::filesystem::remove(tmp);
}

TEST_CASE("subcommands") {
  const auto two = run_cli({"tangent", "--input", (kData / "twopoints.ideal").string()});
  CHECK(two.code == 0);
  CHECK(Json::parse(two.out)["tangent_total"] == 6);

  const auto cusp = run_cli({"verify", "--input", (kData / "cusp.ideal").string()});
  CHECK(cusp.code == 0);
  const Json cj = Json::parse(cusp.out);
  CHECK(cj["colength"] == 3);
  CHECK(cj["graded"] == true);

  const auto gb = run_cli({"gb", "--input", (kData / "twopoints.ideal").string(), "--order", "lex"});
  CHECK(gb.code == 0);
  CHECK(Json::parse(gb.out)["basis"] == Json::array({"z", "y", "x^2 - x"}));

  const auto parity = run_cli({"parity-scan", "--max-n", "4"});
  CHECK(parity.code == 0);
  CHECK(Json::parse(parity.out)["total_ideals"] == 23);

  const auto quiver = run_cli({"quiver-check", "--random-reps", "5"});
  CHECK(quiver.code == 0);
  CHECK(Json::parse(quiver.out)["all_ok"] == true);

  const auto theory = run_cli({"theory-check", "--random-cases", "3"});
  CHECK(theory.code == 0);
  CHECK(Json::parse(theory.out)["all_passed"] == true);
}

TEST_CASE("input errors exit with 2 and print no report") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"verify", "--input", (kData / "malformed.ideal").string()},
           {"verify", "--input", (kData / "nope.ideal").string()},
           {"tangent"},
           {"verify", "--order", "deglex"},
           {"frobnicate"},
           {},
           {"parity-scan", "--max-n", "0"}}) {
    const auto res = run_cli(args);
    CHECK(res.code == 2);
    CHECK(res.out.empty());
    CHECK_FALSE(res.err.empty());
  }
  const auto tmp = std::filesystem::temp_directory_path() / "hilbcheck_unit.ideal";
  std::ofstream(tmp) << "vars: x y z\ngen: x\ngen: x - 1\n";
  CHECK(run_cli({"verify", "--input", tmp.string()}).code == 2);
  std::ofstream(tmp) << "vars: x y z\ngen: x\ngen: y\n";
  CHECK(run_cli({"tangent", "--input", tmp.string()}).code == 2);
  std::filesystem::remove(tmp);
}

TEST_CASE("help") {
  const auto res = run_cli({"--help"});
  CHECK(res.code == 0);
  CHECK(res.out.find("parity-scan") != std::string::npos);
}
