#include <hilb/cli.hpp>
#include <hilb/errors.hpp>
#include <hilb/quiver.hpp>
#include <hilb/report.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>

namespace hilb::cli {

namespace {

struct CommonOptions {
  std::string order = "grevlex";
  std::string json_path;
  std::string golden_path;
};

void add_common(CLI::App* sub, CommonOptions& o) {
  sub->add_option("--order", o.order, "Monomial order")->check(CLI::IsMember({"grevlex", "lex"}));
  sub->add_option("--json", o.json_path, "Also write the report to this file");
  sub->add_option("--golden", o.golden_path, "Compare the report with a stored one (timings ignored)");
}

MonomialOrder order_of(const CommonOptions& o) {
  return o.order == "lex" ? MonomialOrder::lex() : MonomialOrder::grevlex();
}

struct Outcome {
  Json report;
  bool ok = true;
};

Outcome cmd_verify(const std::string& input, std::optional<std::size_t> torus_row, const MonomialOrder& order,
                   std::ostream& err) {
  if (input.empty()) {
    auto verdict = verify_counterexample(order);
    for (const auto& f : verdict.failures) err << "verify: " << f << "\n";
    return {to_json(verdict.report), verdict.failures.empty()};
  }
  const Ideal ideal = read_ideal_file(input, order).ideal();
  return {to_json(verify_ideal(ideal, torus_row)), true};
}

Outcome cmd_tangent(const std::string& input, const MonomialOrder& order) {
  const Ideal ideal = read_ideal_file(input, order).ideal();
  const VerificationReport r = verify_ideal(ideal);
  Json j;
  j["colength"] = r.colength;
  j["tangent_total"] = r.tangent_total;
  j["graded"] = r.graded;
  Json pieces = Json::array();
  for (const auto& [d, dim] : r.per_bidegree) pieces.push_back(Json{{"degree", d}, {"dim", dim}});
  j["per_bidegree"] = pieces;
  return {j, true};
}

Outcome cmd_gb(const std::string& input, const CommonOptions& common) {
  const Ideal ideal = read_ideal_file(input, order_of(common)).ideal();
  const GroebnerBasis gb = buchberger(ideal);
  Json j;
  j["order"] = common.order;
  j["size"] = gb.size();
  Json elems = Json::array();
  Json leads = Json::array();
  for (const auto& g : gb.elements()) {
    elems.push_back(g.to_string());
    leads.push_back(to_string(g.leading_monomial(), *ideal.ring));
  }
  j["basis"] = elems;
  j["leading_monomials"] = leads;
  return {j, true};
}

Outcome cmd_quiver(const std::string& input, std::size_t reps, std::size_t dim, std::uint64_t seed,
                   const MonomialOrder& order) {
  const Ideal ideal = input.empty() ? counterexample_ideal(counterexample_ring(torus_bigrading(), order))
                                    : read_ideal_file(input, order).ideal();
  const QuiverRep rep = rep_from_ideal(ideal);
  Json j;
  Json from_ideal;
  from_ideal["n"] = rep.n;
  from_ideal["commuting"] = pairwise_commute(rep);
  from_ideal["cyclic"] = is_cyclic(rep);
  from_ideal["superpotential_zero"] = sgn(superpotential(rep)) == 0;
  from_ideal["gradient_zero"] = gradient_superpotential(rep).is_zero();
  bool ok = from_ideal["commuting"].get<bool>() && from_ideal["cyclic"].get<bool>() &&
            from_ideal["superpotential_zero"].get<bool>() && from_ideal["gradient_zero"].get<bool>();
  j["ideal_rep"] = from_ideal;

  Json tori = Json::array();
  const std::pair<const char*, TorusWeights> named[] = {{"T0", kTorusT0}, {"G", kTorusG}, {"H", kTorusH}};
  for (const auto& [name, w] : named) {
    std::size_t holds = 0;
    long weight = w.a + w.b + w.c;
    for (std::size_t i = 0; i < reps; ++i) {
      const WeightCheck c = check_torus_weights(random_rep(dim, seed + i), w);
      holds += c.holds ? 1 : 0;
      weight = c.weight;
    }
    ok = ok && holds == reps;
    tori.push_back(Json{{"torus", name}, {"weights", {w.a, w.b, w.c}}, {"weight", weight}, {"reps", reps}, {"holds", holds}});
  }
  j["torus_weights"] = tori;

  std::size_t consistent = 0;
  for (std::size_t i = 0; i < reps; ++i) {
    const QuiverRep r = random_rep(dim, seed + i);
    consistent += gradient_superpotential(r).is_zero() == pairwise_commute(r) ? 1 : 0;
  }
  ok = ok && consistent == reps;
  j["gradient_vs_commutators"] = Json{{"reps", reps}, {"consistent", consistent}};
  j["all_ok"] = ok;
  return {j, ok};
}

void write_file(const std::string& path, const Json& j) {
  std::ofstream f(path);
  if (!f) throw InputError("cannot write report to '" + path + "'");
  f << j.dump(2) << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of Hilbert-scheme tangent spaces", "hilbcheck"};
  app.require_subcommand(1);

  CommonOptions common;
  std::string input;
  std::optional<std::size_t> torus_row;
  std::size_t max_n = 5;
  std::size_t reps = 20;
  std::size_t rep_dim = 4;
  std::uint64_t seed = 20231028;
  std::size_t random_cases = 25;

  auto* verify = app.add_subcommand("verify", "Colength, tangent dimension and torus weights of an ideal");
  verify->add_option("--input", input, "Ideal file (default: the built-in counterexample)");
  verify->add_option("--torus-row", torus_row, "Grading row used as the torus weight");
  add_common(verify, common);

  auto* tangent = app.add_subcommand("tangent", "Tangent space dimension at a zero-dimensional ideal");
  tangent->add_option("--input", input, "Ideal file")->required();
  add_common(tangent, common);

  auto* gb = app.add_subcommand("gb", "Reduced Groebner basis");
  gb->add_option("--input", input, "Ideal file")->required();
  add_common(gb, common);

  auto* parity = app.add_subcommand("parity-scan", "Tangent parity over all monomial ideals of small colength");
  parity->add_option("--max-n", max_n, "Largest colength")->check(CLI::Range(1, 8));
  add_common(parity, common);

  auto* quiver = app.add_subcommand("quiver-check", "Superpotential identities on the quiver side");
  quiver->add_option("--input", input, "Ideal file (default: the built-in counterexample)");
  quiver->add_option("--random-reps", reps, "Random representations per torus");
  quiver->add_option("--dim", rep_dim, "Size of the random representations")->check(CLI::Range(1, 12));
  quiver->add_option("--seed", seed, "Seed for the random representations");
  add_common(quiver, common);

  auto* theory = app.add_subcommand("theory-check", "Splitting identity, critical locus and pullback checks");
  theory->add_option("--random-cases", random_cases, "Random base functions per weight");
  theory->add_option("--seed", seed, "Seed for the random family");
  add_common(theory, common);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "hilbcheck: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    const MonomialOrder order = order_of(common);
    Outcome result;
    if (*verify) {
      result = cmd_verify(input, torus_row, order, err);
    } else if (*tangent) {
      result = cmd_tangent(input, order);
    } else if (*gb) {
      result = cmd_gb(input, common);
    } else if (*parity) {
      const ParityReport r = parity_scan(max_n);
      result = {to_json(r), r.all_ok};
    } else if (*quiver) {
      result = cmd_quiver(input, reps, rep_dim, seed, order);
    } else {
      const TheoryReport r = run_theory_checks(random_cases, seed);
      result = {to_json(r), r.all_passed()};
    }

    out << result.report.dump(2) << "\n";
    if (!common.json_path.empty()) write_file(common.json_path, result.report);
    if (!common.golden_path.empty()) {
      const GoldenComparison cmp = compare_golden_file(result.report, common.golden_path);
      if (!cmp.equal) {
        err << "golden mismatch:";
        for (const auto& k : cmp.mismatched_keys) err << " " << k;
        err << "\n";
        result.ok = false;
      }
    }
    return result.ok ? kExitOk : kExitFailure;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
  } catch (const InfiniteQuotientError& e) {
    err << "input error: " << e.what() << "\n";
  } catch (const NotHomogeneousError& e) {
    err << "input error: " << e.what() << "\n";
  } catch (const NoHeftError& e) {
    err << "input error: " << e.what() << "\n";
  }
  return kExitInputError;
}

}  // namespace hilb::cli
