// One line per acceptance criterion; exit status is nonzero if any fails.
#include <hilb/quiver.hpp>
#include <hilb/tangent.hpp>
#include <hilb/theory.hpp>
#include <hilb/verify.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

using namespace hilb;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

int failures = 0;

void criterion(int id, const char* title, double budget_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > budget_s) o.require(false, "took " + std::to_string(secs) + "s, budget " + std::to_string(budget_s) + "s");
  if (!o.pass) ++failures;
  std::printf("[%s] %d %s (%.2fs)%s%s\n", o.pass ? "PASS" : "FAIL", id, title, secs, o.detail.empty() ? "" : ": ",
              o.detail.c_str());
}

std::string str(std::size_t v) { return std::to_string(v); }

Outcome counterexample() {
  Outcome o;
  const auto v = verify_counterexample();
  for (const auto& f : v.failures) o.require(false, f);
  o.require(v.report.colength == 24, "colength " + str(v.report.colength));
  o.require(v.report.tangent_total == 99, "tangent " + str(v.report.tangent_total));
  o.require(v.report.torus_weight0_dim == 1, "weight-0 " + str(v.report.torus_weight0_dim));
  o.require(v.report.parity_violation, "parity not violated");
  if (o.pass) o.detail = "colength 24, tangent 99, weight-0 piece 1, parity violated";
  return o;
}

Outcome parity() {
  Outcome o;
  const auto r = parity_scan(5);
  const std::map<std::size_t, std::size_t> counts{{1, 1}, {2, 3}, {3, 6}, {4, 13}, {5, 24}};
  o.require(r.ideals_per_n == counts, "unexpected ideal counts");
  std::size_t disagree = 0, wrong_parity = 0;
  for (const auto& row : r.rows) {
    disagree += row.graded_dim == row.taylor_dim ? 0 : 1;
    wrong_parity += row.graded_dim % 2 == row.n % 2 ? 0 : 1;
  }
  o.require(disagree == 0, str(disagree) + " oracle disagreements");
  o.require(wrong_parity == 0, str(wrong_parity) + " parity failures");
  o.require(r.all_ok, "scan reported a failure");
  if (o.pass) o.detail = str(r.rows.size()) + " ideals, graded = Taylor, dim = n mod 2";
  return o;
}

Outcome smooth_points() {
  Outcome o;
  const auto r = Ring::make({"x", "y", "z"});
  const std::vector<std::vector<std::vector<Rational>>> families{
      {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
      {{0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {3, 0, 0}},
      {{1, 2, 3}, {-1, 1, 0}, {0, 0, 5}, {2, -3, 1}}};
  std::ostringstream seen;
  for (const auto& pts : families) {
    Ideal acc(r, {Polynomial::constant(r, 1)});
    for (std::size_t k = 1; k <= pts.size(); ++k) {
      acc = ideal_product(acc, point_ideal(r, pts[k - 1]));
      const std::size_t t = tangent_dimension(acc);
      o.require(t == 3 * k, str(k) + " points: tangent " + str(t));
      seen << t << (k == pts.size() ? "" : ",");
    }
    seen << (&pts == &families.back() ? "" : " ");
  }
  if (o.pass) o.detail = "k = 1..4 give 3k in three configurations: " + seen.str();
  return o;
}

Outcome additivity() {
  Outcome o;
  const auto r = Ring::make({"x", "y", "z"});
  const Ideal J = ideal_product(counterexample_ideal(r), point_ideal(r, {1, 0, 0}));
  const auto rep = verify_ideal(J);
  o.require(rep.colength == 25, "colength " + str(rep.colength));
  o.require(rep.tangent_total == 102, "tangent " + str(rep.tangent_total));
  if (o.pass) o.detail = "colength 25, tangent 102";
  return o;
}

Outcome groebner_suite() {
  Outcome o;
  const auto R = counterexample_ring();
  const Ideal I = counterexample_ideal(R);
  const GroebnerBasis gb = buchberger(I);
  std::mt19937_64 rng(20231028);
  std::uniform_int_distribution<long> scale(-7, 7);
  std::size_t identical = 0;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Polynomial> gens = I.generators;
    std::shuffle(gens.begin(), gens.end(), rng);
    const std::size_t extra = rng() % 4;
    for (std::size_t k = 0; k < extra; ++k) gens.push_back(gens[rng() % gens.size()]);
    for (auto& g : gens) {
      long s = scale(rng);
      if (s == 0) s = 1;
      g = g * Rational(s);
    }
    identical += buchberger(Ideal(R, gens), {.use_criteria = trial % 2 == 0}) == gb ? 1 : 0;
  }
  o.require(identical == 50, str(identical) + "/50 shuffles reproduced the basis");

  for (const auto& g : I.generators) o.require(normal_form(g, gb).is_zero(), "generator not reduced to zero");
  for (const auto& g : gb.elements()) o.require(is_homogeneous(g).has_value(), "non-homogeneous basis element");

  std::uniform_int_distribution<int> e(0, 6), c(-9, 9);
  for (int i = 0; i < 200; ++i) {
    std::vector<Term> a, b;
    for (int k = 0; k < 5; ++k) {
      a.push_back({Monomial({e(rng), e(rng), e(rng)}), Rational(c(rng))});
      b.push_back({Monomial({e(rng), e(rng), e(rng)}), Rational(c(rng))});
    }
    const Polynomial f(R, a), g(R, b);
    const Rational s = c(rng);
    const Polynomial nf = normal_form(f, gb);
    o.require(normal_form(nf, gb) == nf, "normal form not idempotent");
    o.require(normal_form(f + g * s, gb) == nf + normal_form(g, gb) * s, "normal form not linear");
  }
  if (o.pass) o.detail = "50/50 shuffles identical; membership, homogeneity, idempotence, linearity hold";
  return o;
}

Outcome quiver_suite() {
  Outcome o;
  const QuiverRep r = rep_from_ideal(counterexample_ideal(counterexample_ring()));
  o.require(r.n == 24, "dimension " + str(r.n));
  o.require(pairwise_commute(r), "matrices do not commute");
  o.require(is_cyclic(r), "not cyclic");
  o.require(sgn(superpotential(r)) == 0, "superpotential nonzero");
  o.require(gradient_superpotential(r).is_zero(), "gradient nonzero");
  const std::pair<const char*, std::pair<TorusWeights, long>> tori[] = {
      {"T0", {kTorusT0, 0}}, {"G", {kTorusG, 1}}, {"H", {kTorusH, 2}}};
  for (const auto& [name, tw] : tori) {
    std::size_t holds = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const WeightCheck c = check_torus_weights(random_rep(4, 20231028 + seed), tw.first);
      holds += c.holds && c.weight == tw.second ? 1 : 0;
    }
    o.require(holds == 20, std::string(name) + ": " + str(holds) + "/20");
  }
  if (o.pass) o.detail = "24-dim rep commutes, cyclic, critical; T0/G/H weights 0/1/2 on 20 reps each";
  return o;
}

Outcome theory_suite() {
  Outcome o;
  const TheoryReport r = run_theory_checks(25, 20231028);
  for (const auto& c : r.cases) o.require(c.passed, c.name);
  const auto w0 = check_critical_locus_prop({parse_polynomial("b^2 + 1", Ring::make({"b"})), 0});
  o.require(w0.verdict == CriticalLocusResult::Verdict::Unequal, "trivial character case did not report unequal");
  if (o.pass) o.detail = str(r.cases.size()) + " cases; trivial character reports unequal";
  return o;
}

}  // namespace

int main() {
  criterion(1, "counterexample reproduction", 600, counterexample);
  criterion(2, "parity suite over monomial ideals, n <= 5", 120, parity);
  criterion(3, "smooth points: tangent dimension 3k", 600, smooth_points);
  criterion(4, "disjoint point added to the counterexample", 600, additivity);
  criterion(5, "Groebner property suite", 60, groebner_suite);
  criterion(6, "quiver suite", 600, quiver_suite);
  criterion(7, "theory suite", 600, theory_suite);
  std::printf("[N/A ] 8 Behrend function value and obstruction theory: out of scope, no finite computation\n");
  return failures == 0 ? 0 : 1;
}
