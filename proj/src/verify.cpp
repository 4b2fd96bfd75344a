#include <hilb/errors.hpp>
#include <hilb/verify.hpp>

#include <chrono>

namespace hilb {

MultiGrading torus_bigrading() { return MultiGrading::from_degrees({{1, 2}, {2, 1}, {3, -3}}); }

MultiGrading nonnegative_bigrading() { return MultiGrading::from_degrees({{1, 0}, {1, 1}, {0, 3}}); }

RingPtr counterexample_ring(const MultiGrading& grading, MonomialOrder order) {
  return Ring::make({"x", "y", "z"}, grading, std::move(order));
}

Ideal counterexample_ideal(const RingPtr& ring) {
  const Ideal base = Ideal::parse(ring, {"x^2", "y^2", "y*z", "z^2"});
  const Ideal binomial = Ideal::parse(ring, {"y^3 - x^3*z"});
  return ideal_sum(ideal_product(base, base), binomial);
}

Ideal counterexample_ideal() { return counterexample_ideal(counterexample_ring()); }

Ideal point_ideal(const RingPtr& ring, const std::vector<Rational>& point) {
  if (point.size() != ring->nvars()) throw InputError("point_ideal: coordinate count differs from variable count");
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < point.size(); ++i) {
    gens.push_back(Polynomial::variable(ring, i) - Polynomial::constant(ring, point[i]));
  }
  return Ideal(ring, std::move(gens));
}

namespace {

class StageTimer {
 public:
  explicit StageTimer(VerificationReport& r) : report_(r), start_(std::chrono::steady_clock::now()) {}
  void lap(const std::string& stage) {
    const auto now = std::chrono::steady_clock::now();
    report_.timings_ms.emplace_back(stage,
                                    std::chrono::duration_cast<std::chrono::milliseconds>(now - start_).count());
    start_ = now;
  }

 private:
  VerificationReport& report_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

VerificationReport verify_ideal(const Ideal& ideal, std::optional<std::size_t> torus_row) {
  if (ideal.is_zero()) throw DegenerateIdealError("the zero ideal is not zero-dimensional");
  VerificationReport report;
  StageTimer timer(report);

  const GroebnerBasis gb = buchberger(ideal);
  timer.lap("groebner");
  if (gb.is_unit()) throw DegenerateIdealError("the unit ideal has colength 0");

  bool graded = heft_check(ideal.ring->grading()).has_value();
  for (const auto& g : ideal.generators) graded = graded && is_homogeneous(g).has_value();
  report.graded = graded;

  if (graded) {
    GradedHomOptions opts;
    opts.torus_row = torus_row;
    const auto result = hom_dim_graded(ideal, opts);
    timer.lap("tangent");
    report.colength = result.quotient.colength();
    report.min_gen_count = result.minimal_generators.size();
    report.tangent_total = result.summary.total;
    report.torus_row = result.summary.torus_row;
    report.per_bidegree = result.summary.per_bidegree;
    report.weight_marginal = weight_marginal(result.summary, report.torus_row);
    if (auto it = report.weight_marginal.find(0); it != report.weight_marginal.end()) {
      report.torus_weight0_dim = it->second;
    }
  } else {
    report.colength = standard_monomials(gb).colength();
    timer.lap("quotient");
    report.min_gen_count = gb.size();
    report.tangent_total = hom_dim_ungraded(ideal);
    timer.lap("tangent");
  }
  report.parity_violation = (report.tangent_total % 2) != (report.colength % 2);
  return report;
}

CounterexampleVerdict verify_counterexample(MonomialOrder order) {
  CounterexampleVerdict v;
  v.report = verify_ideal(counterexample_ideal(counterexample_ring(torus_bigrading(), std::move(order))), 1);
  auto expect = [&](const char* key, std::size_t got, std::size_t want) {
    if (got != want) {
      v.failures.push_back(std::string(key) + ": expected " + std::to_string(want) + ", got " + std::to_string(got));
    }
  };
  expect("colength", v.report.colength, 24);
  expect("tangent_total", v.report.tangent_total, 99);
  expect("torus_weight0_dim", v.report.torus_weight0_dim, 1);
  if (!v.report.parity_violation) v.failures.push_back("parity_violation: expected true, got false");
  return v;
}

}  // namespace hilb
