#include <hilb/errors.hpp>
#include <hilb/linalg.hpp>
#include <hilb/theory.hpp>

#include <algorithm>
#include <random>
#include <stdexcept>

namespace hilb {

bool SymbolicOneForm::is_zero() const {
  return std::all_of(coefficients.begin(), coefficients.end(), [](const Polynomial& p) { return p.is_zero(); });
}

Ideal SymbolicOneForm::coefficient_ideal() const { return Ideal(ring, coefficients); }

SymbolicOneForm differential(const Polynomial& f) {
  SymbolicOneForm w{f.ring(), {}};
  for (std::size_t i = 0; i < f.ring()->nvars(); ++i) w.coefficients.push_back(f.derivative(i));
  return w;
}

SymbolicOneForm operator+(const SymbolicOneForm& a, const SymbolicOneForm& b) {
  if (a.coefficients.size() != b.coefficients.size()) throw std::invalid_argument("one-form arity mismatch");
  SymbolicOneForm out{a.ring, {}};
  for (std::size_t i = 0; i < a.coefficients.size(); ++i) out.coefficients.push_back(a.coefficients[i] + b.coefficients[i]);
  return out;
}

SymbolicOneForm operator*(const Polynomial& p, const SymbolicOneForm& w) {
  SymbolicOneForm out{w.ring, {}};
  for (const auto& c : w.coefficients) out.coefficients.push_back(p * c);
  return out;
}

Localization torus_chart(const RingPtr& base) {
  std::vector<std::string> vars{"t"};
  for (const auto& v : base->variables()) {
    if (v == "t" || v == "u") throw InputError("base function must not use the variable names t or u");
    vars.push_back(v);
  }
  return localize_invert(Ring::make(std::move(vars)), "t");
}

Polynomial torus_character(const Localization& chart, long weight) {
  const std::size_t var = weight >= 0 ? chart.variable : chart.inverse;
  return Polynomial::variable(chart.ring, var).pow(static_cast<unsigned>(weight >= 0 ? weight : -weight));
}

SymbolicOneForm chart_differential(const Polynomial& f, const Localization& chart) {
  SymbolicOneForm w = differential(f.in_ring(chart.ring));
  const Polynomial u = Polynomial::variable(chart.ring, chart.inverse);
  w.coefficients[chart.variable] -= u * u * w.coefficients[chart.inverse];
  w.coefficients[chart.inverse] = Polynomial(chart.ring);
  return w;
}

namespace {

Polynomial embed_fbar(const WeightedFunction& wf, const Localization& chart) { return wf.fbar.in_ring(chart.ring); }

}  // namespace

bool check_splitting_identity(const WeightedFunction& wf) {
  const Localization chart = torus_chart(wf.fbar.ring());
  const Polynomial fbar = embed_fbar(wf, chart);
  const Polynomial chi = torus_character(chart, wf.weight);
  const SymbolicOneForm lhs = chart_differential(chi * fbar, chart);

  // d(chi) = w t^(w-1) dt, written with u when w - 1 < 0.
  SymbolicOneForm dchi{chart.ring, std::vector<Polynomial>(chart.ring->nvars(), Polynomial(chart.ring))};
  dchi.coefficients[chart.variable] = torus_character(chart, wf.weight - 1) * Rational(wf.weight);
  const SymbolicOneForm rhs = chi * chart_differential(fbar, chart) + fbar * dchi;

  const GroebnerBasis unit_relation = buchberger(Ideal(chart.ring, {chart.relation}));
  for (std::size_t i = 0; i < lhs.coefficients.size(); ++i) {
    if (!normal_form(lhs.coefficients[i] - rhs.coefficients[i], unit_relation).is_zero()) return false;
  }
  return true;
}

CriticalLocusResult check_critical_locus_prop(const WeightedFunction& wf) {
  const Localization chart = torus_chart(wf.fbar.ring());
  const Polynomial fbar = embed_fbar(wf, chart);
  const Polynomial f = torus_character(chart, wf.weight) * fbar;

  const Ideal total = chart.extend(chart_differential(f, chart).coefficients);
  std::vector<Polynomial> base_gens{fbar};
  const SymbolicOneForm dfbar = chart_differential(fbar, chart);
  for (const auto& c : dfbar.coefficients) base_gens.push_back(c);
  const Ideal base = chart.extend(base_gens);

  CriticalLocusResult out;
  out.critical_locus = buchberger(total);
  out.base_locus = buchberger(base);
  out.verdict = out.critical_locus.elements() == out.base_locus.elements() ? CriticalLocusResult::Verdict::Equal
                                                                            : CriticalLocusResult::Verdict::Unequal;
  if (wf.weight == 0) {
    out.trivial_character_equal = out.critical_locus.elements() == buchberger(chart.extend(dfbar.coefficients)).elements();
  }
  return out;
}

bool check_smooth_pullback(const Polynomial& f, const Substitution& phi) {
  const RingPtr& source = f.ring();
  const std::size_t n = source->nvars();
  if (phi.images.size() != n) throw InputError("substitution needs one image per source variable");
  for (const auto& im : phi.images) {
    if (!same_ring(im.ring(), phi.target)) throw InputError("substitution images must live in the target ring");
  }

  bool linear = source->variables() == phi.target->variables();
  if (linear) {
    RationalMatrix jac(n, n);
    for (std::size_t i = 0; i < n && linear; ++i) {
      if (phi.images[i].total_degree() > 1) {
        linear = false;
        break;
      }
      for (std::size_t j = 0; j < n; ++j) jac(i, j) = phi.images[i].coefficient(Monomial::variable(n, j));
    }
    linear = linear && rank(jac) == n;
  }
  bool projection = false;
  if (!linear) {
    projection = phi.target->nvars() >= n;
    for (std::size_t i = 0; i < n && projection; ++i) {
      const auto idx = phi.target->index_of(source->variables()[i]);
      projection = idx && phi.images[i] == Polynomial::variable(phi.target, *idx);
    }
  }
  if (!linear && !projection) {
    throw InputError("unsupported substitution: expected an invertible linear change or a projection pullback");
  }

  std::vector<Polynomial> pulled;
  for (const auto& c : differential(f).coefficients) pulled.push_back(c.substitute(phi.images));
  const Ideal preimage(phi.target, std::move(pulled));
  const Ideal pulled_back_locus = differential(f.substitute(phi.images)).coefficient_ideal();
  return ideal_equal(preimage, pulled_back_locus);
}

Polynomial random_base_function(std::uint64_t seed) {
  static const RingPtr ring = Ring::make({"b1", "b2", "b3"});
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> term_count(1, 4);
  std::uniform_int_distribution<int> exponent(2, 4);
  std::uniform_int_distribution<long> coeff(1, 9);
  std::bernoulli_distribution negative(0.5);
  std::vector<Term> terms;
  const int count = term_count(rng);
  for (int k = 0; k < count; ++k) {
    std::vector<int> e(3, 0);
    int budget = exponent(rng);
    for (std::size_t i = 0; i + 1 < e.size(); ++i) {
      std::uniform_int_distribution<int> part(0, budget);
      e[i] = part(rng);
      budget -= e[i];
    }
    e.back() = budget;
    std::shuffle(e.begin(), e.end(), rng);
    const long c = coeff(rng);
    terms.push_back(Term{Monomial(std::move(e)), Rational(negative(rng) ? -c : c)});
  }
  Polynomial p(ring, std::move(terms));
  if (p.is_zero()) p = Polynomial::variable(ring, 0).pow(2);
  return p;
}

bool TheoryReport::all_passed() const {
  return std::all_of(cases.begin(), cases.end(), [](const TheoryCase& c) { return c.passed; });
}

TheoryReport run_theory_checks(std::size_t random_cases, std::uint64_t seed) {
  TheoryReport report;
  auto add = [&](std::string name, bool ok, std::string detail = {}) {
    report.cases.push_back(TheoryCase{std::move(name), ok, std::move(detail)});
  };
  using Verdict = CriticalLocusResult::Verdict;

  const RingPtr b = Ring::make({"b"});
  const RingPtr b12 = Ring::make({"b1", "b2"});
  const RingPtr b123 = Ring::make({"b1", "b2", "b3"});

  add("splitting: fbar = b^2, w = 1", check_splitting_identity({parse_polynomial("b^2", b), 1}));
  {
    const Polynomial fbar = parse_polynomial("b^2", b);
    const Localization chart = torus_chart(b);
    const bool degenerate = chart_differential(fbar, chart) == chart_differential(
        torus_character(chart, 0) * fbar.in_ring(chart.ring), chart);
    add("splitting: w = 0 reduces to df = d fbar", check_splitting_identity({fbar, 0}) && degenerate);
  }
  add("splitting: fbar = b1*b2 - b3^3, w = 2", check_splitting_identity({parse_polynomial("b1*b2 - b3^3", b123), 2}));

  {
    const auto r = check_critical_locus_prop({parse_polynomial("b^2", b), 1});
    const Localization chart = torus_chart(b);
    const bool expected = r.critical_locus.elements() ==
                          buchberger(chart.extend({parse_polynomial("b", b)})).elements();
    add("critical locus: fbar = b^2, w = 1", r.verdict == Verdict::Equal && expected);
  }
  {
    const auto r = check_critical_locus_prop({parse_polynomial("b1^2 + b2^2", b12), 1});
    const Localization chart = torus_chart(b12);
    const bool expected = r.critical_locus.elements() ==
                          buchberger(chart.extend(Ideal::parse(b12, {"b1", "b2"}).generators)).elements();
    add("critical locus: fbar = b1^2 + b2^2, w = 1", r.verdict == Verdict::Equal && expected);
  }
  {
    const auto r = check_critical_locus_prop({parse_polynomial("b^2 + 1", b), 0});
    add("critical locus: fbar = b^2 + 1, w = 0 (trivial character)",
        r.verdict == Verdict::Unequal && r.base_locus.is_unit() && r.trivial_character_equal.value_or(false),
        "Z(df) != pr^-1(Z(d fbar) cap Z(fbar))");
  }

  {
    const RingPtr xy = Ring::make({"x", "y"});
    const Polynomial f = parse_polynomial("x^2", xy);
    add("pullback: identity", check_smooth_pullback(f, {xy, {Polynomial::variable(xy, 0), Polynomial::variable(xy, 1)}}));
    add("pullback: x -> x + y",
        check_smooth_pullback(f, {xy, {parse_polynomial("x + y", xy), Polynomial::variable(xy, 1)}}));
    const RingPtr tb = Ring::make({"t", "b"});
    add("pullback: projection Q[b] -> Q[t,b]",
        check_smooth_pullback(parse_polynomial("b^2", b), {tb, {Polynomial::variable(tb, 1)}}));
  }

  for (const long w : {-2L, -1L, 1L, 2L, 3L}) {
    std::size_t split_ok = 0, locus_ok = 0;
    for (std::size_t i = 0; i < random_cases; ++i) {
      const WeightedFunction wf{random_base_function(seed + i), w};
      split_ok += check_splitting_identity(wf) ? 1 : 0;
      locus_ok += check_critical_locus_prop(wf).verdict == Verdict::Equal ? 1 : 0;
    }
    const std::string tag = "random family, w = " + std::to_string(w);
    add("splitting: " + tag, split_ok == random_cases,
        std::to_string(split_ok) + "/" + std::to_string(random_cases));
    add("critical locus: " + tag, locus_ok == random_cases,
        std::to_string(locus_ok) + "/" + std::to_string(random_cases));
  }
  return report;
}

}  // namespace hilb
