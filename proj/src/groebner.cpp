#include <hilb/errors.hpp>
#include <hilb/groebner.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace hilb {

Ideal::Ideal(RingPtr r, std::vector<Polynomial> gens) : ring(std::move(r)) {
  for (auto& g : gens) {
    if (!same_ring(g.ring(), ring)) throw std::invalid_argument("Ideal: generator from a different ring");
    if (!g.is_zero()) generators.push_back(g.in_ring(ring));
  }
}

Ideal Ideal::parse(const RingPtr& r, const std::vector<std::string>& gens) {
  std::vector<Polynomial> ps;
  ps.reserve(gens.size());
  for (const auto& s : gens) ps.push_back(parse_polynomial(s, r));
  return Ideal(r, std::move(ps));
}

bool Ideal::all_monomial() const {
  return std::all_of(generators.begin(), generators.end(), [](const Polynomial& p) { return p.is_monomial(); });
}

Ideal Ideal::in_ring(const RingPtr& target) const {
  std::vector<Polynomial> gens;
  for (const auto& g : generators) gens.push_back(g.in_ring(target));
  return Ideal(target, std::move(gens));
}

GroebnerBasis::GroebnerBasis(RingPtr ring, std::vector<Polynomial> reduced_elements)
    : ring_(std::move(ring)), elements_(std::move(reduced_elements)) {
  const auto& ord = ring_->order();
  std::sort(elements_.begin(), elements_.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(elements_.size());
  for (const auto& g : elements_) out.push_back(g.leading_monomial());
  return out;
}

bool GroebnerBasis::operator==(const GroebnerBasis& o) const {
  return same_ring(ring_, o.ring_) && elements_ == o.elements_;
}

namespace {

Polynomial reduce_fully(Polynomial p, const std::vector<Polynomial>& divisors) {
  std::vector<Term> remainder;
  while (!p.is_zero()) {
    const Term& lt = p.leading_term();
    const Polynomial* hit = nullptr;
    for (const auto& g : divisors) {
      if (g.leading_monomial().divides(lt.monomial)) {
        hit = &g;
        break;
      }
    }
    if (hit) {
      const Monomial m = hit->leading_monomial().quotient_of(lt.monomial);
      const Rational c = lt.coefficient / hit->leading_coefficient();
      p.subtract_multiple(*hit, m, c);
    } else {
      remainder.push_back(p.take_leading());
    }
  }
  return Polynomial(p.ring(), std::move(remainder));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  Polynomial a = f.times(f.leading_monomial().quotient_of(l), 1 / f.leading_coefficient());
  a.subtract_multiple(g, g.leading_monomial().quotient_of(l), 1 / g.leading_coefficient());
  return a;
}

using Pair = std::pair<std::size_t, std::size_t>;

// Buchberger's second criterion: some third element k with LM(k) | lcm(i,j)
// whose pairs with i and with j have already been treated.
bool chain_criterion(std::size_t i, std::size_t j, const Monomial& l, const std::vector<Polynomial>& g,
                     const std::set<Pair>& pending) {
  auto key = [](std::size_t a, std::size_t b) { return a < b ? Pair{a, b} : Pair{b, a}; };
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (k == i || k == j) continue;
    if (!g[k].leading_monomial().divides(l)) continue;
    if (pending.count(key(i, k)) || pending.count(key(j, k))) continue;
    return true;
  }
  return false;
}

std::vector<Polynomial> reduce_basis(std::vector<Polynomial> g) {
  // Drop elements whose leading monomial is divisible by another's; of equal
  // leading monomials the first survives.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& li = g[i].leading_monomial();
      const auto& lj = g[j].leading_monomial();
      if (lj.divides(li) && (li != lj || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    reduced.push_back(reduce_fully(minimal[i], others).monic());
  }
  return reduced;
}

}  // namespace

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  if (!same_ring(f.ring(), gb.ring())) throw std::invalid_argument("normal_form: ring mismatch");
  return reduce_fully(f.in_ring(gb.ring()), gb.elements());
}

GroebnerBasis buchberger(const Ideal& ideal, BuchbergerOptions options) {
  const RingPtr& ring = ideal.ring;
  const auto& ord = ring->order();
  std::vector<Polynomial> g;
  for (const auto& p : ideal.generators) {
    if (p.is_zero()) continue;
    if (p.is_constant()) return GroebnerBasis(ring, {Polynomial::constant(ring, 1)});
    g.push_back(p.monic());
  }
  if (g.empty()) return GroebnerBasis(ring, {});

  std::set<Pair> pending;
  for (std::size_t j = 1; j < g.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) pending.emplace(i, j);
  }

  while (!pending.empty()) {
    // Normal strategy: least lcm first; ties go to the smallest index pair.
    auto best = pending.begin();
    Monomial best_lcm = g[best->first].leading_monomial().lcm(g[best->second].leading_monomial());
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      Monomial l = g[it->first].leading_monomial().lcm(g[it->second].leading_monomial());
      if (ord.compare(l, best_lcm) < 0) {
        best = it;
        best_lcm = std::move(l);
      }
    }
    const auto [i, j] = *best;
    if (options.use_criteria) {
      if (g[i].leading_monomial().coprime(g[j].leading_monomial()) ||
          chain_criterion(i, j, best_lcm, g, pending)) {
        pending.erase(best);
        continue;
      }
    }
    pending.erase(best);
    Polynomial r = reduce_fully(s_polynomial(g[i], g[j]), g);
    if (r.is_zero()) continue;
    if (r.is_constant()) return GroebnerBasis(ring, {Polynomial::constant(ring, 1)});
    g.push_back(r.monic());
    const std::size_t t = g.size() - 1;
    for (std::size_t k = 0; k < t; ++k) pending.emplace(k, t);
  }
  return GroebnerBasis(ring, reduce_basis(std::move(g)));
}

bool ideal_member(const Polynomial& f, const GroebnerBasis& gb) { return normal_form(f, gb).is_zero(); }

bool ideal_member(const Polynomial& f, const Ideal& ideal) { return ideal_member(f, buchberger(ideal)); }

bool ideal_equal(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring, b.ring)) throw std::invalid_argument("ideal_equal: ideals live in different rings");
  return buchberger(a).elements() == buchberger(b.in_ring(a.ring)).elements();
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring, b.ring)) throw std::invalid_argument("ideal_product: ring mismatch");
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators) {
    for (const auto& g : b.generators) {
      Polynomial p = f * g.in_ring(a.ring);
      if (std::find(gens.begin(), gens.end(), p) == gens.end()) gens.push_back(std::move(p));
    }
  }
  return Ideal(a.ring, std::move(gens));
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring, b.ring)) throw std::invalid_argument("ideal_sum: ring mismatch");
  std::vector<Polynomial> gens = a.generators;
  for (const auto& g : b.generators) gens.push_back(g.in_ring(a.ring));
  return Ideal(a.ring, std::move(gens));
}

Ideal Localization::extend(const std::vector<Polynomial>& gens) const {
  std::vector<Polynomial> out;
  out.reserve(gens.size() + 1);
  for (const auto& g : gens) out.push_back(g.in_ring(ring));
  out.push_back(relation);
  return Ideal(ring, std::move(out));
}

Localization localize_invert(const RingPtr& ring, std::string_view variable) {
  const auto idx = ring->index_of(variable);
  if (!idx) throw InputError("localize_invert: unknown variable '" + std::string(variable) + "'");
  std::string name = "u";
  if (ring->index_of(name)) name = "u_" + std::string(variable);
  while (ring->index_of(name)) name += '_';

  std::vector<std::string> vars = ring->variables();
  vars.insert(vars.begin() + static_cast<std::ptrdiff_t>(*idx) + 1, name);

  MultiGrading grading = ring->grading();
  MultiDegree inv = grading.degrees[*idx];
  for (auto& d : inv) d = -d;
  grading.degrees.insert(grading.degrees.begin() + static_cast<std::ptrdiff_t>(*idx) + 1, inv);

  MonomialOrder order = ring->order();
  if (order.kind() == MonomialOrder::Kind::Weighted) {
    std::vector<long> w = order.weights();
    w.insert(w.begin() + static_cast<std::ptrdiff_t>(*idx) + 1, w[*idx]);
    order = MonomialOrder::weighted(std::move(w), order.tiebreak());
  }

  Localization loc;
  loc.ring = Ring::make(std::move(vars), std::move(grading), std::move(order));
  loc.variable = *idx;
  loc.inverse = *idx + 1;
  loc.relation = Polynomial::variable(loc.ring, loc.variable) * Polynomial::variable(loc.ring, loc.inverse) -
                 Polynomial::constant(loc.ring, 1);
  return loc;
}

}  // namespace hilb
