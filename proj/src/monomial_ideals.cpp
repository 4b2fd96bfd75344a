#include <hilb/tangent.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hilb {

std::vector<Staircase> enumerate_staircases(std::size_t n) {
  if (n == 0) throw std::invalid_argument("enumerate_staircases: n must be at least 1");
  constexpr std::size_t nv = 3;
  std::set<Staircase> layer{Staircase{Monomial(nv)}};
  for (std::size_t size = 1; size < n; ++size) {
    std::set<Staircase> next;
    for (const auto& s : layer) {
      for (const auto& m : s) {
        for (std::size_t v = 0; v < nv; ++v) {
          const Monomial c = m * Monomial::variable(nv, v);
          if (std::binary_search(s.begin(), s.end(), c)) continue;
          bool addable = true;
          for (std::size_t w = 0; w < nv && addable; ++w) {
            if (c[w] == 0) continue;
            std::vector<int> e(c.exponents().begin(), c.exponents().end());
            --e[w];
            addable = std::binary_search(s.begin(), s.end(), Monomial(std::move(e)));
          }
          if (!addable) continue;
          Staircase grown = s;
          grown.insert(std::upper_bound(grown.begin(), grown.end(), c), c);
          next.insert(std::move(grown));
        }
      }
    }
    layer = std::move(next);
  }
  return {layer.begin(), layer.end()};
}

std::vector<Monomial> staircase_generators(const Staircase& s) {
  std::set<Monomial> gens;
  const std::size_t nv = s.empty() ? 3 : s.front().size();
  auto inside = [&](const Monomial& m) { return std::binary_search(s.begin(), s.end(), m); };
  for (const auto& m : s) {
    for (std::size_t v = 0; v < nv; ++v) {
      const Monomial c = m * Monomial::variable(nv, v);
      if (inside(c)) continue;
      bool minimal = true;
      for (std::size_t w = 0; w < nv && minimal; ++w) {
        if (c[w] == 0) continue;
        std::vector<int> e(c.exponents().begin(), c.exponents().end());
        --e[w];
        minimal = inside(Monomial(std::move(e)));
      }
      if (minimal) gens.insert(c);
    }
  }
  return {gens.begin(), gens.end()};
}

std::vector<Ideal> enumerate_monomial_ideals(std::size_t n, const RingPtr& ring) {
  if (ring->nvars() != 3) throw std::invalid_argument("enumerate_monomial_ideals: ring must have 3 variables");
  std::vector<Ideal> out;
  for (const auto& s : enumerate_staircases(n)) {
    std::vector<Polynomial> gens;
    for (const auto& m : staircase_generators(s)) gens.push_back(Polynomial::monomial(ring, m));
    out.emplace_back(ring, std::move(gens));
  }
  return out;
}

std::vector<Ideal> enumerate_monomial_ideals(std::size_t n) {
  return enumerate_monomial_ideals(n, Ring::make({"x", "y", "z"}));
}

ParityReport parity_scan(std::size_t n_max) {
  if (n_max == 0) throw std::invalid_argument("parity_scan: n_max must be at least 1");
  const RingPtr ring = Ring::make({"x", "y", "z"});
  ParityReport report;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const auto ideals = enumerate_monomial_ideals(n, ring);
    report.ideals_per_n[n] = ideals.size();
    for (const auto& ideal : ideals) {
      ParityRow row;
      row.n = n;
      for (const auto& g : ideal.generators) row.generators.push_back(g.to_string());
      row.graded_dim = hom_dim_graded(ideal).summary.total;
      row.taylor_dim = hom_dim_taylor(ideal);
      row.agree = row.graded_dim == row.taylor_dim;
      row.parity_ok = row.graded_dim % 2 == n % 2;
      report.all_ok = report.all_ok && row.agree && row.parity_ok;
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

}  // namespace hilb
