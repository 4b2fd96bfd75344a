#include <hilb/errors.hpp>
#include <hilb/tangent.hpp>

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace hilb {

std::size_t hom_dim_taylor(const Ideal& ideal) {
  if (!ideal.all_monomial()) throw InputError("hom_dim_taylor: generators must be monomials");
  if (ideal.is_zero()) throw InfiniteQuotientError("the zero ideal has infinite colength");
  const std::size_t nv = ideal.ring->nvars();
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators) gens.push_back(g.leading_monomial());

  auto in_ideal = [&](const Monomial& m) {
    return std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return g.divides(m); });
  };
  for (std::size_t v = 0; v < nv; ++v) {
    const bool bounded = std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) {
      for (std::size_t w = 0; w < nv; ++w) {
        if ((w == v) != (g[w] > 0)) return false;
      }
      return true;
    });
    if (!bounded) throw InfiniteQuotientError("infinite quotient: no pure power of a variable among generators");
  }

  std::set<Monomial> staircase;
  const Monomial one(nv);
  if (!in_ideal(one)) {
    std::deque<Monomial> queue{one};
    staircase.insert(one);
    while (!queue.empty()) {
      const Monomial m = queue.front();
      queue.pop_front();
      for (std::size_t v = 0; v < nv; ++v) {
        Monomial next = m * Monomial::variable(nv, v);
        if (in_ideal(next) || staircase.count(next)) continue;
        staircase.insert(next);
        queue.push_back(std::move(next));
      }
    }
  }
  const std::vector<Monomial> basis(staircase.begin(), staircase.end());
  const std::size_t n = basis.size();
  const std::size_t k = gens.size();
  if (n == 0) return 0;
  auto position = [&](const Monomial& m) -> std::optional<std::size_t> {
    auto it = std::lower_bound(basis.begin(), basis.end(), m);
    if (it == basis.end() || *it != m) return std::nullopt;
    return static_cast<std::size_t>(it - basis.begin());
  };

  // (lcm/m_i) phi(m_i) - (lcm/m_j) phi(m_j) = 0, one row per basis element
  // of S/I.
  RowSpace constraints(k * n);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const Monomial l = gens[i].lcm(gens[j]);
      const Monomial ui = gens[i].quotient_of(l);
      const Monomial uj = gens[j].quotient_of(l);
      std::vector<RationalVector> rows(n, RationalVector(k * n));
      for (std::size_t p = 0; p < n; ++p) {
        if (auto q = position(ui * basis[p])) rows[*q][i * n + p] += 1;
        if (auto q = position(uj * basis[p])) rows[*q][j * n + p] -= 1;
      }
      for (auto& r : rows) constraints.insert(std::move(r));
    }
  }
  return k * n - constraints.rank();
}

}  // namespace hilb
