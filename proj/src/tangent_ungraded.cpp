#include "relations.hpp"

#include <hilb/errors.hpp>
#include <hilb/tangent.hpp>

#include <deque>
#include <stdexcept>

namespace hilb {

namespace detail {

GeneratorRelations generator_relations(const std::vector<Polynomial>& generators, const GroebnerBasis& gb) {
  GeneratorRelations out;
  out.quotient = standard_monomials(gb);
  out.generators = generators;
  const std::size_t n = out.quotient.colength();
  const std::size_t k = generators.size();
  if (n == 0 || k == 0) return out;

  const RingPtr& ring = gb.ring();
  const Ideal basis_ideal(ring, gb.elements());
  const QuotientBasis square = standard_monomials(buchberger(ideal_product(basis_ideal, basis_ideal)));

  RationalMatrix images(square.colength(), k * n);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Polynomial prod = generators[i].times(out.quotient.standard_monomials[j], 1);
      const RationalVector col = square.coordinates(prod);
      for (std::size_t r = 0; r < col.size(); ++r) images(r, i * n + j) = col[r];
    }
  }
  out.relations = kernel_basis(images);
  return out;
}

}  // namespace detail

namespace {

// Multiplication by each variable on (S/I)^k, blockwise.
RationalVector shift(const std::vector<RationalMatrix>& var_mult, std::size_t s, const RationalVector& c,
                     std::size_t n) {
  RationalVector out(c.size());
  const std::size_t k = c.size() / n;
  for (std::size_t i = 0; i < k; ++i) {
    const std::span<const Rational> block(c.data() + i * n, n);
    const RationalVector img = var_mult[s].apply(block);
    std::copy(img.begin(), img.end(), out.begin() + static_cast<std::ptrdiff_t>(i * n));
  }
  return out;
}

}  // namespace

std::size_t hom_dim_ungraded(const Ideal& ideal) {
  if (ideal.is_zero()) throw InfiniteQuotientError("the zero ideal has infinite colength");
  const GroebnerBasis gb = buchberger(ideal);
  if (gb.is_unit()) return 0;
  const auto rel = detail::generator_relations(gb.elements(), gb);
  const QuotientBasis& qb = rel.quotient;
  const std::size_t n = qb.colength();
  const std::size_t k = rel.generators.size();
  const RingPtr& ring = ideal.ring;

  std::vector<RationalMatrix> var_mult;
  for (std::size_t s = 0; s < ring->nvars(); ++s) {
    var_mult.push_back(qb.multiplication_matrix(Polynomial::variable(ring, s)));
  }

  // K is an (S/I)-submodule, so it suffices to impose the condition for
  // module generators of K: relations outside the span of S-multiples of
  // the ones already used.
  RowSpace closure(k * n);
  RowSpace constraints(k * n);
  for (const auto& c : rel.relations) {
    if (!closure.insert(c)) continue;
    std::deque<RationalVector> queue{c};
    while (!queue.empty()) {
      RationalVector w = std::move(queue.front());
      queue.pop_front();
      for (std::size_t s = 0; s < var_mult.size(); ++s) {
        RationalVector next = shift(var_mult, s, w, n);
        if (closure.insert(next)) queue.push_back(std::move(next));
      }
    }
    // sum_i c_i * a_i = 0 in S/I: one row per output basis element.
    std::vector<RationalMatrix> mult;
    for (std::size_t i = 0; i < k; ++i) mult.push_back(qb.multiplication_matrix(qb.element(
        RationalVector(c.begin() + static_cast<std::ptrdiff_t>(i * n),
                       c.begin() + static_cast<std::ptrdiff_t>((i + 1) * n)))));
    for (std::size_t q = 0; q < n; ++q) {
      RationalVector row(k * n);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t p = 0; p < n; ++p) row[i * n + p] = mult[i](q, p);
      }
      constraints.insert(std::move(row));
    }
  }
  return k * n - constraints.rank();
}

bool hom_element_check(const Ideal& ideal, const HomAssignment& assignment) {
  if (assignment.images.size() != ideal.generators.size()) {
    throw std::invalid_argument("hom_element_check: one image per generator required");
  }
  const GroebnerBasis gb = buchberger(ideal);
  const auto rel = detail::generator_relations(ideal.generators, gb);
  const QuotientBasis& qb = rel.quotient;
  const std::size_t n = qb.colength();
  for (const auto& img : assignment.images) {
    if (img.size() != n) throw std::invalid_argument("hom_element_check: image dimension differs from colength");
  }
  if (assignment.bidegree) {
    const MultiGrading& g = ideal.ring->grading();
    for (std::size_t i = 0; i < ideal.generators.size(); ++i) {
      auto h = is_homogeneous(ideal.generators[i], g);
      if (!h) throw std::invalid_argument("hom_element_check: bidegree given for a non-homogeneous generator");
      const MultiDegree target = *h->degree + *assignment.bidegree;
      for (std::size_t p = 0; p < n; ++p) {
        if (sgn(assignment.images[i][p]) != 0 && qb.bidegrees[p] != target) {
          throw std::invalid_argument("hom_element_check: image of generator " + std::to_string(i) +
                                      " is not of the declared bidegree");
        }
      }
    }
  }
  const std::size_t k = ideal.generators.size();
  for (const auto& c : rel.relations) {
    RationalVector sum(n);
    for (std::size_t i = 0; i < k; ++i) {
      const Polynomial ci = qb.element(RationalVector(c.begin() + static_cast<std::ptrdiff_t>(i * n),
                                                      c.begin() + static_cast<std::ptrdiff_t>((i + 1) * n)));
      if (ci.is_zero()) continue;
      const RationalVector prod = qb.coordinates(ci * qb.element(assignment.images[i]));
      for (std::size_t p = 0; p < n; ++p) sum[p] += prod[p];
    }
    for (const auto& q : sum) {
      if (sgn(q) != 0) return false;
    }
  }
  return true;
}

std::size_t tangent_dimension(const Ideal& ideal) {
  bool graded = heft_check(ideal.ring->grading()).has_value();
  for (const auto& g : ideal.generators) graded = graded && is_homogeneous(g).has_value();
  if (graded) return hom_dim_graded(ideal).summary.total;
  return hom_dim_ungraded(ideal);
}

}  // namespace hilb
