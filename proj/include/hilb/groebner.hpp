#pragma once

#include <hilb/polynomial.hpp>

#include <string_view>
#include <vector>

namespace hilb {

/// Ideal given by generators; zero generators are dropped on construction.
struct Ideal {
  RingPtr ring;
  std::vector<Polynomial> generators;

  Ideal() = default;
  Ideal(RingPtr r, std::vector<Polynomial> gens);

  /// Parses each string with parse_polynomial.
  static Ideal parse(const RingPtr& r, const std::vector<std::string>& gens);

  bool is_zero() const noexcept { return generators.empty(); }
  bool all_monomial() const;
  /// Same generators re-expressed in another ring (matched by name).
  Ideal in_ring(const RingPtr& target) const;
};

/// Reduced Groebner basis: monic, inter-reduced, sorted by increasing
/// leading monomial.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(RingPtr ring, std::vector<Polynomial> reduced_elements);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool is_unit() const { return elements_.size() == 1 && elements_[0].is_constant(); }
  std::vector<Monomial> leading_monomials() const;

  bool operator==(const GroebnerBasis& o) const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> elements_;
};

struct BuchbergerOptions {
  /// Coprime-leading-monomial and chain criteria. Results must not depend on
  /// this; tests run both ways.
  bool use_criteria = true;
};

/// Remainder of full multivariate division by the basis elements.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

GroebnerBasis buchberger(const Ideal& ideal, BuchbergerOptions options = {});

bool ideal_member(const Polynomial& f, const Ideal& ideal);
bool ideal_member(const Polynomial& f, const GroebnerBasis& gb);

/// Compares reduced Groebner bases; both ideals must share a ring.
bool ideal_equal(const Ideal& a, const Ideal& b);

/// Generators are all pairwise products; exact duplicates are removed.
Ideal ideal_product(const Ideal& a, const Ideal& b);

Ideal ideal_sum(const Ideal& a, const Ideal& b);

/// Minimal homogeneous generators, computed degree by degree with graded
/// linear algebra. Requires homogeneous generators and a heft vector.
std::vector<Polynomial> min_gens(const Ideal& ideal);

/// Extension of a ring by an inverse u of one variable: u is inserted right
/// after that variable, and `relation` = var*u - 1 must be added to any ideal
/// before Groebner computations in the new ring.
struct Localization {
  RingPtr ring;
  std::size_t variable = 0;
  std::size_t inverse = 0;
  Polynomial relation;

  Polynomial embed(const Polynomial& f) const { return f.in_ring(ring); }
  /// The ideal (gens) + (var*u - 1) in the extended ring.
  Ideal extend(const std::vector<Polynomial>& gens) const;
};

Localization localize_invert(const RingPtr& ring, std::string_view variable);

}  // namespace hilb
