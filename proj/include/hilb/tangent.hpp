#pragma once

#include <hilb/groebner.hpp>
#include <hilb/quotient.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hilb {

/// Dimensions of the graded pieces of Hom_S(I, S/I).
struct GradedHomSummary {
  std::map<MultiDegree, std::size_t> per_bidegree;  // only nonzero pieces
  std::size_t total = 0;
  std::size_t torus_row = 0;
};

/// An element of Hom_S(I, S/I) given by the images of a generating set,
/// each image in coordinates of the standard-monomial basis of S/I.
struct HomAssignment {
  std::vector<RationalVector> images;
  std::optional<MultiDegree> bidegree;
};

struct GradedHomOptions {
  /// Row of the grading whose value is the torus weight of a hom. Defaults
  /// to the last row.
  std::optional<std::size_t> torus_row = std::nullopt;
  /// Derive candidate degrees from minimal generators (otherwise from the
  /// given generators; the answer is the same, the search is wider).
  bool use_min_gens = true;
  /// Also return an explicit basis of every nonzero graded piece.
  bool want_basis = false;
};

struct GradedHomResult {
  GradedHomSummary summary;
  QuotientBasis quotient;
  std::vector<Polynomial> minimal_generators;
  /// Basis assignments per degree, images indexed like ideal.generators.
  std::map<MultiDegree, std::vector<HomAssignment>> basis;
};

/// Hom_S(I, S/I) degree by degree: unknowns are the maps I_e -> (S/I)_{e+d}
/// on the finitely many degrees e where the target is nonzero, constrained
/// by commutation with every variable. Requires homogeneous generators, a
/// heft vector and finite colength.
GradedHomResult hom_dim_graded(const Ideal& ideal, const GradedHomOptions& options = {});

/// Sums the per-degree dimensions by the value in one grading row.
std::map<long, std::size_t> weight_marginal(const GradedHomSummary& summary, std::size_t row);

/// True iff the assignment extends to an S-module map I -> S/I. When the
/// assignment carries a bidegree d, every image must be homogeneous of
/// degree deg(g_i) + d (std::invalid_argument otherwise).
bool hom_element_check(const Ideal& ideal, const HomAssignment& assignment);

/// Grading-free route: Hom_S(I, S/I) = Hom_S(I/I^2, S/I), with the
/// relations among generators modulo I^2 read off from a Groebner basis of
/// I^2. Works for any zero-dimensional ideal.
std::size_t hom_dim_ungraded(const Ideal& ideal);

/// Taylor-complex oracle for monomial ideals: generator images subject to
/// (lcm/m_i) phi(m_i) = (lcm/m_j) phi(m_j). Uses only divisibility, no
/// Groebner machinery.
std::size_t hom_dim_taylor(const Ideal& ideal);

/// Graded solver when the ideal is homogeneous with a heft vector,
/// ungraded solver otherwise.
std::size_t tangent_dimension(const Ideal& ideal);

/// Staircase (order ideal) of a monomial ideal in three variables.
using Staircase = std::vector<Monomial>;

/// All monomial ideals of colength n in Q[x,y,z] (plane partitions of n),
/// sorted by their sorted staircases.
std::vector<Staircase> enumerate_staircases(std::size_t n);
/// Minimal monomial generators of the ideal whose staircase is given.
std::vector<Monomial> staircase_generators(const Staircase& s);
std::vector<Ideal> enumerate_monomial_ideals(std::size_t n, const RingPtr& ring);
std::vector<Ideal> enumerate_monomial_ideals(std::size_t n);

struct ParityRow {
  std::size_t n = 0;
  std::vector<std::string> generators;
  std::size_t graded_dim = 0;
  std::size_t taylor_dim = 0;
  bool agree = false;
  bool parity_ok = false;
};

struct ParityReport {
  std::vector<ParityRow> rows;
  std::map<std::size_t, std::size_t> ideals_per_n;
  bool all_ok = true;
};

ParityReport parity_scan(std::size_t n_max);

}  // namespace hilb
