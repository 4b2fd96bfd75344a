#pragma once

#include <hilb/tangent.hpp>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hilb {

/// Machine-readable summary of a tangent-space computation.
///
/// For homogeneous input the Hom space is split by degree and
/// weight_marginal sums it by the value in grading row torus_row; the weight
/// of a hom of degree d is d[torus_row]. For non-homogeneous input
/// (graded == false) the marginal is empty and min_gen_count is the size of
/// the reduced Groebner basis.
struct VerificationReport {
  std::size_t colength = 0;
  std::size_t tangent_total = 0;
  std::map<long, std::size_t> weight_marginal;
  std::size_t torus_weight0_dim = 0;
  bool parity_violation = false;
  std::size_t min_gen_count = 0;
  std::size_t torus_row = 0;
  bool graded = false;
  std::map<MultiDegree, std::size_t> per_bidegree;
  std::vector<std::pair<std::string, long long>> timings_ms;
};

/// Degrees {{1,2},{2,1},{3,-3}}; the second row is the weight of the torus
/// (t^2, t, t^-3).
MultiGrading torus_bigrading();
/// Degrees {{1,0},{1,1},{0,3}}, all entries nonnegative.
MultiGrading nonnegative_bigrading();

RingPtr counterexample_ring(const MultiGrading& grading = torus_bigrading(),
                            MonomialOrder order = MonomialOrder::grevlex());

/// ((x^2) + (y,z)^2)^2 + (y^3 - x^3 z), as its ten natural generators.
Ideal counterexample_ideal(const RingPtr& ring);
Ideal counterexample_ideal();

/// Maximal ideal of a rational point.
Ideal point_ideal(const RingPtr& ring, const std::vector<Rational>& point);

/// Throws DegenerateIdealError for the zero or unit ideal.
VerificationReport verify_ideal(const Ideal& ideal, std::optional<std::size_t> torus_row = std::nullopt);

struct CounterexampleVerdict {
  VerificationReport report;
  std::vector<std::string> failures;  // empty when every expected value matched
};

/// Expected: colength 24, tangent dimension 99, one-dimensional weight-0
/// piece, parity violated.
CounterexampleVerdict verify_counterexample(MonomialOrder order = MonomialOrder::grevlex());

}  // namespace hilb
