#pragma once

#include <hilb/groebner.hpp>
#include <hilb/linalg.hpp>

#include <cstdint>
#include <map>

namespace hilb {

/// Framed representation of the three-loop quiver: X, Y, Z acting on Q^n,
/// framing vector v.
struct QuiverRep {
  std::size_t n = 0;
  RationalMatrix x, y, z;
  RationalVector v;

  /// Throws std::invalid_argument on inconsistent shapes.
  void validate() const;
};

/// Scaling (X, Y, Z) -> (t^a X, t^b Y, t^c Z).
struct TorusWeights {
  long a = 0, b = 0, c = 0;
  bool operator==(const TorusWeights&) const = default;
};

inline constexpr TorusWeights kTorusT0{2, 1, -3};
inline constexpr TorusWeights kTorusG{0, 0, 1};
inline constexpr TorusWeights kTorusH{1, 1, 0};

/// Multiplication by x, y, z on the standard-monomial basis of S/I, framed
/// by the class of 1. Requires a ring whose first three variables play the
/// role of x, y, z; throws InfiniteQuotientError.
QuiverRep rep_from_ideal(const Ideal& ideal);

/// dim of the span of all words in X, Y, Z applied to v equals n.
bool is_cyclic(const QuiverRep& r);

bool pairwise_commute(const QuiverRep& r);

/// tr(X (YZ - ZY)).
Rational superpotential(const QuiverRep& r);

/// Laurent polynomial in one formal variable t: exponent -> coefficient.
using LaurentPolynomial = std::map<long, Rational>;

struct WeightCheck {
  bool holds = false;
  long weight = 0;
  LaurentPolynomial scaled;  // f(t^a X, t^b Y, t^c Z, v), expanded
};

/// Expands f(t^a X, t^b Y, t^c Z, v) exactly over Q[t, t^-1] and compares
/// it with t^(a+b+c) f(X, Y, Z, v).
WeightCheck check_torus_weights(const QuiverRep& r, const TorusWeights& w);

/// Entry (i,j) of dx is the partial derivative of f in X_ij, and likewise
/// for dy, dz. f does not involve v, so dv is identically zero.
struct SuperpotentialGradient {
  RationalMatrix dx, dy, dz;
  RationalVector dv;

  bool is_zero() const;
};

SuperpotentialGradient gradient_superpotential(const QuiverRep& r);

/// Entries uniform in {-9, ..., 9}, deterministic in the seed.
QuiverRep random_rep(std::size_t n, std::uint64_t seed);

}  // namespace hilb
