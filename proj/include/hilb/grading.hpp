#pragma once

#include <hilb/monomial.hpp>

#include <cstddef>
#include <optional>
#include <vector>

namespace hilb {

using MultiDegree = std::vector<long>;

MultiDegree operator+(const MultiDegree& a, const MultiDegree& b);
MultiDegree operator-(const MultiDegree& a, const MultiDegree& b);

/// Integer degree vector (length rows) for every variable.
struct MultiGrading {
  std::size_t rows = 1;
  std::vector<MultiDegree> degrees;

  static MultiGrading standard(std::size_t nvars);
  /// Throws InputError when some degree vector has the wrong length.
  static MultiGrading from_degrees(std::vector<MultiDegree> degrees);

  std::size_t nvars() const noexcept { return degrees.size(); }
  MultiDegree zero() const { return MultiDegree(rows, 0); }

  bool operator==(const MultiGrading&) const = default;
};

MultiDegree multidegree(const Monomial& m, const MultiGrading& g);

/// Integer vector h with h . deg(v) > 0 for every variable v, if one exists.
/// Small vectors are tried first; otherwise Fourier-Motzkin elimination over
/// the rationals decides feasibility and supplies a witness.
std::optional<MultiDegree> heft_check(const MultiGrading& g);

long dot(const MultiDegree& a, const MultiDegree& b);

/// All monomials of multidegree e, sorted by exponent vector. Requires h to be
/// a heft vector for g; the search bounds the exponent of v by
/// (h . e) / (h . deg v).
std::vector<Monomial> monomials_of_degree(const MultiGrading& g, const MultiDegree& heft, const MultiDegree& e);

}  // namespace hilb
