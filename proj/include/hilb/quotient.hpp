#pragma once

#include <hilb/groebner.hpp>
#include <hilb/linalg.hpp>

#include <cstddef>
#include <map>
#include <vector>

namespace hilb {

/// Standard-monomial basis of S/I for a zero-dimensional ideal.
struct QuotientBasis {
  GroebnerBasis gb;
  std::vector<Monomial> standard_monomials;  // increasing under the ring order
  std::map<Monomial, std::size_t> index;
  std::vector<MultiDegree> bidegrees;        // multidegree of each standard monomial

  std::size_t colength() const noexcept { return standard_monomials.size(); }

  /// Coordinates of the class of f in the standard-monomial basis.
  RationalVector coordinates(const Polynomial& f) const;
  Polynomial element(const RationalVector& coords) const;
  /// Matrix of multiplication by f on S/I (column j = f * basis_j).
  RationalMatrix multiplication_matrix(const Polynomial& f) const;
};

constexpr std::size_t kDefaultStaircaseBound = 1'000'000;

/// Enumerates the staircase breadth-first from 1. Throws
/// InfiniteQuotientError when some variable has no pure power among the
/// leading monomials, or when the bound is exceeded.
QuotientBasis standard_monomials(const GroebnerBasis& gb, std::size_t bound = kDefaultStaircaseBound);

/// Multidegree of every standard monomial under g (with multiplicity).
std::vector<MultiDegree> bidegree_support(const QuotientBasis& qb, const MultiGrading& g);

/// Homogeneous pieces I_e and (S/I)_e of a homogeneous ideal, cached by
/// degree. I_e is the kernel of the normal-form map on the monomials of S_e.
class GradedPieces {
 public:
  /// Throws NotHomogeneousError / NoHeftError.
  explicit GradedPieces(const Ideal& ideal);
  GradedPieces(const Ideal& ideal, GroebnerBasis gb);

  struct IdealPiece {
    std::vector<Monomial> monomials;          // basis of S_e
    std::vector<RationalVector> basis;        // kernel vectors over `monomials`
    std::vector<std::size_t> free_columns;    // coordinate positions of the kernel normal form
  };

  const RingPtr& ring() const noexcept { return ring_; }
  const GroebnerBasis& gb() const noexcept { return gb_; }
  const MultiDegree& heft() const noexcept { return heft_; }

  const IdealPiece& ideal_piece(const MultiDegree& e);
  std::vector<Polynomial> ideal_piece_polynomials(const MultiDegree& e);

  /// Coordinates of a homogeneous element of I_e in the piece's basis.
  RationalVector ideal_coordinates(const Polynomial& f, const MultiDegree& e);

 private:
  RingPtr ring_;
  GroebnerBasis gb_;
  MultiDegree heft_;
  std::map<MultiDegree, IdealPiece> pieces_;
};

/// Basis of I intersected with S_e.
std::vector<Polynomial> graded_piece_of_ideal(const Ideal& ideal, const MultiDegree& e);

}  // namespace hilb
