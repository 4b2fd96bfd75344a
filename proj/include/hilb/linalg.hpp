#pragma once

#include <hilb/rational.hpp>

#include <cstddef>
#include <span>
#include <vector>

namespace hilb {

using RationalVector = std::vector<Rational>;

/// Dense row-major matrix over the rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_rows(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<Rational> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
  std::span<const Rational> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }

  const std::vector<Rational>& entries() const noexcept { return entries_; }

  bool is_zero() const;
  RationalMatrix transpose() const;
  Rational trace() const;
  RationalVector apply(std::span<const Rational> v) const;

  RationalMatrix operator+(const RationalMatrix& o) const;
  RationalMatrix operator-(const RationalMatrix& o) const;
  RationalMatrix operator*(const RationalMatrix& o) const;
  RationalMatrix operator*(const Rational& s) const;

  bool operator==(const RationalMatrix& o) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b);

/// Reduced row echelon form. Pivots are chosen column by column, left to
/// right, taking the first row (in row order) with a nonzero entry.
struct Echelon {
  RationalMatrix reduced;            // rank nonzero rows, then zero rows
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

Echelon rref(RationalMatrix m);

std::size_t rank(const RationalMatrix& m);

/// Basis of the right null space. One vector per non-pivot column f, with
/// entry 1 at f, 0 at every other non-pivot column, and minus the reduced
/// entries at pivot columns. The basis is ordered by f.
std::vector<RationalVector> kernel_basis(const RationalMatrix& m);

/// Row space maintained in reduced echelon form under insertion. Used for
/// constraint systems whose rows arrive one at a time and far outnumber the
/// columns.
class RowSpace {
 public:
  explicit RowSpace(std::size_t cols) : cols_(cols) {}

  /// Reduces v against the current rows; returns true (and stores the
  /// reduced row) iff v was independent.
  bool insert(RationalVector v);

  /// True iff v lies in the span.
  bool contains(RationalVector v) const;

  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }

  /// Null space of the stored rows, in the same normal form as kernel_basis.
  std::vector<RationalVector> kernel() const;

 private:
  void reduce(RationalVector& v) const;

  std::size_t cols_;
  std::vector<RationalVector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace hilb
