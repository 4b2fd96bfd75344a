#include <hilb/linalg.hpp>

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace hilb {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw std::invalid_argument("RationalMatrix: entry count does not match shape");
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  RationalMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("RationalMatrix: ragged rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

bool RationalMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Rational RationalMatrix::trace() const {
  if (rows_ != cols_) throw std::invalid_argument("trace of a non-square matrix");
  Rational s = 0;
  for (std::size_t i = 0; i < rows_; ++i) s += (*this)(i, i);
  return s;
}

RationalVector RationalMatrix::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw std::invalid_argument("apply: dimension mismatch");
  RationalVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (sgn(v[j]) != 0 && sgn((*this)(i, j)) != 0) s += (*this)(i, j) * v[j];
    }
    out[i] = s;
  }
  return out;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
  RationalMatrix r(*this);
  for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] += o.entries_[k];
  return r;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
  RationalMatrix r(*this);
  for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] -= o.entries_[k];
  return r;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  RationalMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        if (sgn(o(k, j)) != 0) r(i, j) += a * o(k, j);
      }
    }
  }
  return r;
}

RationalMatrix RationalMatrix::operator*(const Rational& s) const {
  RationalMatrix r(*this);
  for (auto& e : r.entries_) e *= s;
  return r;
}

RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b) { return a * b - b * a; }

Echelon rref(RationalMatrix m) {
  Echelon out;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(m(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) swap(m(p, j), m(r, j));
    }
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      const Rational factor = m(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (sgn(m(r, j)) != 0) m(i, j) -= factor * m(r, j);
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const RationalMatrix& m) { return rref(m).pivots.size(); }

namespace {

std::vector<RationalVector> null_space_from_reduced(std::size_t cols,
                                                    const std::vector<std::size_t>& pivots,
                                                    auto&& entry) {
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(cols);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -entry(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

std::vector<RationalVector> kernel_basis(const RationalMatrix& m) {
  const Echelon e = rref(m);
  return null_space_from_reduced(m.cols(), e.pivots,
                                 [&](std::size_t i, std::size_t f) -> const Rational& { return e.reduced(i, f); });
}

void RowSpace::reduce(RationalVector& v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::size_t p = pivots_[i];
    if (sgn(v[p]) == 0) continue;
    const Rational factor = v[p];
    const auto& row = rows_[i];
    for (std::size_t j = p; j < cols_; ++j) {
      if (sgn(row[j]) != 0) v[j] -= factor * row[j];
    }
  }
}

bool RowSpace::insert(RationalVector v) {
  if (v.size() != cols_) throw std::invalid_argument("RowSpace: dimension mismatch");
  reduce(v);
  std::size_t p = 0;
  while (p < cols_ && sgn(v[p]) == 0) ++p;
  if (p == cols_) return false;
  const Rational inv = 1 / v[p];
  for (std::size_t j = p; j < cols_; ++j) {
    if (sgn(v[j]) != 0) v[j] *= inv;
  }
  for (auto& row : rows_) {
    if (sgn(row[p]) == 0) continue;
    const Rational factor = row[p];
    for (std::size_t j = p; j < cols_; ++j) {
      if (sgn(v[j]) != 0) row[j] -= factor * v[j];
    }
  }
  const auto at = std::lower_bound(pivots_.begin(), pivots_.end(), p);
  const auto idx = static_cast<std::size_t>(at - pivots_.begin());
  pivots_.insert(at, p);
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
  return true;
}

bool RowSpace::contains(RationalVector v) const {
  if (v.size() != cols_) throw std::invalid_argument("RowSpace: dimension mismatch");
  reduce(v);
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) == 0; });
}

std::vector<RationalVector> RowSpace::kernel() const {
  return null_space_from_reduced(cols_, pivots_,
                                 [&](std::size_t i, std::size_t f) -> const Rational& { return rows_[i][f]; });
}

}  // namespace hilb
