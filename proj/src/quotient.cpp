#include <hilb/errors.hpp>
#include <hilb/quotient.hpp>

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace hilb {

RationalVector QuotientBasis::coordinates(const Polynomial& f) const {
  RationalVector v(colength());
  const Polynomial r = normal_form(f, gb);
  for (const auto& t : r.terms()) v[index.at(t.monomial)] = t.coefficient;
  return v;
}

Polynomial QuotientBasis::element(const RationalVector& coords) const {
  if (coords.size() != colength()) throw std::invalid_argument("QuotientBasis::element: dimension mismatch");
  std::vector<Term> terms;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (sgn(coords[i]) != 0) terms.push_back(Term{standard_monomials[i], coords[i]});
  }
  return Polynomial(gb.ring(), std::move(terms));
}

RationalMatrix QuotientBasis::multiplication_matrix(const Polynomial& f) const {
  const std::size_t n = colength();
  RationalMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto col = coordinates(f * Polynomial::monomial(gb.ring(), standard_monomials[j]));
    for (std::size_t i = 0; i < n; ++i) m(i, j) = col[i];
  }
  return m;
}

QuotientBasis standard_monomials(const GroebnerBasis& gb, std::size_t bound) {
  const RingPtr& ring = gb.ring();
  const std::size_t n = ring->nvars();
  QuotientBasis qb;
  qb.gb = gb;
  if (gb.is_unit()) return qb;

  const auto leads = gb.leading_monomials();
  for (std::size_t v = 0; v < n; ++v) {
    const bool bounded = std::any_of(leads.begin(), leads.end(), [&](const Monomial& m) {
      for (std::size_t w = 0; w < n; ++w) {
        if ((w == v) != (m[w] > 0)) return false;
      }
      return true;
    });
    if (!bounded) {
      throw InfiniteQuotientError("infinite quotient: no power of " + ring->variables()[v] +
                                  " is a leading monomial");
    }
  }

  auto standard = [&](const Monomial& m) {
    return std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); });
  };
  std::set<Monomial> seen;
  std::deque<Monomial> queue;
  const Monomial one(n);
  seen.insert(one);
  queue.push_back(one);
  while (!queue.empty()) {
    Monomial m = std::move(queue.front());
    queue.pop_front();
    for (std::size_t v = 0; v < n; ++v) {
      Monomial next = m * Monomial::variable(n, v);
      if (seen.count(next) || !standard(next)) continue;
      seen.insert(next);
      if (seen.size() > bound) throw InfiniteQuotientError("staircase exceeds the configured bound");
      queue.push_back(std::move(next));
    }
  }

  qb.standard_monomials.assign(seen.begin(), seen.end());
  const auto& ord = ring->order();
  std::sort(qb.standard_monomials.begin(), qb.standard_monomials.end(),
            [&](const Monomial& a, const Monomial& b) { return ord.compare(a, b) < 0; });
  for (std::size_t i = 0; i < qb.standard_monomials.size(); ++i) {
    qb.index.emplace(qb.standard_monomials[i], i);
    qb.bidegrees.push_back(multidegree(qb.standard_monomials[i], ring->grading()));
  }
  return qb;
}

std::vector<MultiDegree> bidegree_support(const QuotientBasis& qb, const MultiGrading& g) {
  std::vector<MultiDegree> out;
  out.reserve(qb.colength());
  for (const auto& m : qb.standard_monomials) out.push_back(multidegree(m, g));
  return out;
}

namespace {

MultiDegree require_heft(const MultiGrading& g) {
  auto h = heft_check(g);
  if (!h) throw NoHeftError("the grading admits no heft vector");
  return *h;
}

void require_homogeneous(const Ideal& ideal) {
  for (const auto& g : ideal.generators) {
    if (!is_homogeneous(g)) throw NotHomogeneousError("generator " + g.to_string() + " is not homogeneous");
  }
}

}  // namespace

GradedPieces::GradedPieces(const Ideal& ideal) : ring_(ideal.ring) {
  require_homogeneous(ideal);
  heft_ = require_heft(ring_->grading());
  gb_ = buchberger(ideal);
}

GradedPieces::GradedPieces(const Ideal& ideal, GroebnerBasis gb) : ring_(ideal.ring), gb_(std::move(gb)) {
  require_homogeneous(ideal);
  heft_ = require_heft(ring_->grading());
}

const GradedPieces::IdealPiece& GradedPieces::ideal_piece(const MultiDegree& e) {
  if (auto it = pieces_.find(e); it != pieces_.end()) return it->second;

  IdealPiece piece;
  piece.monomials = monomials_of_degree(ring_->grading(), heft_, e);
  const auto leads = gb_.leading_monomials();
  std::vector<Monomial> standard_here;
  for (const auto& m : piece.monomials) {
    if (std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); })) {
      standard_here.push_back(m);
    }
  }
  std::map<Monomial, std::size_t> row_of;
  for (std::size_t i = 0; i < standard_here.size(); ++i) row_of.emplace(standard_here[i], i);

  RationalMatrix nf(standard_here.size(), piece.monomials.size());
  for (std::size_t j = 0; j < piece.monomials.size(); ++j) {
    const Polynomial r = normal_form(Polynomial::monomial(ring_, piece.monomials[j]), gb_);
    for (const auto& t : r.terms()) {
      auto it = row_of.find(t.monomial);
      if (it == row_of.end()) throw std::logic_error("normal form left the homogeneous piece");
      nf(it->second, j) = t.coefficient;
    }
  }
  const Echelon ech = rref(nf);
  piece.basis = kernel_basis(nf);
  std::vector<bool> pivot(piece.monomials.size(), false);
  for (auto p : ech.pivots) pivot[p] = true;
  for (std::size_t j = 0; j < pivot.size(); ++j) {
    if (!pivot[j]) piece.free_columns.push_back(j);
  }
  if (piece.basis.size() + standard_here.size() != piece.monomials.size()) {
    throw std::logic_error("graded piece dimension mismatch: dim I_e + dim (S/I)_e != dim S_e");
  }
  return pieces_.emplace(e, std::move(piece)).first->second;
}

std::vector<Polynomial> GradedPieces::ideal_piece_polynomials(const MultiDegree& e) {
  const IdealPiece& piece = ideal_piece(e);
  std::vector<Polynomial> out;
  for (const auto& v : piece.basis) {
    std::vector<Term> terms;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (sgn(v[j]) != 0) terms.push_back(Term{piece.monomials[j], v[j]});
    }
    out.emplace_back(ring_, std::move(terms));
  }
  return out;
}

RationalVector GradedPieces::ideal_coordinates(const Polynomial& f, const MultiDegree& e) {
  const IdealPiece& piece = ideal_piece(e);
  RationalVector full(piece.monomials.size());
  for (const auto& t : f.terms()) {
    auto it = std::lower_bound(piece.monomials.begin(), piece.monomials.end(), t.monomial);
    if (it == piece.monomials.end() || *it != t.monomial) {
      throw std::invalid_argument("ideal_coordinates: polynomial is not homogeneous of the requested degree");
    }
    full[static_cast<std::size_t>(it - piece.monomials.begin())] = t.coefficient;
  }
  RationalVector coords(piece.free_columns.size());
  for (std::size_t k = 0; k < coords.size(); ++k) coords[k] = full[piece.free_columns[k]];
  // Normal-form kernel vectors are determined by their free coordinates.
  RationalVector check(full.size());
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (sgn(coords[k]) == 0) continue;
    for (std::size_t j = 0; j < check.size(); ++j) check[j] += coords[k] * piece.basis[k][j];
  }
  if (check != full) throw std::invalid_argument("ideal_coordinates: polynomial does not lie in the ideal");
  return coords;
}

std::vector<Polynomial> graded_piece_of_ideal(const Ideal& ideal, const MultiDegree& e) {
  GradedPieces pieces(ideal);
  return pieces.ideal_piece_polynomials(e);
}

}  // namespace hilb
