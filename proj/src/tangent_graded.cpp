#include <hilb/errors.hpp>
#include <hilb/tangent.hpp>

#include <set>
#include <stdexcept>

namespace hilb {

namespace {

class WindowSolver {
 public:
  WindowSolver(const Ideal& ideal, GradedPieces& pieces, const QuotientBasis& qb)
      : ideal_(ideal), ring_(ideal.ring), pieces_(pieces), qb_(qb) {
    for (std::size_t i = 0; i < qb_.colength(); ++i) support_[qb_.bidegrees[i]].push_back(i);
    for (std::size_t s = 0; s < ring_->nvars(); ++s) var_degree_.push_back(ring_->grading().degrees[s]);
  }

  const std::map<MultiDegree, std::vector<std::size_t>>& support() const { return support_; }

  struct Solution {
    std::size_t dimension = 0;
    std::vector<HomAssignment> basis;
  };

  Solution solve(const MultiDegree& d, bool want_basis) {
    // Unknown blocks: phi_e is a (dim (S/I)_{e+d}) x (dim I_e) matrix.
    struct Block {
      std::size_t offset;
      std::size_t rows;  // target dimension
      std::size_t cols;  // dim I_e
    };
    std::map<MultiDegree, Block> blocks;
    std::size_t unknowns = 0;
    for (const auto& [target, idx] : support_) {
      const MultiDegree e = target - d;
      const auto& piece = pieces_.ideal_piece(e);
      if (piece.basis.empty()) continue;
      blocks.emplace(e, Block{unknowns, idx.size(), piece.basis.size()});
      unknowns += idx.size() * piece.basis.size();
    }
    Solution sol;
    if (unknowns == 0) return sol;

    std::set<std::pair<MultiDegree, std::size_t>> checks;
    for (const auto& [e, block] : blocks) {
      for (std::size_t s = 0; s < var_degree_.size(); ++s) {
        checks.emplace(e, s);
        checks.emplace(e - var_degree_[s], s);
      }
    }

    RowSpace constraints(unknowns);
    for (const auto& [e, s] : checks) {
      const MultiDegree up = e + var_degree_[s];
      const auto out_it = support_.find(up + d);
      if (out_it == support_.end()) continue;
      const auto& out_idx = out_it->second;
      const auto& source = pieces_.ideal_piece(e);
      if (source.basis.empty()) continue;
      const auto low = blocks.find(e);
      const auto high = blocks.find(up);
      if (low == blocks.end() && high == blocks.end()) continue;

      const auto source_polys = pieces_.ideal_piece_polynomials(e);
      const Polynomial var = Polynomial::variable(ring_, s);
      for (std::size_t j = 0; j < source_polys.size(); ++j) {
        std::vector<RationalVector> rows(out_idx.size(), RationalVector(unknowns));
        if (high != blocks.end()) {
          // phi_{e+deg s}(s * m_j)
          const RationalVector c = pieces_.ideal_coordinates(var * source_polys[j], up);
          const Block& b = high->second;
          for (std::size_t q = 0; q < out_idx.size(); ++q) {
            for (std::size_t p = 0; p < b.cols; ++p) {
              if (sgn(c[p]) != 0) rows[q][b.offset + q * b.cols + p] += c[p];
            }
          }
        }
        if (low != blocks.end()) {
          // - s * phi_e(m_j)
          const Block& b = low->second;
          const auto& mid_idx = support_.at(e + d);
          for (std::size_t p = 0; p < mid_idx.size(); ++p) {
            const RationalVector& img = times_variable(s, mid_idx[p]);
            for (std::size_t q = 0; q < out_idx.size(); ++q) {
              const Rational& coeff = img[out_idx[q]];
              if (sgn(coeff) != 0) rows[q][b.offset + p * b.cols + j] -= coeff;
            }
          }
        }
        for (auto& r : rows) constraints.insert(std::move(r));
      }
    }
    sol.dimension = unknowns - constraints.rank();

    if (want_basis) {
      for (const auto& v : constraints.kernel()) {
        HomAssignment a;
        a.bidegree = d;
        for (const auto& g : ideal_.generators) {
          RationalVector image(qb_.colength());
          const MultiDegree eg = *is_homogeneous(g)->degree;
          if (auto it = blocks.find(eg); it != blocks.end()) {
            const RationalVector c = pieces_.ideal_coordinates(g, eg);
            const Block& b = it->second;
            const auto& tgt = support_.at(eg + d);
            for (std::size_t q = 0; q < b.rows; ++q) {
              Rational sum = 0;
              for (std::size_t p = 0; p < b.cols; ++p) {
                if (sgn(c[p]) != 0) sum += v[b.offset + q * b.cols + p] * c[p];
              }
              image[tgt[q]] = sum;
            }
          }
          a.images.push_back(std::move(image));
        }
        sol.basis.push_back(std::move(a));
      }
    }
    return sol;
  }

 private:
  const RationalVector& times_variable(std::size_t s, std::size_t basis_index) {
    const auto key = std::make_pair(s, basis_index);
    auto it = mult_cache_.find(key);
    if (it == mult_cache_.end()) {
      const Polynomial prod = Polynomial::variable(ring_, s) *
                              Polynomial::monomial(ring_, qb_.standard_monomials[basis_index]);
      it = mult_cache_.emplace(key, qb_.coordinates(prod)).first;
    }
    return it->second;
  }

  const Ideal& ideal_;
  RingPtr ring_;
  GradedPieces& pieces_;
  const QuotientBasis& qb_;
  std::map<MultiDegree, std::vector<std::size_t>> support_;
  std::vector<MultiDegree> var_degree_;
  std::map<std::pair<std::size_t, std::size_t>, RationalVector> mult_cache_;
};

}  // namespace

GradedHomResult hom_dim_graded(const Ideal& ideal, const GradedHomOptions& options) {
  GradedPieces pieces(ideal);
  GradedHomResult result;
  result.quotient = standard_monomials(pieces.gb());
  const std::size_t rows = ideal.ring->grading().rows;
  result.summary.torus_row = options.torus_row.value_or(rows - 1);
  if (result.summary.torus_row >= rows) throw std::invalid_argument("torus_row exceeds the grading rows");

  result.minimal_generators = options.use_min_gens ? min_gens(ideal) : ideal.generators;
  WindowSolver solver(ideal, pieces, result.quotient);

  std::set<MultiDegree> candidates;
  for (const auto& g : result.minimal_generators) {
    const MultiDegree eg = *is_homogeneous(g)->degree;
    for (const auto& [target, idx] : solver.support()) candidates.insert(target - eg);
  }
  for (const auto& d : candidates) {
    auto sol = solver.solve(d, options.want_basis);
    if (sol.dimension == 0) continue;
    result.summary.per_bidegree.emplace(d, sol.dimension);
    result.summary.total += sol.dimension;
    if (options.want_basis) result.basis.emplace(d, std::move(sol.basis));
  }
  return result;
}

std::map<long, std::size_t> weight_marginal(const GradedHomSummary& summary, std::size_t row) {
  std::map<long, std::size_t> out;
  for (const auto& [d, dim] : summary.per_bidegree) {
    if (row >= d.size()) throw std::invalid_argument("weight_marginal: row exceeds the grading rows");
    out[d[row]] += dim;
  }
  return out;
}

}  // namespace hilb
