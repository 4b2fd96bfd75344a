#include <hilb/errors.hpp>
#include <hilb/quiver.hpp>
#include <hilb/quotient.hpp>

#include <deque>
#include <random>
#include <stdexcept>

namespace hilb {

void QuiverRep::validate() const {
  for (const auto* m : {&x, &y, &z}) {
    if (m->rows() != n || m->cols() != n) throw std::invalid_argument("QuiverRep: matrix shape differs from n");
  }
  if (v.size() != n) throw std::invalid_argument("QuiverRep: framing vector length differs from n");
}

QuiverRep rep_from_ideal(const Ideal& ideal) {
  if (ideal.ring->nvars() < 3) throw std::invalid_argument("rep_from_ideal: ring needs three variables");
  const QuotientBasis qb = standard_monomials(buchberger(ideal));
  QuiverRep r;
  r.n = qb.colength();
  r.x = qb.multiplication_matrix(Polynomial::variable(ideal.ring, 0));
  r.y = qb.multiplication_matrix(Polynomial::variable(ideal.ring, 1));
  r.z = qb.multiplication_matrix(Polynomial::variable(ideal.ring, 2));
  r.v = r.n == 0 ? RationalVector{} : qb.coordinates(Polynomial::constant(ideal.ring, 1));
  return r;
}

bool is_cyclic(const QuiverRep& r) {
  r.validate();
  if (r.n == 0) return true;
  RowSpace span(r.n);
  std::deque<RationalVector> queue;
  if (span.insert(r.v)) queue.push_back(r.v);
  while (!queue.empty() && span.rank() < r.n) {
    const RationalVector w = std::move(queue.front());
    queue.pop_front();
    for (const auto* m : {&r.x, &r.y, &r.z}) {
      RationalVector next = m->apply(w);
      if (span.insert(next)) queue.push_back(std::move(next));
    }
  }
  return span.rank() == r.n;
}

bool pairwise_commute(const QuiverRep& r) {
  return commutator(r.x, r.y).is_zero() && commutator(r.y, r.z).is_zero() && commutator(r.z, r.x).is_zero();
}

Rational superpotential(const QuiverRep& r) {
  r.validate();
  return (r.x * commutator(r.y, r.z)).trace();
}

namespace {

using LaurentMatrix = std::vector<LaurentPolynomial>;  // row-major n x n

void add_into(LaurentPolynomial& acc, const LaurentPolynomial& p, int sign = 1) {
  for (const auto& [e, c] : p) {
    Rational& slot = acc[e];
    if (sign > 0) slot += c;
    else slot -= c;
    if (sgn(slot) == 0) acc.erase(e);
  }
}

LaurentPolynomial multiply(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      Rational& slot = out[ea + eb];
      slot += ca * cb;
      if (sgn(slot) == 0) out.erase(ea + eb);
    }
  }
  return out;
}

LaurentMatrix scaled(const RationalMatrix& m, long exponent) {
  LaurentMatrix out(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (sgn(m(i, j)) != 0) out[i * m.cols() + j][exponent] = m(i, j);
    }
  }
  return out;
}

LaurentMatrix product(const LaurentMatrix& a, const LaurentMatrix& b, std::size_t n) {
  LaurentMatrix out(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i * n + k].empty()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!b[k * n + j].empty()) add_into(out[i * n + j], multiply(a[i * n + k], b[k * n + j]));
      }
    }
  }
  return out;
}

}  // namespace

WeightCheck check_torus_weights(const QuiverRep& r, const TorusWeights& w) {
  r.validate();
  const std::size_t n = r.n;
  const LaurentMatrix x = scaled(r.x, w.a);
  const LaurentMatrix y = scaled(r.y, w.b);
  const LaurentMatrix z = scaled(r.z, w.c);
  const LaurentMatrix yz = product(y, z, n);
  const LaurentMatrix zy = product(z, y, n);
  LaurentMatrix bracket(n * n);
  for (std::size_t k = 0; k < n * n; ++k) {
    add_into(bracket[k], yz[k]);
    add_into(bracket[k], zy[k], -1);
  }
  const LaurentMatrix xb = product(x, bracket, n);
  WeightCheck out;
  out.weight = w.a + w.b + w.c;
  for (std::size_t i = 0; i < n; ++i) add_into(out.scaled, xb[i * n + i]);

  LaurentPolynomial expected;
  const Rational f = superpotential(r);
  if (sgn(f) != 0) expected[out.weight] = f;
  out.holds = out.scaled == expected;
  return out;
}

bool SuperpotentialGradient::is_zero() const {
  for (const auto& q : dv) {
    if (sgn(q) != 0) return false;
  }
  return dx.is_zero() && dy.is_zero() && dz.is_zero();
}

SuperpotentialGradient gradient_superpotential(const QuiverRep& r) {
  r.validate();
  // f = tr(XYZ) - tr(XZY); d tr(ABC)/dA_ij = (BC)_ji.
  SuperpotentialGradient g;
  g.dx = commutator(r.y, r.z).transpose();
  g.dy = commutator(r.z, r.x).transpose();
  g.dz = commutator(r.x, r.y).transpose();
  g.dv = RationalVector(r.n);
  return g;
}

QuiverRep random_rep(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-9, 9);
  auto fill = [&](RationalMatrix& m) {
    m = RationalMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(rng);
  };
  QuiverRep r;
  r.n = n;
  fill(r.x);
  fill(r.y);
  fill(r.z);
  r.v.resize(n);
  for (auto& q : r.v) q = dist(rng);
  return r;
}

}  // namespace hilb
