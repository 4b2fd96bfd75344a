#include <hilb/monomial.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hilb {

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
  if (std::any_of(exps_.begin(), exps_.end(), [](int e) { return e < 0; })) {
    throw std::invalid_argument("Monomial: negative exponent");
  }
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, int power) {
  std::vector<int> e(nvars, 0);
  e.at(index) = power;
  return Monomial(std::move(e));
}

long Monomial::total_degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0L); }

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

Monomial Monomial::operator*(const Monomial& o) const {
  if (o.size() != size()) throw std::invalid_argument("Monomial: arity mismatch");
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (__builtin_add_overflow(r.exps_[i], o.exps_[i], &r.exps_[i])) {
      throw std::overflow_error("Monomial: exponent overflow");
    }
  }
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > o.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& o) const {
  Monomial r(o);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    r.exps_[i] -= exps_[i];
    if (r.exps_[i] < 0) throw std::invalid_argument("Monomial: inexact division");
  }
  return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = std::max(r.exps_[i], o.exps_[i]);
  return r;
}

bool Monomial::coprime(const Monomial& o) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > 0 && o.exps_[i] > 0) return false;
  }
  return true;
}

MonomialOrder MonomialOrder::weighted(std::vector<long> weights, Kind tiebreak) {
  if (weights.empty() || std::any_of(weights.begin(), weights.end(), [](long w) { return w <= 0; })) {
    throw std::invalid_argument("weighted order: weights must be positive");
  }
  if (tiebreak == Kind::Weighted) throw std::invalid_argument("weighted order: tiebreak must be lex or grevlex");
  return MonomialOrder(Kind::Weighted, std::move(weights), tiebreak);
}

namespace {

std::strong_ordering lex_compare(std::span<const int> a, std::span<const int> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

// Equal total degree assumed by callers; the last differing variable decides,
// the smaller exponent being the larger monomial.
std::strong_ordering revlex_compare(std::span<const int> a, std::span<const int> b) {
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering grevlex_compare(const Monomial& a, const Monomial& b) {
  const long da = a.total_degree();
  const long db = b.total_degree();
  if (da != db) return da <=> db;
  return revlex_compare(a.exponents(), b.exponents());
}

}  // namespace

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.size() != b.size()) throw std::invalid_argument("MonomialOrder: arity mismatch");
  switch (kind_) {
    case Kind::Lex:
      return lex_compare(a.exponents(), b.exponents());
    case Kind::Grevlex:
      return grevlex_compare(a, b);
    case Kind::Weighted: {
      if (weights_.size() != a.size()) throw std::invalid_argument("weighted order: weight vector arity mismatch");
      long wa = 0, wb = 0;
      for (std::size_t i = 0; i < a.size(); ++i) {
        wa += weights_[i] * a[i];
        wb += weights_[i] * b[i];
      }
      if (wa != wb) return wa <=> wb;
      return tiebreak_ == Kind::Lex ? lex_compare(a.exponents(), b.exponents()) : grevlex_compare(a, b);
    }
  }
  return std::strong_ordering::equal;
}

}  // namespace hilb
