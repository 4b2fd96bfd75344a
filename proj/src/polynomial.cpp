#include <hilb/errors.hpp>
#include <hilb/polynomial.hpp>

#include <algorithm>
#include <map>
#include <regex>
#include <set>
#include <stdexcept>

namespace hilb {

RingPtr Ring::make(std::vector<std::string> variables, MultiGrading grading, MonomialOrder order) {
  static const std::regex name_re("[A-Za-z][A-Za-z0-9_]*");
  std::set<std::string> seen;
  for (const auto& v : variables) {
    if (!std::regex_match(v, name_re)) throw InputError("invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw InputError("duplicate variable name '" + v + "'");
  }
  if (grading.nvars() != variables.size()) {
    throw InputError("grading lists " + std::to_string(grading.nvars()) + " degree vectors for " +
                     std::to_string(variables.size()) + " variables");
  }
  for (const auto& d : grading.degrees) {
    if (d.size() != grading.rows) throw InputError("grading: inconsistent degree vector length");
  }
  if (order.kind() == MonomialOrder::Kind::Weighted && order.weights().size() != variables.size()) {
    throw InputError("weighted order: weight vector length differs from variable count");
  }
  return RingPtr(new Ring(std::move(variables), std::move(grading), std::move(order)));
}

RingPtr Ring::make(std::vector<std::string> variables) {
  const std::size_t n = variables.size();
  return make(std::move(variables), MultiGrading::standard(n));
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i] == name) return i;
  }
  return std::nullopt;
}

RingPtr Ring::with_order(MonomialOrder order) const { return make(variables_, grading_, std::move(order)); }

RingPtr Ring::with_grading(MultiGrading grading) const { return make(variables_, std::move(grading), order_); }

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && *a == *b); }

namespace {

void require_same(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b)) throw std::invalid_argument("polynomials live in different rings");
}

}  // namespace

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  const auto& ord = ring_->order();
  for (const auto& t : terms) {
    if (t.monomial.size() != ring_->nvars()) throw std::invalid_argument("term arity differs from ring");
  }
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ord.greater(a.monomial, b.monomial); });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().monomial == t.monomial) {
      terms_.back().coefficient += t.coefficient;
      if (sgn(terms_.back().coefficient) == 0) terms_.pop_back();
    } else if (sgn(t.coefficient) != 0) {
      terms_.push_back(std::move(t));
    }
  }
}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  const std::size_t n = ring->nvars();
  return Polynomial(std::move(ring), {Term{Monomial(n), c}});
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  const std::size_t n = ring->nvars();
  if (index >= n) throw std::out_of_range("variable index out of range");
  return Polynomial(std::move(ring), {Term{Monomial::variable(n, index), 1}});
}

Polynomial Polynomial::variable(RingPtr ring, std::string_view name) {
  auto idx = ring->index_of(name);
  if (!idx) throw InputError("unknown variable '" + std::string(name) + "'");
  return variable(std::move(ring), *idx);
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, const Rational& c) {
  return Polynomial(std::move(ring), {Term{std::move(m), c}});
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::logic_error("leading term of the zero polynomial");
  return terms_.front();
}

long Polynomial::total_degree() const {
  long d = -1;
  for (const auto& t : terms_) d = std::max(d, t.monomial.total_degree());
  return d;
}

namespace {

// Merge two sorted term lists, second one scaled by `scale`.
std::vector<Term> merge_terms(const MonomialOrder& ord, const std::vector<Term>& a, const std::vector<Term>& b,
                              const Rational& scale) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    if (i == a.size()) {
      out.push_back(Term{b[j].monomial, b[j].coefficient * scale});
      ++j;
      continue;
    }
    const auto c = ord.compare(a[i].monomial, b[j].monomial);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(Term{b[j].monomial, b[j].coefficient * scale});
      ++j;
    } else {
      Rational s = a[i].coefficient + b[j].coefficient * scale;
      if (sgn(s) != 0) out.push_back(Term{a[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_same(ring_, o.ring_);
  Polynomial r(ring_);
  r.terms_ = merge_terms(ring_->order(), terms_, o.terms_, Rational(1));
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  require_same(ring_, o.ring_);
  Polynomial r(ring_);
  r.terms_ = merge_terms(ring_->order(), terms_, o.terms_, Rational(-1));
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coefficient = -t.coefficient;
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same(ring_, o.ring_);
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) prod.push_back(Term{a.monomial * b.monomial, a.coefficient * b.coefficient});
  }
  return Polynomial(ring_, std::move(prod));
}

Polynomial Polynomial::operator*(const Rational& c) const {
  if (sgn(c) == 0) return Polynomial(ring_);
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coefficient *= c;
  return r;
}

Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

Polynomial Polynomial::times(const Monomial& m, const Rational& c) const {
  if (sgn(c) == 0) return Polynomial(ring_);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back(Term{t.monomial * m, t.coefficient * c});
  return r;
}

Term Polynomial::take_leading() {
  Term t = leading_term();
  terms_.erase(terms_.begin());
  return t;
}

void Polynomial::subtract_multiple(const Polynomial& g, const Monomial& m, const Rational& c) {
  require_same(ring_, g.ring_);
  std::vector<Term> shifted;
  shifted.reserve(g.terms_.size());
  for (const auto& t : g.terms_) shifted.push_back(Term{t.monomial * m, t.coefficient});
  terms_ = merge_terms(ring_->order(), terms_, shifted, -c);
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  const Rational inv = 1 / leading_coefficient();
  return *this * inv;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= ring_->nvars()) throw std::out_of_range("derivative: variable index out of range");
  std::vector<Term> out;
  for (const auto& t : terms_) {
    const int e = t.monomial[var];
    if (e == 0) continue;
    std::vector<int> exps(t.monomial.exponents().begin(), t.monomial.exponents().end());
    exps[var] -= 1;
    out.push_back(Term{Monomial(std::move(exps)), t.coefficient * e});
  }
  return Polynomial(ring_, std::move(out));
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != ring_->nvars()) throw std::invalid_argument("evaluate: point dimension mismatch");
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coefficient;
    for (std::size_t i = 0; i < point.size(); ++i) {
      for (int k = 0; k < t.monomial[i]; ++k) v *= point[i];
    }
    sum += v;
  }
  return sum;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_) {
    if (t.monomial == m) return t.coefficient;
  }
  return 0;
}

Polynomial Polynomial::in_ring(const RingPtr& target) const {
  if (same_ring(ring_, target)) {
    Polynomial r(*this);
    r.ring_ = target;
    return r;
  }
  std::vector<std::optional<std::size_t>> map(ring_->nvars());
  for (std::size_t i = 0; i < ring_->nvars(); ++i) map[i] = target->index_of(ring_->variables()[i]);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<int> exps(target->nvars(), 0);
    for (std::size_t i = 0; i < ring_->nvars(); ++i) {
      if (t.monomial[i] == 0) continue;
      if (!map[i]) throw InputError("variable '" + ring_->variables()[i] + "' does not exist in the target ring");
      exps[*map[i]] = t.monomial[i];
    }
    out.push_back(Term{Monomial(std::move(exps)), t.coefficient});
  }
  return Polynomial(target, std::move(out));
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images) const {
  if (images.size() != ring_->nvars()) throw std::invalid_argument("substitute: one image per variable required");
  if (images.empty()) return *this;
  const RingPtr& target = images.front().ring();
  for (const auto& im : images) require_same(target, im.ring());
  std::vector<std::map<int, Polynomial>> powers(images.size());
  auto power = [&](std::size_t i, int e) -> const Polynomial& {
    auto it = powers[i].find(e);
    if (it == powers[i].end()) it = powers[i].emplace(e, images[i].pow(static_cast<unsigned>(e))).first;
    return it->second;
  };
  Polynomial result(target);
  for (const auto& t : terms_) {
    Polynomial p = constant(target, t.coefficient);
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (t.monomial[i] > 0) p = p * power(i, t.monomial[i]);
    }
    result += p;
  }
  return result;
}

std::string to_string(const Monomial& m, const Ring& ring) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += ring.variables()[i];
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = sgn(t.coefficient) < 0;
    if (first) {
      if (negative) s += '-';
    } else {
      s += negative ? " - " : " + ";
    }
    first = false;
    const Rational mag = abs(t.coefficient);
    if (t.monomial.is_one()) {
      s += mag.get_str();
    } else {
      if (mag != 1) s += mag.get_str() + '*';
      s += hilb::to_string(t.monomial, *ring_);
    }
  }
  return s;
}

bool Polynomial::operator==(const Polynomial& o) const { return same_ring(ring_, o.ring_) && terms_ == o.terms_; }

std::optional<HomogeneousDegree> is_homogeneous(const Polynomial& f, const MultiGrading& g) {
  if (f.is_zero()) return HomogeneousDegree{};
  MultiDegree d = multidegree(f.terms().front().monomial, g);
  for (const auto& t : f.terms()) {
    if (multidegree(t.monomial, g) != d) return std::nullopt;
  }
  return HomogeneousDegree{std::move(d)};
}

}  // namespace hilb
