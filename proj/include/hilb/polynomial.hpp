#pragma once

#include <hilb/grading.hpp>
#include <hilb/monomial.hpp>
#include <hilb/rational.hpp>

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hilb {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Polynomial ring Q[vars] with a multigrading and a monomial order.
class Ring {
 public:
  /// Validates variable names ([A-Za-z][A-Za-z0-9_]*, distinct) and the
  /// grading arity; throws InputError.
  static RingPtr make(std::vector<std::string> variables, MultiGrading grading,
                      MonomialOrder order = MonomialOrder::grevlex());
  /// Standard grading, grevlex.
  static RingPtr make(std::vector<std::string> variables);

  const std::vector<std::string>& variables() const noexcept { return variables_; }
  std::size_t nvars() const noexcept { return variables_.size(); }
  const MultiGrading& grading() const noexcept { return grading_; }
  const MonomialOrder& order() const noexcept { return order_; }

  std::optional<std::size_t> index_of(std::string_view name) const;

  RingPtr with_order(MonomialOrder order) const;
  RingPtr with_grading(MultiGrading grading) const;

  bool operator==(const Ring&) const = default;

 private:
  Ring(std::vector<std::string> v, MultiGrading g, MonomialOrder o)
      : variables_(std::move(v)), grading_(std::move(g)), order_(std::move(o)) {}

  std::vector<std::string> variables_;
  MultiGrading grading_;
  MonomialOrder order_;
};

bool same_ring(const RingPtr& a, const RingPtr& b);

struct Term {
  Monomial monomial;
  Rational coefficient;

  bool operator==(const Term&) const = default;
};

/// Sparse polynomial; terms strictly decreasing under the ring's order, no
/// zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  /// Sorts, merges equal monomials and drops zero coefficients.
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial variable(RingPtr ring, std::string_view name);
  static Polynomial monomial(RingPtr ring, Monomial m, const Rational& c = 1);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const noexcept { return terms_.size() == 1; }

  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().monomial; }
  const Rational& leading_coefficient() const { return leading_term().coefficient; }
  long total_degree() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }

  Polynomial times(const Monomial& m, const Rational& c) const;
  /// Removes and returns the leading term.
  Term take_leading();
  /// *this - c * m * g, merged in place.
  void subtract_multiple(const Polynomial& g, const Monomial& m, const Rational& c);

  Polynomial pow(unsigned exponent) const;
  Polynomial monic() const;
  Polynomial derivative(std::size_t var) const;
  Rational evaluate(std::span<const Rational> point) const;
  /// Coefficient of m (zero if absent).
  Rational coefficient(const Monomial& m) const;

  /// Re-expresses the polynomial in target, matching variables by name.
  /// Throws InputError when a variable in the support is missing there.
  Polynomial in_ring(const RingPtr& target) const;
  /// Replaces variable i by images[i] (all images in one ring).
  Polynomial substitute(std::span<const Polynomial> images) const;

  std::string to_string() const;

  bool operator==(const Polynomial& o) const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

Polynomial operator*(const Rational& c, const Polynomial& p);

/// Result of is_homogeneous: degree is empty for the zero polynomial, which
/// is homogeneous of every degree.
struct HomogeneousDegree {
  std::optional<MultiDegree> degree;
  bool is_any() const noexcept { return !degree.has_value(); }
};

std::optional<HomogeneousDegree> is_homogeneous(const Polynomial& f, const MultiGrading& g);
inline std::optional<HomogeneousDegree> is_homogeneous(const Polynomial& f) {
  return is_homogeneous(f, f.ring()->grading());
}

/// Grammar: sums/differences of products of factors; factor = integer or
/// rational literal (e.g. 3/4), variable, or parenthesized expression, with
/// optional ^ nonnegative-integer exponent. Unary +/- allowed. No implicit
/// multiplication. Throws ParseError (with position) or InputError.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

std::string to_string(const Monomial& m, const Ring& ring);

}  // namespace hilb
