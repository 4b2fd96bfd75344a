#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace hilb {

/// Exponent vector, one entry per ring variable.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<int> exps);

  static Monomial variable(std::size_t nvars, std::size_t index, int power = 1);

  std::size_t size() const noexcept { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  std::span<const int> exponents() const noexcept { return exps_; }

  long total_degree() const;
  bool is_one() const;

  /// Throws std::overflow_error when an exponent leaves the int range.
  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  /// o / *this; requires divides(o).
  Monomial quotient_of(const Monomial& o) const;
  Monomial lcm(const Monomial& o) const;
  bool coprime(const Monomial& o) const;

  /// Plain lexicographic comparison on the exponent vector; this is the
  /// container ordering, not a monomial order.
  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

 private:
  std::vector<int> exps_;
};

/// lex, grevlex, or a positive weight vector refined by lex or grevlex.
class MonomialOrder {
 public:
  enum class Kind { Lex, Grevlex, Weighted };

  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, {}, Kind::Lex); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, {}, Kind::Grevlex); }
  /// Weights must all be positive; tiebreak must be Lex or Grevlex.
  static MonomialOrder weighted(std::vector<long> weights, Kind tiebreak = Kind::Grevlex);

  Kind kind() const noexcept { return kind_; }
  Kind tiebreak() const noexcept { return tiebreak_; }
  const std::vector<long>& weights() const noexcept { return weights_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  bool operator==(const MonomialOrder&) const = default;

 private:
  MonomialOrder(Kind k, std::vector<long> w, Kind tie) : kind_(k), weights_(std::move(w)), tiebreak_(tie) {}

  Kind kind_;
  std::vector<long> weights_;
  Kind tiebreak_;
};

}  // namespace hilb
