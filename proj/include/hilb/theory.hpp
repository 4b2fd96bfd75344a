#pragma once

#include <hilb/groebner.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hilb {

/// sum_i coefficients[i] d(var_i).
struct SymbolicOneForm {
  RingPtr ring;
  std::vector<Polynomial> coefficients;

  bool is_zero() const;
  /// The ideal of the coefficients (the scheme-theoretic zero locus).
  Ideal coefficient_ideal() const;
  bool operator==(const SymbolicOneForm& o) const { return coefficients == o.coefficients; }
};

SymbolicOneForm differential(const Polynomial& f);
SymbolicOneForm operator+(const SymbolicOneForm& a, const SymbolicOneForm& b);
SymbolicOneForm operator*(const Polynomial& p, const SymbolicOneForm& w);

/// Semi-invariant f = t^weight * fbar on C^* x B, where fbar lives on B and
/// must not use the variable names t or u.
struct WeightedFunction {
  Polynomial fbar;
  long weight = 0;
};

/// Coordinates on C^* x B: Q[t, u, b_1..b_k] with u = 1/t.
Localization torus_chart(const RingPtr& base);

/// t^w, written as u^(-w) for negative w.
Polynomial torus_character(const Localization& chart, long weight);

/// Differential on C^* x B for a function written in t, u and the b's: u is
/// eliminated through du = -u^2 dt, so the u-coefficient is always zero.
SymbolicOneForm chart_differential(const Polynomial& f, const Localization& chart);

/// Verifies df = chi d(fbar) + fbar d(chi), with d(chi) = w t^(w-1) dt,
/// coefficient by coefficient modulo t u - 1.
bool check_splitting_identity(const WeightedFunction& wf);

struct CriticalLocusResult {
  enum class Verdict { Equal, Unequal };
  Verdict verdict = Verdict::Unequal;
  /// Reduced bases of (df) + (tu-1) and (fbar, d fbar) + (tu-1).
  GroebnerBasis critical_locus;
  GroebnerBasis base_locus;
  /// Only for weight 0: whether (df) + (tu-1) equals (d fbar) + (tu-1).
  std::optional<bool> trivial_character_equal;
};

/// Compares Z(df) with the preimage of Z(d fbar) cap Z(fbar) as ideals in
/// the chart ring.
CriticalLocusResult check_critical_locus_prop(const WeightedFunction& wf);

/// Pullback along a coordinate map: images[i] replaces source variable i;
/// all images live in `target`.
struct Substitution {
  RingPtr target;
  std::vector<Polynomial> images;
};

/// Supported shapes: an invertible affine-linear change of the same
/// variables, or the inclusion of the source variables into a ring with
/// extra free variables. Throws InputError otherwise.
bool check_smooth_pullback(const Polynomial& f, const Substitution& phi);

/// Random fbar in Q[b1, b2, b3]: 1 to 4 terms, each of degree 2 to 4,
/// coefficients in {-9..9} \ {0}. Deterministic in the seed. Without
/// constant or linear terms the origin is always a critical point of fbar.
Polynomial random_base_function(std::uint64_t seed);

struct TheoryCase {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct TheoryReport {
  std::vector<TheoryCase> cases;
  bool all_passed() const;
};

/// Worked examples, the w = 0 failure case, and `random_cases` random fbar
/// for each weight in {-2, -1, 1, 2, 3}.
TheoryReport run_theory_checks(std::size_t random_cases = 25, std::uint64_t seed = 20231028);

}  // namespace hilb
