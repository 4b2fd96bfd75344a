#pragma once

#include <gmpxx.h>

#include <string>

namespace hilb {

// Exact rationals. gmpxx keeps mpq_class canonical after every arithmetic
// operation; only construction from a raw numerator/denominator pair needs
// an explicit canonicalize(), which make_rational does.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace hilb
