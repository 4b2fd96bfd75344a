#pragma once

#include <hilb/quotient.hpp>

#include <vector>

namespace hilb::detail {

// Relations among generators g_1..g_k of a zero-dimensional ideal I, taken
// modulo I^2 and with coefficients reduced modulo I:
//   K = { c in (S/I)^k : sum_i c_i g_i in I^2 }.
// A vector c is stored as k consecutive blocks of colength entries.
// phi : I -> S/I is well defined by phi(g_i) = a_i iff sum_i c_i a_i = 0 for
// every c in K.
struct GeneratorRelations {
  QuotientBasis quotient;
  std::vector<Polynomial> generators;
  std::vector<RationalVector> relations;  // vector-space basis of K
};

GeneratorRelations generator_relations(const std::vector<Polynomial>& generators, const GroebnerBasis& gb);

}  // namespace hilb::detail
