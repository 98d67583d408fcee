#pragma once

#include <cstddef>

#include "detdio/errors.hpp"
#include "detdio/ltf.hpp"
#include "detdio/matrix.hpp"
#include "detdio/numeric.hpp"

namespace detdio {

// Greatest divisor of a full-row-rank matrix: the gcd of all its maximal
// minors, as a strictly positive integer. Two routes are provided; they
// agree because column reduction preserves the gcd of maximal minors.

// Oracle route: enumerate the minors and fold the gcd. gcd treats 0 as
// identity, so zero minors are harmless; all-zero minors mean the matrix
// is rank-deficient and the divisor is undefined.
template <typename T>
T greatest_divisor_minors(const matrix<T>& m,
                          std::size_t cap = default_minor_cap) {
  T g(0);
  for (const T& minor : maximal_minors(m, cap)) g = gcd_value(g, minor);
  if (g == 0)
    throw rank_deficient("greatest_divisor: all maximal minors are zero");
  return g;
}

// Default route: reduce to LTF and multiply the diagonal. Polynomial op
// count, no combinatorial enumeration.
template <typename T>
T greatest_divisor_ltf(const matrix<T>& m) {
  const auto dec = ltf_reduce(m);
  T product(1);
  for (std::size_t i = 0; i < m.rows(); ++i) product *= dec.ltf(i, i);
  return product;
}

template <typename T>
T greatest_divisor(const matrix<T>& m) {
  return greatest_divisor_ltf(m);
}

}  // namespace detdio
