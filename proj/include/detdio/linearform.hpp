#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "detdio/divisor.hpp"
#include "detdio/errors.hpp"
#include "detdio/ltf.hpp"
#include "detdio/matrix.hpp"
#include "detdio/numeric.hpp"
#include "detdio/solver.hpp"
#include "detdio/unimodular.hpp"

namespace detdio {

// A linear form a1*x1 + ... + an*xn is realized as the determinant of an
// (n-1) x n integer block A stacked over the unknown row (x1 ... xn):
// expanding that determinant along its last row gives back the form, with
// the coefficients appearing as signed maximal minors of A.

namespace detail {

template <typename T>
void validate_form(const std::vector<T>& coeffs) {
  if (coeffs.size() < 2)
    throw shape_error("linear form needs at least 2 coefficients");
  if (std::all_of(coeffs.begin(), coeffs.end(),
                  [](const T& v) { return v == 0; }))
    throw degenerate_form("linear form has all coefficients zero");
}

template <typename T>
T gcd_of(const std::vector<T>& values) {
  T g(0);
  for (const T& v : values) g = gcd_value(g, v);
  return g;
}

}  // namespace detail

// Signed last-row cofactors of an (n-1) x n block: c_j is, up to sign, the
// determinant of A with column j removed, arranged so that
// det([A; x]) == sum_j c_j * x_j for every integer row x.
template <typename T>
std::vector<T> cofactor_vector(const matrix<T>& a) {
  const std::size_t n = a.cols();
  if (n < 2 || a.rows() + 1 != n)
    throw shape_error("cofactor_vector: block is " + detail::shape_of(a) +
                      ", needs (n-1) x n with n >= 2");
  std::vector<T> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    T minor = determinant(drop_col(a, j));
    // sign of the (n, j+1) cofactor, 1-based
    out[j] = (n + j + 1) % 2 == 0 ? std::move(minor) : T(-minor);
  }
  return out;
}

template <typename T>
struct form_completion {
  matrix<T> block;  // (n-1) x n block A with cofactor_vector == coeffs
  matrix<T> unit_stack;    // n x n matrix [B; coeffs/gcd], determinant +1
};

using icompletion = form_completion<bigint>;

// Builds a completion A for the given coefficients:
//   1. factor out k = gcd(coeffs), leaving a primitive vector a';
//   2. find B with det([B; a']) == +1 (the solver, unknowns on top);
//   3. invert-transpose V = [B; a']: the first n-1 rows of (V^T)^-1 form a
//      block whose cofactor vector is exactly a';
//   4. scale the first row by k to restore the original coefficients.
template <typename T>
form_completion<T> complete_to_form(const std::vector<T>& coeffs) {
  detail::validate_form(coeffs);
  const std::size_t n = coeffs.size();
  const T k = detail::gcd_of(coeffs);

  std::vector<T> primitive(n);
  for (std::size_t j = 0; j < n; ++j) primitive[j] = coeffs[j] / k;

  equation_instance<T> unit{row_matrix(primitive), T(1),
                            stack_order::known_on_bottom};
  matrix<T> b = solve(unit);
  matrix<T> v = vstack(b, unit.known);
  if (determinant(v) != 1)
    throw std::logic_error("complete_to_form: unit stack determinant is not 1");

  matrix<T> w = unimodular_inverse(transpose(v));
  matrix<T> a(n - 1, n);
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a(i, j) = i == 0 ? T(k * w(i, j)) : w(i, j);

  if (cofactor_vector(a) != coeffs)
    throw std::logic_error("complete_to_form: cofactor identity failed");
  return {std::move(a), std::move(v)};
}

// Solves a1*x1 + ... + an*xn = d, or throws unsolvable when gcd(a) does
// not divide d. The coefficient row reduces to [g 0 ... 0] = row * U, so
// the first column of U scaled by d/g is a witness.
template <typename T>
std::vector<T> solve_linear(const std::vector<T>& coeffs, const T& d) {
  detail::validate_form(coeffs);
  const auto dec = ltf_reduce(row_matrix(coeffs));
  const T g = dec.ltf(0, 0);
  if (d % g != 0)
    throw unsolvable("gcd " + detail::to_dec(g) + " does not divide " +
                     detail::to_dec(d));
  const T scale = d / g;
  std::vector<T> x(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    x[i] = scale * dec.transform.forward(i, 0);
  return x;
}

// Cross-check that the determinant criterion on the completion agrees
// with the classical gcd criterion on the coefficients, and that the
// completion's maximal minors are the coefficients up to sign.
template <typename T>
bool condition_equivalence_check(const std::vector<T>& coeffs, const T& d) {
  detail::validate_form(coeffs);
  if (d < 1) throw shape_error("condition_equivalence_check: d must be >= 1");

  const form_completion<T> completion = complete_to_form(coeffs);
  const bool gcd_condition = d % detail::gcd_of(coeffs) == 0;
  const bool divisor_condition = is_solvable(
      equation_instance<T>{completion.block, d, stack_order::known_on_top});

  std::vector<T> minors = maximal_minors(completion.block);
  std::vector<T> wanted = coeffs;
  for (T& v : minors) v = abs_value(std::move(v));
  for (T& v : wanted) v = abs_value(std::move(v));
  std::sort(minors.begin(), minors.end());
  std::sort(wanted.begin(), wanted.end());

  return gcd_condition == divisor_condition && minors == wanted;
}

}  // namespace detdio
