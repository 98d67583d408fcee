#pragma once

#include <cstddef>
#include <utility>

#include "detdio/divisor.hpp"
#include "detdio/errors.hpp"
#include "detdio/ltf.hpp"
#include "detdio/matrix.hpp"
#include "detdio/unimodular.hpp"

namespace detdio {

enum class stack_order { known_on_top, known_on_bottom };

// One instance of det([A; X]) = +-d: a known r x c block A (r may be 0),
// the target d, and which side of the stack A occupies. The unknown block
// X has c-r rows; solving needs r < c, though a rank-deficient square A
// is still answered (unsolvable) rather than rejected.
template <typename T>
struct equation_instance {
  matrix<T> known;
  T target;
  stack_order orientation = stack_order::known_on_top;
};

using iequation = equation_instance<bigint>;

namespace detail {

// A square known block is tolerated here so rank-deficiency can be
// reported as plain unsolvability (any assembly has determinant 0); a
// full-rank square block leaves no unknown row and is rejected where the
// rank is known.
template <typename T>
void validate_instance(const equation_instance<T>& inst) {
  const std::size_t r = inst.known.rows(), c = inst.known.cols();
  if (c == 0 || r > c)
    throw shape_error("equation: known block is " + shape_of(inst.known) +
                      ", needs rows <= cols and at least one column");
  if (r >= 1 && inst.target < 1)
    throw shape_error("equation: target must be >= 1 when a known block is present");
  if (r == 0 && inst.target < 0)
    throw shape_error("equation: target must be >= 0");
}

template <typename T>
void require_unknown_rows(const equation_instance<T>& inst) {
  if (inst.known.rows() == inst.known.cols())
    throw shape_error("equation: known block is square, no unknown rows left");
}

}  // namespace detail

// Stacks known and unknown blocks in the instance's orientation.
template <typename T>
matrix<T> assemble(const equation_instance<T>& inst, const matrix<T>& unknown) {
  detail::validate_instance(inst);
  if (unknown.rows() != inst.known.cols() - inst.known.rows() ||
      unknown.cols() != inst.known.cols())
    throw shape_error("assemble: unknown block is " + detail::shape_of(unknown) +
                      ", expected " +
                      std::to_string(inst.known.cols() - inst.known.rows()) +
                      "x" + std::to_string(inst.known.cols()));
  return inst.orientation == stack_order::known_on_top
             ? vstack(inst.known, unknown)
             : vstack(unknown, inst.known);
}

// Solvability criterion: with no known block the equation always has a
// solution; otherwise A must be full row rank and its greatest divisor
// must divide d.
template <typename T>
bool is_solvable(const equation_instance<T>& inst) {
  detail::validate_instance(inst);
  if (inst.known.rows() == 0) return true;
  T gd;
  try {
    gd = greatest_divisor_ltf(inst.known);
  } catch (const rank_deficient&) {
    return false;
  }
  detail::require_unknown_rows(inst);
  return inst.target % gd == 0;
}

// Constructs an unknown block X with det(assembled) == +d exactly.
//
// With A present: reduce A to LTF A' = A*U, set k = d / gd(A), and build
// B = [O | N] with N diagonal (1, ..., 1, l) where l = k when det(U) = 1
// and l = -k otherwise; then X = B * U^-1. The stacked [A'; B] is block
// triangular with determinant gd(A) * l, and post-multiplying by U^-1
// restores A while scaling the determinant by det(U), landing on +d.
//
// With A absent: X = diag(1, ..., 1, d), which covers d = 0 as well.
//
// For known_on_bottom the top-oriented solution is reused; moving the r
// known rows past the c-r unknown rows multiplies the determinant by
// (-1)^(r*(c-r)), and negating one row of X absorbs that sign.
template <typename T>
matrix<T> solve(const equation_instance<T>& inst) {
  detail::validate_instance(inst);
  const std::size_t r = inst.known.rows(), c = inst.known.cols();

  if (r == 0) {
    matrix<T> x = matrix<T>::identity(c);
    x(c - 1, c - 1) = inst.target;
    return x;
  }

  ltf_decomposition<T> dec;
  try {
    dec = ltf_reduce(inst.known);
  } catch (const rank_deficient&) {
    throw unsolvable("known block is not of full row rank");
  }
  detail::require_unknown_rows(inst);
  T gd(1);
  for (std::size_t i = 0; i < r; ++i) gd *= dec.ltf(i, i);
  if (inst.target % gd != 0)
    throw unsolvable("greatest divisor " + detail::to_dec(gd) +
                     " does not divide " + detail::to_dec(inst.target));
  const T k = inst.target / gd;

  matrix<T> b(c - r, c);
  for (std::size_t i = 0; i + 1 < c - r; ++i) b(i, r + i) = T(1);
  const T det_u = determinant(dec.transform.forward);
  b(c - r - 1, c - 1) = det_u == 1 ? k : T(-k);

  matrix<T> x = multiply(b, dec.transform.inverse);
  if (inst.orientation == stack_order::known_on_bottom && (r * (c - r)) % 2 == 1)
    x = apply_row_op(std::move(x), col_op<T>::negate(0));
  return x;
}

// Accepts both signs: true iff |det(assembled)| == d.
template <typename T>
bool verify_solution(const equation_instance<T>& inst, const matrix<T>& unknown) {
  detail::validate_instance(inst);
  const T d = determinant(assemble(inst, unknown));
  return abs_value(d) == inst.target;
}

}  // namespace detdio
