#pragma once

#include <cstddef>
#include <ostream>
#include <utility>
#include <vector>

#include "detdio/errors.hpp"
#include "detdio/matrix.hpp"
#include "detdio/numeric.hpp"

namespace detdio {

enum class op_kind { negate, add_multiple, swap };

// One elementary column (or, mirrored, row) operation. Each op is
// invertible over the integers: its matrix representation has
// determinant -1 (negate, swap) or +1 (add_multiple).
template <typename T>
struct col_op {
  op_kind kind;
  std::size_t a = 0;  // negate: column; add_multiple: dest; swap: first
  std::size_t b = 0;  // add_multiple: src; swap: second
  T factor{};

  static col_op negate(std::size_t col) {
    return {op_kind::negate, col, col, T(0)};
  }
  static col_op add_multiple(std::size_t dest, std::size_t src, T factor) {
    if (dest == src)
      throw index_out_of_range("add_multiple: dest and src must differ");
    return {op_kind::add_multiple, dest, src, std::move(factor)};
  }
  static col_op swap(std::size_t a, std::size_t b) {
    if (a == b) throw index_out_of_range("swap: indices must differ");
    return {op_kind::swap, a, b, T(0)};
  }

  // Closed-form elementary inverse: negate and swap are self-inverse,
  // add_multiple inverts by negating the factor.
  col_op inverse() const {
    if (kind == op_kind::add_multiple) return {kind, a, b, T(-factor)};
    return *this;
  }

  T det() const { return kind == op_kind::add_multiple ? T(1) : T(-1); }
};

using iop = col_op<bigint>;

template <typename T>
std::ostream& operator<<(std::ostream& os, const col_op<T>& op) {
  switch (op.kind) {
    case op_kind::negate:
      return os << "op kind=negate args=col=" << op.a;
    case op_kind::add_multiple:
      return os << "op kind=addmul args=dest=" << op.a << " src=" << op.b
                << " factor=" << op.factor;
    case op_kind::swap:
      return os << "op kind=swap args=a=" << op.a << " b=" << op.b;
  }
  return os;
}

// Applies op to the columns of M; equals M * op_matrix(op, M.cols()).
template <typename T>
matrix<T> apply_col_op(matrix<T> m, const col_op<T>& op) {
  if (op.a >= m.cols() || op.b >= m.cols())
    throw index_out_of_range("apply_col_op: column index out of range");
  switch (op.kind) {
    case op_kind::negate:
      for (std::size_t i = 0; i < m.rows(); ++i) m(i, op.a) = -m(i, op.a);
      break;
    case op_kind::add_multiple:
      for (std::size_t i = 0; i < m.rows(); ++i)
        m(i, op.a) += op.factor * m(i, op.b);
      break;
    case op_kind::swap:
      m.swap_cols(op.a, op.b);
      break;
  }
  return m;
}

// Row mirror: applies op to the rows of M; equals row_op_matrix(op, M.rows()) * M.
// add_multiple reads as R_a <- R_a + factor * R_b.
template <typename T>
matrix<T> apply_row_op(matrix<T> m, const col_op<T>& op) {
  if (op.a >= m.rows() || op.b >= m.rows())
    throw index_out_of_range("apply_row_op: row index out of range");
  switch (op.kind) {
    case op_kind::negate:
      for (std::size_t j = 0; j < m.cols(); ++j) m(op.a, j) = -m(op.a, j);
      break;
    case op_kind::add_multiple:
      for (std::size_t j = 0; j < m.cols(); ++j)
        m(op.a, j) += op.factor * m(op.b, j);
      break;
    case op_kind::swap:
      m.swap_rows(op.a, op.b);
      break;
  }
  return m;
}

// The n x n elementary matrix E with M * E == apply_col_op(M, op).
template <typename T>
matrix<T> op_matrix(const col_op<T>& op, std::size_t n) {
  if (op.a >= n || op.b >= n)
    throw index_out_of_range("op_matrix: index out of range for size " +
                             std::to_string(n));
  matrix<T> e = matrix<T>::identity(n);
  switch (op.kind) {
    case op_kind::negate:
      e(op.a, op.a) = T(-1);
      break;
    case op_kind::add_multiple:
      e(op.b, op.a) = op.factor;  // row src, col dest
      break;
    case op_kind::swap:
      e.swap_cols(op.a, op.b);
      break;
  }
  return e;
}

// The n x n elementary matrix E with E * M == apply_row_op(M, op).
template <typename T>
matrix<T> row_op_matrix(const col_op<T>& op, std::size_t n) {
  return transpose(op_matrix(op, n));
}

// A column swap written with only negate and add_multiple; net effect on
// columns (a, b) is (b, a). Needed because swap itself is redundant as a
// generator of the unimodular group.
template <typename T>
std::vector<col_op<T>> swap_decomposition(std::size_t a, std::size_t b) {
  if (a == b) throw index_out_of_range("swap_decomposition: indices must differ");
  return {
      col_op<T>::add_multiple(a, b, T(1)),
      col_op<T>::add_multiple(b, a, T(-1)),
      col_op<T>::add_multiple(a, b, T(1)),
      col_op<T>::negate(b),
  };
}

template <typename T>
bool is_unimodular(const matrix<T>& m) {
  if (!m.is_square()) return false;
  const T d = determinant(m);
  return d == 1 || d == -1;
}

// Exact inverse of a unimodular matrix via the adjugate; stays in the
// integers because |det| == 1.
template <typename T>
matrix<T> unimodular_inverse(const matrix<T>& m) {
  if (!m.is_square())
    throw shape_error("unimodular_inverse: matrix is " + detail::shape_of(m));
  const T d = determinant(m);
  if (d != 1 && d != -1)
    throw shape_error("unimodular_inverse: determinant is " + detail::to_dec(d));
  const std::size_t n = m.rows();
  matrix<T> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      T minor = determinant(drop_row_col(m, j, i));
      inv(i, j) = ((i + j) % 2 == 0 ? minor : T(-minor)) * d;
    }
  return inv;
}

// A unimodular matrix paired with its exact inverse, kept in lockstep as
// elementary ops accumulate. forward * inverse == I holds after every step.
template <typename T>
struct transform_pair {
  matrix<T> forward;
  matrix<T> inverse;

  static transform_pair identity(std::size_t n) {
    return {matrix<T>::identity(n), matrix<T>::identity(n)};
  }
};

using itransform = transform_pair<bigint>;

// forward <- forward * rep(op); inverse <- rep(op)^-1 * inverse.
// Left-multiplying by rep(op)^-1 is a row operation on the inverse: the
// column op "C_dest += f*C_src" corresponds to the row op
// "R_src += f*R_dest", with the inverted factor.
template <typename T>
transform_pair<T> accumulate(transform_pair<T> pair, const col_op<T>& op) {
  pair.forward = apply_col_op(std::move(pair.forward), op);
  const col_op<T> inv = op.inverse();
  switch (inv.kind) {
    case op_kind::negate:
    case op_kind::swap:
      pair.inverse = apply_row_op(std::move(pair.inverse), inv);
      break;
    case op_kind::add_multiple:
      pair.inverse = apply_row_op(
          std::move(pair.inverse),
          col_op<T>::add_multiple(inv.b, inv.a, inv.factor));
      break;
  }
  return pair;
}

}  // namespace detdio
