#pragma once

#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include "detdio/errors.hpp"
#include "detdio/matrix.hpp"
#include "detdio/numeric.hpp"
#include "detdio/unimodular.hpp"

namespace detdio {

// Lower Triangular Form: [N | O] with N square lower triangular, every
// diagonal entry strictly positive, and O identically zero. Equivalently,
// every entry right of the diagonal is zero.
template <typename T>
bool is_ltf(const matrix<T>& m) {
  if (m.rows() > m.cols()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (m(i, i) <= 0) return false;
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != 0) return false;
  }
  return true;
}

template <typename T>
struct ltf_decomposition {
  matrix<T> ltf;                         // [N | O], original * forward
  transform_pair<T> transform;           // unimodular, with exact inverse
  std::vector<col_op<T>> ops;            // elementary ops, application order
  std::vector<std::size_t> pivot_rounds; // divide-and-reduce passes per row
};

using iltf = ltf_decomposition<bigint>;

// Column reduction to Lower Triangular Form.
//
// Per row, over the still-active columns [row, cols): pick the entry of
// minimal nonzero absolute value (lowest column index on ties), write
// every other entry as q*pivot + r with 0 <= r < |pivot|, subtract q times
// the pivot column, and repeat until one nonzero entry remains. That entry
// is the gcd of the row's active entries; a swap moves it onto the
// diagonal and a negate makes it positive. Each pass strictly shrinks the
// minimal absolute value, so the loop terminates.
//
// Throws rank_deficient when an active row has no nonzero entry, which is
// exactly the full-row-rank precondition failing.
template <typename T>
ltf_decomposition<T> ltf_reduce(const matrix<T>& m) {
  const std::size_t r = m.rows(), c = m.cols();
  if (r > c)
    throw shape_error("ltf_reduce: matrix is " + detail::shape_of(m) +
                      ", needs rows <= cols");

  matrix<T> work = m;
  auto pair = transform_pair<T>::identity(c);
  std::vector<col_op<T>> trace;
  std::vector<std::size_t> rounds(r, 0);

  auto emit = [&](const col_op<T>& op) {
    work = apply_col_op(std::move(work), op);
    pair = accumulate(std::move(pair), op);
    trace.push_back(op);
  };

  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  for (std::size_t row = 0; row < r; ++row) {
    for (;;) {
      std::size_t pivot = none;
      std::size_t nonzeros = 0;
      for (std::size_t j = row; j < c; ++j) {
        if (work(row, j) == 0) continue;
        ++nonzeros;
        if (pivot == none ||
            abs_value(work(row, j)) < abs_value(work(row, pivot)))
          pivot = j;
      }
      if (pivot == none)
        throw rank_deficient("ltf_reduce: row " + std::to_string(row) +
                             " of the active submatrix is zero");
      if (nonzeros == 1) {
        if (pivot != row) emit(col_op<T>::swap(row, pivot));
        if (work(row, row) < 0) emit(col_op<T>::negate(row));
        break;
      }
      ++rounds[row];
      const T pivot_value = work(row, pivot);
      for (std::size_t j = row; j < c; ++j) {
        if (j == pivot || work(row, j) == 0) continue;
        auto [q, rem] = euclid_divmod(work(row, j), pivot_value);
        if (q != 0) emit(col_op<T>::add_multiple(j, pivot, T(-q)));
      }
    }
  }

  return {std::move(work), std::move(pair), std::move(trace), std::move(rounds)};
}

}  // namespace detdio
