#pragma once

#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "detdio/errors.hpp"
#include "detdio/numeric.hpp"

namespace detdio {

// Dense row-major matrix over an exact integer type. Values are immutable
// in spirit: every operation in the library returns a fresh matrix, so
// instances can be shared freely across threads.
template <typename T>
class matrix {
public:
  matrix() = default;

  matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), cells_(rows * cols, T(0)) {}

  matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    cells_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_)
        throw shape_error("matrix initializer rows have unequal lengths");
      cells_.insert(cells_.end(), row.begin(), row.end());
    }
  }

  static matrix identity(std::size_t n) {
    matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return cells_.empty(); }

  T& operator()(std::size_t i, std::size_t j) {
    assert(i < rows_ && j < cols_);
    return cells_[i * cols_ + j];
  }
  const T& operator()(std::size_t i, std::size_t j) const {
    assert(i < rows_ && j < cols_);
    return cells_[i * cols_ + j];
  }

  void swap_rows(std::size_t a, std::size_t b) {
    assert(a < rows_ && b < rows_);
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) {
      using std::swap;
      swap((*this)(a, j), (*this)(b, j));
    }
  }

  void swap_cols(std::size_t a, std::size_t b) {
    assert(a < cols_ && b < cols_);
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) {
      using std::swap;
      swap((*this)(i, a), (*this)(i, b));
    }
  }

  friend bool operator==(const matrix& a, const matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.cells_ == b.cells_;
  }
  friend bool operator!=(const matrix& a, const matrix& b) { return !(a == b); }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> cells_;
};

using imat = matrix<bigint>;

namespace detail {

template <typename T>
std::string shape_of(const matrix<T>& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

// Division that must be exact. A nonzero remainder here means the
// fraction-free elimination invariant was broken, i.e. a bug.
template <typename T>
T exact_div(T num, const T& den) {
  T q = num / den;
  if (q * den != num)
    throw std::logic_error("non-exact division in fraction-free elimination");
  return q;
}

}  // namespace detail

// Compact single-line rendering, meant for diagnostics and test output.
// The bit-exact serialization lives in io.hpp.
template <typename T>
std::ostream& operator<<(std::ostream& os, const matrix<T>& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i > 0) os << "; ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) os << ' ';
      os << m(i, j);
    }
  }
  return os << ']';
}

template <typename T>
matrix<T> multiply(const matrix<T>& lhs, const matrix<T>& rhs) {
  if (lhs.cols() != rhs.rows())
    throw dimension_mismatch("multiply: " + detail::shape_of(lhs) + " * " +
                             detail::shape_of(rhs));
  matrix<T> out(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i)
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      const T& l = lhs(i, k);
      if (l == 0) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, j) += l * rhs(k, j);
    }
  return out;
}

template <typename T>
matrix<T> operator*(const matrix<T>& lhs, const matrix<T>& rhs) {
  return multiply(lhs, rhs);
}

template <typename T>
matrix<T> transpose(const matrix<T>& m) {
  matrix<T> out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = m(i, j);
  return out;
}

// Stack two blocks with equal column counts, top over bottom.
template <typename T>
matrix<T> vstack(const matrix<T>& top, const matrix<T>& bottom) {
  if (top.cols() != bottom.cols() && top.rows() != 0 && bottom.rows() != 0)
    throw dimension_mismatch("vstack: " + detail::shape_of(top) + " over " +
                             detail::shape_of(bottom));
  const std::size_t cols = top.rows() != 0 ? top.cols() : bottom.cols();
  matrix<T> out(top.rows() + bottom.rows(), cols);
  for (std::size_t i = 0; i < top.rows(); ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = top(i, j);
  for (std::size_t i = 0; i < bottom.rows(); ++i)
    for (std::size_t j = 0; j < cols; ++j) out(top.rows() + i, j) = bottom(i, j);
  return out;
}

template <typename T>
matrix<T> row_matrix(const std::vector<T>& entries) {
  matrix<T> out(1, entries.size());
  for (std::size_t j = 0; j < entries.size(); ++j) out(0, j) = entries[j];
  return out;
}

template <typename T>
matrix<T> drop_col(const matrix<T>& m, std::size_t col) {
  if (col >= m.cols()) throw index_out_of_range("drop_col: column out of range");
  matrix<T> out(m.rows(), m.cols() - 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::size_t jj = 0;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (j != col) out(i, jj++) = m(i, j);
  }
  return out;
}

template <typename T>
matrix<T> drop_row_col(const matrix<T>& m, std::size_t row, std::size_t col) {
  if (row >= m.rows() || col >= m.cols())
    throw index_out_of_range("drop_row_col: index out of range");
  matrix<T> out(m.rows() - 1, m.cols() - 1);
  std::size_t ii = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i == row) continue;
    std::size_t jj = 0;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (j != col) out(ii, jj++) = m(i, j);
    ++ii;
  }
  return out;
}

template <typename T>
matrix<T> select_cols(const matrix<T>& m, const std::vector<std::size_t>& cols) {
  matrix<T> out(m.rows(), cols.size());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) {
      assert(cols[j] < m.cols());
      out(i, j) = m(i, cols[j]);
    }
  return out;
}

// Exact determinant by Bareiss one-step fraction-free elimination. Every
// intermediate entry is itself a minor of the input, so all divisions are
// exact in the integers; a failed division aborts via std::logic_error.
template <typename T>
T determinant(const matrix<T>& m) {
  if (!m.is_square())
    throw not_square("determinant: matrix is " + detail::shape_of(m));
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  matrix<T> w = m;
  bool negated = false;
  T prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && w(p, k) == 0) ++p;
    if (p == n) return T(0);
    if (p != k) {
      w.swap_rows(p, k);
      negated = !negated;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        w(i, j) = detail::exact_div(w(i, j) * w(k, k) - w(i, k) * w(k, j), prev);
      w(i, k) = T(0);
    }
    prev = w(k, k);
  }
  return negated ? T(-w(n - 1, n - 1)) : w(n - 1, n - 1);
}

// Laplace expansion along the first row. Exponential; kept as an
// independent cross-check for the elimination path on small matrices.
template <typename T>
T determinant_cofactor(const matrix<T>& m) {
  if (!m.is_square())
    throw not_square("determinant_cofactor: matrix is " + detail::shape_of(m));
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  if (n == 1) return m(0, 0);
  T acc(0);
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    T term = m(0, j) * determinant_cofactor(drop_row_col(m, 0, j));
    if (j % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

inline constexpr std::size_t default_minor_cap = 1000000;

// Determinants of all r x r column selections of an r x c matrix, in
// lexicographic column-subset order. The order is part of the contract:
// callers compare whole lists against frozen expectations.
template <typename T>
std::vector<T> maximal_minors(const matrix<T>& m,
                              std::size_t cap = default_minor_cap) {
  const std::size_t r = m.rows(), c = m.cols();
  if (r > c)
    throw shape_error("maximal_minors: matrix is " + detail::shape_of(m) +
                      ", needs rows <= cols");
  bigint combos = 1;
  for (std::size_t i = 1; i <= r; ++i)
    combos = combos * bigint(c - r + i) / bigint(i);
  if (combos > cap)
    throw cap_exceeded("maximal_minors: C(" + std::to_string(c) + "," +
                       std::to_string(r) + ") = " + combos.str() +
                       " exceeds cap " + std::to_string(cap));

  // advance sel to the next lexicographic r-subset of {0..c-1}
  auto next_subset = [r, c](std::vector<std::size_t>& sel) {
    for (std::size_t i = r; i-- > 0;) {
      if (sel[i] < i + c - r) {
        ++sel[i];
        for (std::size_t j = i + 1; j < r; ++j) sel[j] = sel[j - 1] + 1;
        return true;
      }
    }
    return false;
  };

  std::vector<T> out;
  out.reserve(static_cast<std::size_t>(combos));
  std::vector<std::size_t> sel(r);
  for (std::size_t i = 0; i < r; ++i) sel[i] = i;
  do {
    out.push_back(determinant(select_cols(m, sel)));
  } while (next_subset(sel));
  return out;
}

// Rank over the rationals, computed by fraction-free elimination so all
// arithmetic stays in the integers.
template <typename T>
std::size_t rank(const matrix<T>& m) {
  const std::size_t r = m.rows(), c = m.cols();
  matrix<T> w = m;
  std::size_t pivots = 0;
  T prev(1);
  for (std::size_t j = 0; j < c && pivots < r; ++j) {
    std::size_t p = pivots;
    while (p < r && w(p, j) == 0) ++p;
    if (p == r) continue;
    w.swap_rows(p, pivots);
    for (std::size_t i = pivots + 1; i < r; ++i) {
      for (std::size_t jj = j + 1; jj < c; ++jj)
        w(i, jj) =
            detail::exact_div(w(i, jj) * w(pivots, j) - w(i, j) * w(pivots, jj),
                              prev);
      w(i, j) = T(0);
    }
    prev = w(pivots, j);
    ++pivots;
  }
  return pivots;
}

template <typename T>
bool is_full_row_rank(const matrix<T>& m) {
  return rank(m) == m.rows();
}

}  // namespace detdio
