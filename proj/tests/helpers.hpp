#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "detdio/detdio.hpp"

// Deterministic instance generators shared by the unit and acceptance
// suites. Every generator takes an explicit engine so each test seeds its
// own reproducible stream.

namespace testgen {

using detdio::bigint;
using detdio::imat;
using detdio::iop;

using rng_t = std::mt19937;

inline int rand_int(rng_t& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline imat random_matrix(rng_t& rng, std::size_t rows, std::size_t cols,
                          int lo = -9, int hi = 9) {
  imat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rand_int(rng, lo, hi);
  return m;
}

inline imat random_full_row_rank(rng_t& rng, std::size_t rows, std::size_t cols,
                                 int lo = -9, int hi = 9) {
  for (;;) {
    imat m = random_matrix(rng, rows, cols, lo, hi);
    if (detdio::rank(m) == rows) return m;
  }
}

inline iop random_op(rng_t& rng, std::size_t n) {
  if (n < 2) return iop::negate(0);  // only negate exists on one column
  switch (rand_int(rng, 0, 2)) {
    case 0:
      return iop::negate(rand_int(rng, 0, static_cast<int>(n) - 1));
    case 1: {
      int dest = rand_int(rng, 0, static_cast<int>(n) - 1);
      int src = rand_int(rng, 0, static_cast<int>(n) - 2);
      if (src >= dest) ++src;
      int factor = rand_int(rng, 1, 9) * (rand_int(rng, 0, 1) == 0 ? 1 : -1);
      return iop::add_multiple(dest, src, factor);
    }
    default: {
      int a = rand_int(rng, 0, static_cast<int>(n) - 1);
      int b = rand_int(rng, 0, static_cast<int>(n) - 2);
      if (b >= a) ++b;
      return iop::swap(a, b);
    }
  }
}

inline std::vector<iop> random_op_sequence(rng_t& rng, std::size_t n,
                                           std::size_t max_len) {
  std::vector<iop> ops;
  const std::size_t len = rand_int(rng, 1, static_cast<int>(max_len));
  ops.reserve(len);
  for (std::size_t i = 0; i < len; ++i) ops.push_back(random_op(rng, n));
  return ops;
}

// Unimodular n x n matrix built from a random elementary column-op chain.
inline imat random_unimodular(rng_t& rng, std::size_t n, std::size_t max_ops = 20) {
  imat u = imat::identity(n);
  for (const auto& op : random_op_sequence(rng, n, max_ops))
    u = detdio::apply_col_op(std::move(u), op);
  return u;
}

// Same, built by row ops, for pre-multiplication checks.
inline imat random_row_unimodular(rng_t& rng, std::size_t n, std::size_t max_ops = 20) {
  imat u = imat::identity(n);
  for (const auto& op : random_op_sequence(rng, n, max_ops))
    u = detdio::apply_row_op(std::move(u), op);
  return u;
}

inline std::size_t bit_length(bigint v) {
  v = detdio::abs_value(std::move(v));
  std::size_t bits = 0;
  while (v != 0) {
    v >>= 1;
    ++bits;
  }
  return bits;
}

}  // namespace testgen
