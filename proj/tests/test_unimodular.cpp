#include <catch2/catch.hpp>

#include "detdio/unimodular.hpp"
#include "helpers.hpp"

using detdio::bigint;
using detdio::imat;
using detdio::iop;
using detdio::itransform;

TEST_CASE("apply_col_op") {
  CHECK(apply_col_op(imat{{2, -3}}, iop::negate(0)) == imat{{-2, -3}});
  CHECK(apply_col_op(imat{{2, 2}, {2, 2}}, iop::add_multiple(1, 0, -1)) ==
        imat{{2, 0}, {2, 0}});
  CHECK(apply_col_op(imat{{1, 0}, {-3, 2}}, iop::swap(0, 1)) ==
        imat{{0, 1}, {2, -3}});
  CHECK_THROWS_AS(apply_col_op(imat{{1, 2}}, iop::negate(2)),
                  detdio::index_out_of_range);
}

TEST_CASE("degenerate op constructions are rejected") {
  CHECK_THROWS_AS(iop::add_multiple(1, 1, 3), detdio::index_out_of_range);
  CHECK_THROWS_AS(iop::swap(2, 2), detdio::index_out_of_range);
  CHECK_THROWS_AS(detdio::swap_decomposition<bigint>(0, 0),
                  detdio::index_out_of_range);
}

TEST_CASE("op_matrix") {
  SECTION("negate") {
    imat e = imat::identity(4);
    e(2, 2) = -1;
    CHECK(op_matrix(iop::negate(2), 4) == e);
  }

  SECTION("add_multiple puts the factor at (src, dest)") {
    imat e = imat::identity(4);
    e(2, 0) = -2;
    CHECK(op_matrix(iop::add_multiple(0, 2, -2), 4) == e);
  }

  SECTION("swap is the exchange permutation") {
    CHECK(op_matrix(iop::swap(0, 2), 4) ==
          imat{{0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}});
  }

  SECTION("index out of range") {
    CHECK_THROWS_AS(op_matrix(iop::negate(4), 4), detdio::index_out_of_range);
  }
}

TEST_CASE("op determinants") {
  CHECK(determinant(op_matrix(iop::negate(1), 3)) == -1);
  CHECK(determinant(op_matrix(iop::swap(0, 2), 3)) == -1);
  CHECK(determinant(op_matrix(iop::add_multiple(0, 2, 7), 3)) == 1);
}

TEST_CASE("column application equals multiplication by the op matrix") {
  testgen::rng_t rng(7701);
  for (int iter = 0; iter < 300; ++iter) {
    const std::size_t r = testgen::rand_int(rng, 1, 5);
    const std::size_t c = testgen::rand_int(rng, 2, 6);
    const imat m = testgen::random_matrix(rng, r, c);
    const iop op = testgen::random_op(rng, c);
    CHECK(apply_col_op(m, op) == multiply(m, op_matrix(op, c)));
  }
}

TEST_CASE("row application equals multiplication by the row op matrix") {
  testgen::rng_t rng(7702);
  for (int iter = 0; iter < 300; ++iter) {
    const std::size_t r = testgen::rand_int(rng, 2, 6);
    const std::size_t c = testgen::rand_int(rng, 1, 5);
    const imat m = testgen::random_matrix(rng, r, c);
    const iop op = testgen::random_op(rng, r);
    CHECK(apply_row_op(m, op) == multiply(row_op_matrix(op, r), m));
  }
}

TEST_CASE("accumulate") {
  SECTION("self-inverse negate") {
    auto pair = accumulate(itransform::identity(3), iop::negate(0));
    imat expected = imat::identity(3);
    expected(0, 0) = -1;
    CHECK(pair.forward == expected);
    CHECK(pair.inverse == expected);
  }

  SECTION("add_multiple inverts by negating the factor") {
    auto pair = accumulate(itransform::identity(2), iop::add_multiple(1, 0, 3));
    CHECK(pair.forward == imat{{1, 3}, {0, 1}});
    CHECK(pair.inverse == imat{{1, -3}, {0, 1}});
    CHECK(multiply(pair.forward, pair.inverse) == imat::identity(2));
  }

  SECTION("worked 2x4 reduction's op sequence reproduces its transform") {
    // T1..T5 of the reduction, split into elementary ops
    const std::vector<iop> ops = {
        iop::add_multiple(1, 0, -1), iop::negate(2),
        iop::add_multiple(2, 0, -1), iop::add_multiple(3, 0, -2),
        iop::add_multiple(0, 2, -2), iop::swap(0, 2),
        iop::add_multiple(2, 3, 4),  iop::swap(1, 3),
        iop::negate(1),
    };
    auto pair = itransform::identity(4);
    for (const auto& op : ops) pair = accumulate(std::move(pair), op);
    CHECK(pair.forward ==
          imat{{-1, 2, -5, -1}, {0, 0, 0, 1}, {-1, 0, 2, 0}, {0, -1, 4, 0}});
    CHECK(multiply(pair.forward, pair.inverse) == imat::identity(4));
  }
}

TEST_CASE("accumulate rejects out-of-range ops") {
  CHECK_THROWS_AS(accumulate(itransform::identity(2), iop::negate(2)),
                  detdio::index_out_of_range);
}

TEST_CASE("transform pair law under random op sequences") {
  testgen::rng_t rng(7703);
  for (int iter = 0; iter < 200; ++iter) {
    const std::size_t n = testgen::rand_int(rng, 2, 8);
    auto pair = itransform::identity(n);
    for (const auto& op : testgen::random_op_sequence(rng, n, 30))
      pair = accumulate(std::move(pair), op);
    CHECK(multiply(pair.forward, pair.inverse) == imat::identity(n));
    CHECK(multiply(pair.inverse, pair.forward) == imat::identity(n));
    CHECK(detdio::abs_value(determinant(pair.forward)) == 1);
  }
}

TEST_CASE("is_unimodular") {
  CHECK(is_unimodular(imat::identity(5)));
  CHECK(is_unimodular(imat{{-1, 2, -5, -1}, {0, 0, 0, 1}, {-1, 0, 2, 0}, {0, -1, 4, 0}}));
  CHECK_FALSE(is_unimodular(imat{{2, 0}, {0, 1}}));
  CHECK_FALSE(is_unimodular(imat{{1, 2, 3}, {4, 5, 6}}));
}

TEST_CASE("unimodular_inverse") {
  testgen::rng_t rng(7704);
  for (int iter = 0; iter < 50; ++iter) {
    const std::size_t n = testgen::rand_int(rng, 1, 5);
    const imat u = testgen::random_unimodular(rng, n);
    CHECK(multiply(u, unimodular_inverse(u)) == imat::identity(n));
  }
  CHECK_THROWS_AS(unimodular_inverse(imat{{2, 0}, {0, 1}}), detdio::shape_error);
}

TEST_CASE("swap decomposes into negate and add_multiple") {
  testgen::rng_t rng(7705);
  for (int iter = 0; iter < 100; ++iter) {
    const std::size_t c = testgen::rand_int(rng, 2, 6);
    const std::size_t r = testgen::rand_int(rng, 1, 5);
    const imat m = testgen::random_matrix(rng, r, c);
    int a = testgen::rand_int(rng, 0, static_cast<int>(c) - 1);
    int b = testgen::rand_int(rng, 0, static_cast<int>(c) - 2);
    if (b >= a) ++b;

    imat via_ops = m;
    for (const auto& op : detdio::swap_decomposition<bigint>(a, b))
      via_ops = apply_col_op(std::move(via_ops), op);
    CHECK(via_ops == apply_col_op(m, iop::swap(a, b)));
  }
}
