#include <catch2/catch.hpp>

#include "detdio/io.hpp"
#include "helpers.hpp"

using detdio::bigint;
using detdio::imat;
using detdio::parse_matrix;

TEST_CASE("parse_matrix") {
  SECTION("rows, comments, blank lines") {
    const auto m = parse_matrix<bigint>("# header\n1 2 -3\n\n  # indented comment\n4 5 6\n");
    CHECK(m == imat{{1, 2, -3}, {4, 5, 6}});
  }

  SECTION("empty input is the 0x0 matrix") {
    CHECK(parse_matrix<bigint>("") == imat());
    CHECK(parse_matrix<bigint>("# only comments\n\n") == imat());
  }

  SECTION("no trailing newline") {
    CHECK(parse_matrix<bigint>("1 2") == imat{{1, 2}});
  }

  SECTION("tabs and extra spaces between entries") {
    CHECK(parse_matrix<bigint>(" 1\t2   3 \n") == imat{{1, 2, 3}});
  }

  SECTION("ragged rows") {
    try {
      parse_matrix<bigint>("1 2\n3\n");
      FAIL("expected parse_error");
    } catch (const detdio::parse_error& e) {
      CHECK(e.line() == 2);
    }
  }

  SECTION("malformed token") {
    try {
      parse_matrix<bigint>("1 2\n3 4x\n");
      FAIL("expected parse_error");
    } catch (const detdio::parse_error& e) {
      CHECK(e.line() == 2);
      CHECK(e.column() == 4);
    }
    CHECK_THROWS_AS(parse_matrix<bigint>("-\n"), detdio::parse_error);
    CHECK_THROWS_AS(parse_matrix<bigint>("1.5\n"), detdio::parse_error);
    CHECK_THROWS_AS(parse_matrix<bigint>("+3\n"), detdio::parse_error);
  }
}

TEST_CASE("format_matrix is bit-exact") {
  CHECK(detdio::format_matrix(imat{{1, 2}, {-3, 40}}) == "1 2\n-3 40\n");
  CHECK(detdio::format_matrix(imat()) == "");
}

TEST_CASE("serialize/parse round-trip") {
  testgen::rng_t rng(9901);
  for (int iter = 0; iter < 200; ++iter) {
    const std::size_t r = testgen::rand_int(rng, 1, 6);
    const std::size_t c = testgen::rand_int(rng, 1, 6);
    const imat m = testgen::random_matrix(rng, r, c, -1000, 1000);
    CHECK(parse_matrix<bigint>(detdio::format_matrix(m)) == m);
  }
}

TEST_CASE("arbitrarily long integers survive the round-trip") {
  bigint huge = 1;
  for (int i = 0; i < 40; ++i) huge *= 1000003;
  const imat m{{huge, bigint(-huge)}, {0, 1}};
  CHECK(parse_matrix<bigint>(detdio::format_matrix(m)) == m);
}
