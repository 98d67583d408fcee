#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace detdio {

// Base class for all library errors. Internal consistency failures
// (e.g. a non-exact division inside fraction-free elimination) are not
// part of this hierarchy; they throw std::logic_error because they
// signal a bug, not bad input.
class error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Inner dimensions of a product (or stacked shapes) do not agree.
class dimension_mismatch : public error {
  using error::error;
};

// A square matrix was required.
class not_square : public error {
  using error::error;
};

// Structural precondition violated: r > c, bad block shape, invalid d, ...
class shape_error : public error {
  using error::error;
};

// Minor enumeration would exceed the configured combination cap.
class cap_exceeded : public error {
  using error::error;
};

// The matrix is not of full row rank, so the requested quantity is undefined.
class rank_deficient : public error {
  using error::error;
};

// A row/column index is outside the matrix, or an operation's indices clash.
class index_out_of_range : public error {
  using error::error;
};

// The divisibility condition for the equation fails; no solution exists.
class unsolvable : public error {
  using error::error;
};

// A linear form with all coefficients zero admits no full-rank completion.
class degenerate_form : public error {
  using error::error;
};

// Matrix text input is malformed. Carries 1-based line/column of the fault.
class parse_error : public error {
public:
  parse_error(std::size_t line, std::size_t column, const std::string& what)
      : error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace detdio
