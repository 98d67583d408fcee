#pragma once

#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "detdio/errors.hpp"
#include "detdio/matrix.hpp"

// Matrix text format, shared by every tool surface:
//   - lines whose first non-blank character is '#' are comments;
//   - every other non-blank line is one row of whitespace-separated
//     decimal integers, optional leading '-';
//   - all rows must have equal length; empty input is the 0x0 matrix.
// Serialization is bit-exact: single spaces between entries, '\n' after
// each row, no comments.

namespace detdio {

namespace detail {

inline bool is_blank(char ch) {
  return ch == ' ' || ch == '\t' || ch == '\r' || ch == '\v' || ch == '\f';
}

// Parses one row of integer tokens; column numbers are 1-based offsets
// into the line, reported on malformed tokens.
template <typename T>
std::vector<T> parse_row(const std::string& line, std::size_t lineno) {
  std::vector<T> row;
  std::size_t pos = 0;
  while (pos < line.size()) {
    if (is_blank(line[pos])) {
      ++pos;
      continue;
    }
    const std::size_t start = pos;
    bool negative = false;
    if (line[pos] == '-') {
      negative = true;
      ++pos;
    }
    if (pos >= line.size() || line[pos] < '0' || line[pos] > '9')
      throw parse_error(lineno, start + 1, "expected a decimal integer");
    T value(0);
    while (pos < line.size() && line[pos] >= '0' && line[pos] <= '9') {
      value = value * 10 + (line[pos] - '0');
      ++pos;
    }
    if (pos < line.size() && !is_blank(line[pos]))
      throw parse_error(lineno, pos + 1, "unexpected character in integer");
    row.push_back(negative ? T(-value) : std::move(value));
  }
  return row;
}

}  // namespace detail

template <typename T>
matrix<T> parse_matrix(std::string_view text) {
  std::vector<std::vector<T>> rows;
  std::size_t lineno = 0;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    std::size_t end = text.find('\n', begin);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(begin, end - begin));
    ++lineno;
    begin = end + 1;
    std::size_t first = 0;
    while (first < line.size() && detail::is_blank(line[first])) ++first;
    if (first == line.size()) continue;   // blank line
    if (line[first] == '#') continue;     // comment
    auto row = detail::parse_row<T>(line, lineno);
    if (!rows.empty() && row.size() != rows.front().size())
      throw parse_error(lineno, 1,
                        "row has " + std::to_string(row.size()) +
                            " entries, expected " +
                            std::to_string(rows.front().size()));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) return matrix<T>();
  matrix<T> out(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      out(i, j) = std::move(rows[i][j]);
  return out;
}

template <typename T>
matrix<T> read_matrix(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix<T>(buf.str());
}

template <typename T>
void write_matrix(std::ostream& out, const matrix<T>& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) out << ' ';
      out << m(i, j);
    }
    out << '\n';
  }
}

template <typename T>
std::string format_matrix(const matrix<T>& m) {
  std::ostringstream os;
  write_matrix(os, m);
  return os.str();
}

}  // namespace detdio
