// detdio command-line front end: exact integer-matrix computations over
// the shared plain-text matrix format.
//
// Exit codes: 0 success / affirmative answer, 1 well-posed negative answer
// (unsolvable, verification failed, rank-deficient input), 2 malformed
// input or usage error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "detdio/detdio.hpp"

namespace {

using detdio::bigint;
using detdio::imat;
using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_negative = 1;
constexpr int exit_usage = 2;

// Input problems discovered outside the library's own validation.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

imat read_matrix_file(const std::string& path) {
  if (path == "-") return detdio::read_matrix<bigint>(std::cin);
  std::ifstream in(path);
  if (!in) throw input_error(path + ": cannot open file");
  try {
    return detdio::read_matrix<bigint>(in);
  } catch (const detdio::parse_error& e) {
    throw input_error(path + ": " + e.what());
  }
}

imat read_matrix_stdin() { return detdio::read_matrix<bigint>(std::cin); }

bool stdin_is_terminal() { return isatty(fileno(stdin)) != 0; }

bigint parse_int_arg(const std::string& text, const std::string& flag) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) throw input_error(flag + ": expected an integer");
  bigint value = 0;
  for (; pos < text.size(); ++pos) {
    if (text[pos] < '0' || text[pos] > '9')
      throw input_error(flag + ": expected an integer, got '" + text + "'");
    value = value * 10 + (text[pos] - '0');
  }
  return negative ? bigint(-value) : value;
}

std::vector<bigint> parse_int_list(const std::string& text, const std::string& flag) {
  std::vector<bigint> out;
  std::istringstream in(text);
  std::string token;
  while (in >> token) out.push_back(parse_int_arg(token, flag));
  if (out.empty()) throw input_error(flag + ": expected at least one integer");
  return out;
}

// d < 0 is accepted at the CLI boundary and folded to |d|, with a note on
// stdout so scripts can see the normalization happened.
bigint normalize_target(const bigint& d) {
  if (d < 0) {
    bigint a = -d;
    std::cout << "# d normalized to " << a << '\n';
    return a;
  }
  return d;
}

json json_matrix(const imat& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

json json_vector(const std::vector<bigint>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

void print_matrix(const imat& m, bool as_json) {
  if (as_json)
    std::cout << json_matrix(m).dump() << '\n';
  else
    detdio::write_matrix(std::cout, m);
}

std::size_t minor_cap_from_env() {
  const char* raw = std::getenv("DETDIO_MINOR_CAP");
  if (raw == nullptr) return detdio::default_minor_cap;
  char* end = nullptr;
  unsigned long long cap = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0')
    throw input_error("DETDIO_MINOR_CAP: expected an unsigned integer");
  return static_cast<std::size_t>(cap);
}

void write_matrix_file(const std::string& path, const imat& m) {
  std::ofstream out(path);
  if (!out) throw input_error(path + ": cannot open file for writing");
  detdio::write_matrix(out, m);
}

int run_det(const std::string& file, bool as_json) {
  const bigint d = detdio::determinant(read_matrix_file(file));
  if (as_json)
    std::cout << json(d.str()).dump() << '\n';
  else
    std::cout << d << '\n';
  return exit_ok;
}

int run_ltf(const std::string& file, const std::string& emit_transform,
            const std::string& emit_inverse, bool trace, bool as_json) {
  const imat m = read_matrix_file(file);
  const auto dec = detdio::ltf_reduce(m);
  if (trace)
    for (const auto& op : dec.ops) std::cerr << op << '\n';
  if (!emit_transform.empty()) write_matrix_file(emit_transform, dec.transform.forward);
  if (!emit_inverse.empty()) write_matrix_file(emit_inverse, dec.transform.inverse);
  print_matrix(dec.ltf, as_json);
  return exit_ok;
}

int run_gd(const std::string& file, const std::string& method, bool as_json) {
  const imat m = read_matrix_file(file);
  if (method == "ltf" || method == "minors") {
    const bigint g = method == "ltf"
                         ? detdio::greatest_divisor_ltf(m)
                         : detdio::greatest_divisor_minors(m, minor_cap_from_env());
    if (as_json)
      std::cout << json(g.str()).dump() << '\n';
    else
      std::cout << g << '\n';
    return exit_ok;
  }
  // both: print the two values, fail on disagreement
  const bigint via_ltf = detdio::greatest_divisor_ltf(m);
  const bigint via_minors = detdio::greatest_divisor_minors(m, minor_cap_from_env());
  if (as_json)
    std::cout << json{{"ltf", via_ltf.str()}, {"minors", via_minors.str()}}.dump()
              << '\n';
  else
    std::cout << via_ltf << '\n' << via_minors << '\n';
  if (via_ltf != via_minors) {
    std::cerr << "greatest divisor mismatch between ltf and minors routes\n";
    return exit_negative;
  }
  return exit_ok;
}

detdio::stack_order parse_orientation(const std::string& name) {
  if (name == "top") return detdio::stack_order::known_on_top;
  if (name == "bottom") return detdio::stack_order::known_on_bottom;
  throw input_error("--orientation: expected 'top' or 'bottom'");
}

// An empty matrix file cannot carry a column count, so the no-known-rows
// equation needs --cols to fix the size of the unknown block.
imat read_known_block(const std::string& file, std::size_t cols) {
  imat known = read_matrix_file(file);
  if (cols == 0) return known;
  if (known.rows() == 0) return imat(0, cols);
  if (known.cols() != cols)
    throw input_error("--cols disagrees with the matrix in " + file);
  return known;
}

int run_solvable(const std::string& file, const bigint& d_raw, std::size_t cols) {
  const imat known = read_known_block(file, cols);
  const bigint d = normalize_target(d_raw);
  return detdio::is_solvable(detdio::iequation{known, d}) ? exit_ok : exit_negative;
}

int run_solve(const std::string& file, const bigint& d_raw, std::size_t cols,
              const std::string& orientation, bool as_json) {
  const imat known = read_known_block(file, cols);
  const bigint d = normalize_target(d_raw);
  const detdio::iequation inst{known, d, parse_orientation(orientation)};
  const imat x = detdio::solve(inst);
  const bigint det = detdio::determinant(detdio::assemble(inst, x));
  if (as_json) {
    std::cout << json{{"x", json_matrix(x)}, {"det", det.str()}}.dump() << '\n';
  } else {
    detdio::write_matrix(std::cout, x);
    std::cout << "# det = " << det << '\n';
  }
  return exit_ok;
}

int run_complete(const std::string& coeffs_raw, bool as_json) {
  const auto coeffs = parse_int_list(coeffs_raw, "-a");
  const auto completion = detdio::complete_to_form(coeffs);
  print_matrix(completion.block, as_json);
  return exit_ok;
}

int run_solve_linear(const std::string& coeffs_raw, const bigint& d, bool as_json) {
  const auto coeffs = parse_int_list(coeffs_raw, "-a");
  const auto x = detdio::solve_linear(coeffs, d);
  if (as_json) {
    std::cout << json_vector(x).dump() << '\n';
  } else {
    for (std::size_t i = 0; i < x.size(); ++i)
      std::cout << (i > 0 ? " " : "") << x[i];
    std::cout << '\n';
  }
  return exit_ok;
}

int report(bool pass, const std::string& reason) {
  if (pass) {
    std::cout << "PASS\n";
    return exit_ok;
  }
  if (!reason.empty()) std::cout << "# " << reason << '\n';
  std::cout << "FAIL\n";
  return exit_negative;
}

// Two shapes of verification:
//   verify M U [L]   -- U unimodular and M*U == L (L from file or stdin;
//                       with no L at all, M*U must be in LTF);
//   verify A -d D    -- |det([A; X])| == D with X from --solution or stdin.
int run_verify(const std::vector<std::string>& files,
               const std::optional<std::string>& d_raw,
               const std::string& solution_file, const std::string& orientation) {
  if (d_raw.has_value()) {
    if (files.size() != 1)
      throw input_error("verify with -d expects exactly one matrix file");
    const imat known = read_matrix_file(files[0]);
    const bigint d = normalize_target(parse_int_arg(*d_raw, "-d"));
    imat x;
    if (!solution_file.empty())
      x = read_matrix_file(solution_file);
    else if (!stdin_is_terminal())
      x = read_matrix_stdin();
    else
      throw input_error("verify: no solution given (use --solution or pipe one in)");
    const detdio::iequation inst{known, d, parse_orientation(orientation)};
    return report(detdio::verify_solution(inst, x),
                  "assembled determinant does not match the target");
  }

  if (files.size() < 2 || files.size() > 3)
    throw input_error("verify expects M and U files, plus an optional L file");
  const imat m = read_matrix_file(files[0]);
  const imat u = read_matrix_file(files[1]);
  if (!detdio::is_unimodular(u)) return report(false, "transform is not unimodular");
  const imat product = detdio::multiply(m, u);
  if (files.size() == 3)
    return report(product == read_matrix_file(files[2]),
                  "product does not equal the given matrix");
  if (!stdin_is_terminal()) {
    const imat l = read_matrix_stdin();
    if (l.rows() != 0)
      return report(product == l, "product does not equal the given matrix");
  }
  return report(detdio::is_ltf(product), "product is not in LTF");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact integer-matrix toolkit: LTF reduction, greatest divisors,\n"
               "and determinant Diophantine equations"};
  app.require_subcommand(1);

  std::string file, emit_transform, emit_inverse, method = "ltf";
  std::string orientation = "top", coeffs_raw, solution_file;
  std::string d_raw;
  std::vector<std::string> verify_files;
  std::size_t cols = 0;
  bool trace = false, as_json = false;

  auto* det = app.add_subcommand("det", "determinant of a square matrix");
  det->add_option("file", file)->required();
  det->add_flag("--json", as_json);

  auto* ltf = app.add_subcommand("ltf", "reduce to Lower Triangular Form");
  ltf->add_option("file", file)->required();
  ltf->add_option("--emit-transform", emit_transform, "write U to this file");
  ltf->add_option("--emit-inverse", emit_inverse, "write U^-1 to this file");
  ltf->add_flag("--trace", trace, "log one line per elementary op to stderr");
  ltf->add_flag("--json", as_json);

  auto* gd = app.add_subcommand("gd", "greatest divisor of a full-row-rank matrix");
  gd->add_option("file", file)->required();
  gd->add_option("--method", method)->check(CLI::IsMember({"ltf", "minors", "both"}));
  gd->add_flag("--json", as_json);

  auto* solvable = app.add_subcommand("solvable", "does det([A; X]) = +-d have a solution?");
  solvable->add_option("file", file)->required();
  solvable->add_option("-d", d_raw)->required();
  solvable->add_option("--cols", cols, "column count when the known block is empty");

  auto* solve = app.add_subcommand("solve", "construct X with det of the stack = d");
  solve->add_option("file", file)->required();
  solve->add_option("-d", d_raw)->required();
  solve->add_option("--cols", cols, "column count when the known block is empty");
  solve->add_option("--orientation", orientation)->check(CLI::IsMember({"top", "bottom"}));
  solve->add_flag("--json", as_json);

  auto* complete = app.add_subcommand("complete", "realize a linear form as a determinant");
  complete->add_option("-a", coeffs_raw, "coefficients, e.g. \"3 5\"")->required();
  complete->add_flag("--json", as_json);

  auto* solve_linear = app.add_subcommand("solve-linear", "solve a1*x1 + ... + an*xn = d");
  solve_linear->add_option("-a", coeffs_raw, "coefficients, e.g. \"6 10 15\"")->required();
  solve_linear->add_option("-d", d_raw)->required();
  solve_linear->add_flag("--json", as_json);

  auto* verify = app.add_subcommand("verify", "check M*U == L, or a solution against -d");
  verify->add_option("files", verify_files)->expected(1, 3);
  verify->add_option("-d", d_raw);
  verify->add_option("--solution", solution_file, "solution block X (default: stdin)");
  verify->add_option("--orientation", orientation)->check(CLI::IsMember({"top", "bottom"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n';
    return exit_usage;
  }

  try {
    if (det->parsed()) return run_det(file, as_json);
    if (ltf->parsed()) return run_ltf(file, emit_transform, emit_inverse, trace, as_json);
    if (gd->parsed()) return run_gd(file, method, as_json);
    if (solvable->parsed())
      return run_solvable(file, parse_int_arg(d_raw, "-d"), cols);
    if (solve->parsed())
      return run_solve(file, parse_int_arg(d_raw, "-d"), cols, orientation, as_json);
    if (complete->parsed()) return run_complete(coeffs_raw, as_json);
    if (solve_linear->parsed())
      return run_solve_linear(coeffs_raw, parse_int_arg(d_raw, "-d"), as_json);
    if (verify->parsed())
      return run_verify(verify_files,
                        verify->count("-d") > 0 ? std::optional<std::string>(d_raw)
                                                : std::nullopt,
                        solution_file, orientation);
  } catch (const detdio::unsolvable& e) {
    std::cerr << "unsolvable: " << e.what() << '\n';
    return exit_negative;
  } catch (const detdio::rank_deficient& e) {
    std::cerr << "rank-deficient: " << e.what() << '\n';
    return exit_negative;
  } catch (const detdio::parse_error& e) {
    std::cerr << e.what() << '\n';
    return exit_usage;
  } catch (const detdio::error& e) {
    std::cerr << e.what() << '\n';
    return exit_usage;
  } catch (const input_error& e) {
    std::cerr << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}
