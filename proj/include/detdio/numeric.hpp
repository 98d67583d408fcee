#pragma once

#include <sstream>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace detdio {

namespace detail {

template <typename T>
std::string to_dec(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace detail

// Default arbitrary-precision integer. Every public alias in the library
// (imat, iop, ...) instantiates on this type; all templates accept any
// signed integer-like type with exact +,-,*,/,% semantics. Expression
// templates are disabled so arithmetic yields plain values, as the
// generic code expects.
using bigint =
    boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                  boost::multiprecision::et_off>;

template <typename T>
T abs_value(T v) {
  return v < 0 ? T(-v) : v;
}

// gcd with the conventions the rest of the library relies on:
// non-negative result, gcd(0, x) == |x|, gcd(0, 0) == 0.
template <typename T>
T gcd_value(T a, T b) {
  a = abs_value(std::move(a));
  b = abs_value(std::move(b));
  while (b != 0) {
    a %= b;
    using std::swap;
    swap(a, b);
  }
  return a;
}

// Euclidean division: num == q*den + r with 0 <= r < |den|.
// Plain operator/ truncates toward zero, which yields negative remainders;
// the column-reduction algorithm needs the non-negative convention.
template <typename T>
std::pair<T, T> euclid_divmod(const T& num, const T& den) {
  T q = num / den;
  T r = num - q * den;
  if (r < 0) {
    if (den > 0) {
      q -= 1;
      r += den;
    } else {
      q += 1;
      r -= den;
    }
  }
  return {std::move(q), std::move(r)};
}

}  // namespace detdio
