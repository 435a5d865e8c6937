#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ddyck {

/// Exact arbitrary-precision integer and rational types used throughout.
/// No floating point enters the counting side of the library.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

class IndexOutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// C(n, k) with the standard convention: 0 whenever k < 0, k > n, or n < 0.
/// The zero convention lets the closed sums in this library run without
/// edge-case branches.
inline Int binomial(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Int result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact at every step
  }
  return result;
}

inline Int factorial(long long n) {
  if (n < 0) throw IndexOutOfRange("factorial: negative argument");
  Int result = 1;
  for (long long i = 2; i <= n; ++i) result *= i;
  return result;
}

/// Converts an Int known to fit into long long; throws otherwise.
inline long long to_longlong(const Int& v) {
  return v.convert_to<long long>();
}

/// Extracts an integer from a rational that must be integral (counting
/// series have integer coefficients; a remainder means a logic error).
inline Int to_int_exact(const Rat& v) {
  if (boost::multiprecision::denominator(v) != 1)
    throw std::logic_error("expected an integral rational, got " + v.str());
  return boost::multiprecision::numerator(v);
}

inline std::string to_string(const Int& v) { return v.str(); }

}  // namespace ddyck
