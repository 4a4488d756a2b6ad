#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace labcount {

// All counting paths use exact arbitrary-precision integers; all fitting and
// polyhedral paths use exact rationals. No floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int int_pow(const Int& base, unsigned long exp) {
  Int r = 1;
  Int b = base;
  while (exp) {
    if (exp & 1) r *= b;
    b *= b;
    exp >>= 1;
  }
  return r;
}

// Serialized form is always "p/q" with q > 0 and gcd(p, q) = 1, e.g. "3/1", "-1/2".
std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);

inline Int rat_numer(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_denom(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool rat_is_integer(const Rat& r) { return rat_denom(r) == 1; }

}  // namespace labcount
