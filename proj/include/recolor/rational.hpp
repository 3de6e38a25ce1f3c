#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace recolor {

// Exact rational arithmetic for densities and discharging.  The theorem
// thresholds (17/5, 22/9) and all charge transfers must compare exactly, so
// no floating point is used anywhere near them.
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Rat make_rat(long long num, long long den) { return Rat(num, den); }

// Renders "p/q", or just "p" when q == 1.
inline std::string rat_to_string(const Rat& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += "/";
    s += denominator(r).str();
  }
  return s;
}

}  // namespace recolor
