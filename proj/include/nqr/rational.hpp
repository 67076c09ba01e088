#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace nqr {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integral(const Rational& q) { return denominator(q) == 1; }

inline std::string to_string(const BigInt& v) { return v.str(); }

// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace nqr
