#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace hsf {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Canonical exact rendering: "p" when the denominator is 1, "p/q" otherwise.
inline std::string rational_str(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace hsf
