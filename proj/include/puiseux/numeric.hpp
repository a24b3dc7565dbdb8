#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace puiseux {

// Exact arithmetic everywhere: exponent numerators, minors and invariant
// factors can outgrow any fixed-width type.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int int_pow(const Int& base, unsigned exp) {
  Int result = 1;
  for (unsigned i = 0; i < exp; ++i) result *= base;
  return result;
}

/// Nonnegative gcd; gcd(0, 0) = 0.
inline Int int_gcd(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(a, b);
}

inline Int int_lcm(const Int& a, const Int& b) {
  return boost::multiprecision::lcm(a, b);
}

std::string to_string(const Int& v);

/// "p/q" for non-integers, plain "p" otherwise.
std::string to_string(const Rat& v);

}  // namespace puiseux
