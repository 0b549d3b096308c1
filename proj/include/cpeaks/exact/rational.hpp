#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "cpeaks/errors.hpp"

namespace cpeaks {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integral(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

// Converts q to an integer, throwing if q has a nontrivial denominator.
// `what` names the quantity in the error message.
inline Integer to_integer(const Rational& q, std::string_view what = "value") {
  if (!is_integral(q)) {
    throw ArithmeticError(std::string(what) + " is not integral: " + q.str());
  }
  return boost::multiprecision::numerator(q);
}

// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& q) { return q.str(); }
inline std::string to_string(const Integer& z) { return z.str(); }

inline Rational pow(const Rational& base, unsigned exponent) {
  Rational result{1};
  Rational b = base;
  while (exponent != 0) {
    if (exponent & 1u) result *= b;
    exponent >>= 1;
    if (exponent != 0) b *= b;
  }
  return result;
}

inline Integer pow(const Integer& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

}  // namespace cpeaks
