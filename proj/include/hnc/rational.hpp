#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace hnc {

using Int = boost::multiprecision::cpp_int;

// Exact reduced fraction with positive denominator; zero is 0/1.
// boost::multiprecision::cpp_rational keeps this canonical form after every
// arithmetic step, so equality checks are structural.
using Rational = boost::multiprecision::cpp_rational;

// cpp_rational's two-argument constructor rejects negative denominators,
// so sign normalization happens here.
inline Rational make_rational(Int num, Int den) {
  if (den == 0) throw std::domain_error("make_rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(std::move(num), std::move(den));
}

// Canonical "num/den" rendering, denominator always shown ("0/1", "4/1").
inline std::string to_fraction_string(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace hnc
