#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "nfcert/error.hpp"

namespace nfcert {

using BigInt = boost::multiprecision::cpp_int;
// Arbitrary-precision fraction, always stored in lowest terms with a positive
// denominator (cpp_rational maintains that canonical form itself).
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline BigInt num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt den(const Rational& r) { return boost::multiprecision::denominator(r); }

// Renders as "p" or "p/q", lowest terms.
inline std::string to_string(const Rational& r) {
  if (den(r) == 1) return num(r).str();
  return num(r).str() + "/" + den(r).str();
}

// Accepts "p", "p/q", and plain decimal strings ("-0.25" -> -1/4).
Rational rational_from_string(const std::string& s);

}  // namespace nfcert
