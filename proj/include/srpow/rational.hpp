#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace srpow {

// Exact arithmetic everywhere: arbitrary-precision integers and reduced
// fractions with positive denominator. boost keeps the canonical form;
// .str() already emits the wire format used by the CLI ("3/2", "2", "-7/3").
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& q) { return q.str(); }
inline std::string to_string(const BigInt& z) { return z.str(); }

}  // namespace srpow
