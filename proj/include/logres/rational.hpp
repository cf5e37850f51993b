#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace logres {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational rat(long n, long d = 1) { return Rational(n, d); }

// Renders "p" or "p/q"; never emits floating point.
inline std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

} // namespace logres
