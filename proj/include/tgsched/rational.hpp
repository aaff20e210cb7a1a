// Exact rational time values. Schedule conditions are equalities and
// inequalities that must be decided exactly, so no floating point here.
#pragma once

#include <boost/rational.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace tgsched {

using Rational = boost::rational<long long>;

inline double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

inline bool is_integer(const Rational& r) { return r.denominator() == 1; }

// Every finite double is a dyadic rational, so this conversion is exact.
inline Rational rational_from_double(double v) {
    if (!std::isfinite(v))
        throw std::invalid_argument("non-finite time value");
    if (v == std::floor(v) && std::abs(v) < 9.0e15)
        return Rational(static_cast<long long>(v));
    long long den = 1;
    for (int i = 0; i < 62 && v != std::floor(v); ++i) {
        v *= 2;
        den <<= 1;
    }
    if (v != std::floor(v) || std::abs(v) >= 9.0e18)
        throw std::invalid_argument("time value not representable exactly");
    return Rational(static_cast<long long>(v), den);
}

inline std::string to_string(const Rational& r) {
    if (is_integer(r))
        return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

} // namespace tgsched
