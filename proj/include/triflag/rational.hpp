// rational.hpp - exact arithmetic types shared by the whole library.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <stdexcept>
#include <string>

namespace triflag {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& r) {
    return boost::multiprecision::denominator(r) == 1;
}

// Requires is_integer(r).
inline Int to_int(const Rational& r) {
    if (!is_integer(r))
        throw std::domain_error("rational is not an integer: " + r.str());
    return boost::multiprecision::numerator(r);
}

inline bool fits_long(const Int& v) {
    return v >= std::numeric_limits<long>::min() && v <= std::numeric_limits<long>::max();
}

inline long to_long(const Rational& r) {
    Int v = to_int(r);
    if (!fits_long(v))
        throw std::domain_error("integer does not fit in long: " + v.str());
    return static_cast<long>(v);
}

// (k-1)! for k >= 1, i.e. the gamma function on positive integers.
inline Int gamma_int(const Int& k) {
    if (k < 1)
        throw std::domain_error("gamma_int requires a positive integer, got " + k.str());
    Int acc = 1;
    for (Int i = 2; i < k; ++i)
        acc *= i;
    return acc;
}

inline std::string rat_str(const Rational& r) {
    return r.str();
}

}  // namespace triflag
