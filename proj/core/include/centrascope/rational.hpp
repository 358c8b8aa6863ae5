#ifndef CENTRASCOPE_RATIONAL_HPP
#define CENTRASCOPE_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace centrascope {

// Exact arithmetic for the measures whose zero-variance test must be exact.
// Series partial sums involve factorials up to 40!, so fixed-width integers
// are not an option.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline double to_double(const Rational& r) {
    return r.convert_to<double>();
}

}  // namespace centrascope

#endif  // CENTRASCOPE_RATIONAL_HPP
