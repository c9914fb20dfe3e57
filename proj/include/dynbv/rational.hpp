#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace dynbv {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(long long num, long long den = 1) {
    return Rational(BigInt(num), BigInt(den));
}

inline std::string to_string(const Rational& q) {
    return q.str();
}

}  // namespace dynbv
