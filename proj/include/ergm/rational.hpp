#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace ergm {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(const BigInt& num, const BigInt& den) { return Rational(num, den); }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline std::string to_string(const Rational& r) { return r.str(); }

inline BigInt ipow(std::uint64_t base, unsigned exp)
{
    BigInt out = 1;
    for (unsigned i = 0; i < exp; ++i) out *= base;
    return out;
}

}  // namespace ergm
