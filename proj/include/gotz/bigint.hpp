#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "gotz/error.hpp"

namespace gotz {

/// Exact integer used for exponents, counts and costs. Exponents of path
/// costs grow like iterated binomials and leave 64-bit range quickly.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

inline std::string to_string(const BigInt& v) { return v.str(); }

inline std::string to_string(const Rational& q)
{
    if (boost::multiprecision::denominator(q) == 1)
        return boost::multiprecision::numerator(q).str();
    return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

/// Parses a nonnegative decimal integer; no sign, no whitespace.
inline BigInt parse_decimal(std::string_view text)
{
    if (text.empty())
        throw parse_error("empty integer");
    BigInt v = 0;
    for (char c : text) {
        if (c < '0' || c > '9')
            throw parse_error("invalid digit in integer '" + std::string(text) + "'");
        v = v * 10 + (c - '0');
    }
    return v;
}

/// Narrowing conversion for values that index memory or loops.
inline std::uint64_t to_u64(const BigInt& v, std::string_view what)
{
    if (v < 0 || v > std::numeric_limits<std::uint64_t>::max())
        throw cap_exceeded(std::string(what) + " does not fit in 64 bits: " + v.str());
    return static_cast<std::uint64_t>(v);
}

} // namespace gotz
