#pragma once

#include <cstdint>

#include "gotz/bigint.hpp"
#include "gotz/error.hpp"

namespace gotz {

/// C(a, k) for a >= 0; zero when a < k.
inline BigInt binom(const BigInt& a, std::uint64_t k)
{
    if (a < 0)
        throw domain_error("binom: negative upper argument " + a.str());
    if (a < k)
        return 0;
    BigInt r = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        // r == C(a, i) here, so the division is exact.
        r *= a - i;
        r /= i + 1;
    }
    return r;
}

/// C(a, b) over arbitrary-precision arguments. Negative arguments are
/// rejected; the signed extension of the binomial is not supported.
inline BigInt binom(const BigInt& a, const BigInt& b)
{
    if (a < 0 || b < 0)
        throw domain_error("binom: negative argument (" + a.str() + ", " + b.str() + ")");
    if (a < b)
        return 0;
    const BigInt k = b < a - b ? b : a - b;
    constexpr std::uint64_t max_factors = 50'000'000;
    if (k > max_factors)
        throw cap_exceeded("binom: lower argument too large to expand: " + k.str());
    return binom(a, static_cast<std::uint64_t>(k));
}

} // namespace gotz
