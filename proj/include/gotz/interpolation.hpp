#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "gotz/bigint.hpp"
#include "gotz/error.hpp"

namespace gotz {

/// Coefficients c_0, c_1, ... of c_0 + c_1 x + c_2 x^2 + ..., trailing zeros trimmed.
using Polynomial = std::vector<Rational>;

/// The unique polynomial of degree < xs.size() through (xs[i], ys[i]), by
/// Newton divided differences in exact rational arithmetic.
inline Polynomial interpolate(std::span<const Rational> xs, std::span<const Rational> ys)
{
    if (xs.size() != ys.size() || xs.empty())
        throw domain_error("interpolate: need the same positive number of abscissas and values");
    const std::size_t m = xs.size();
    std::vector<Rational> dd(ys.begin(), ys.end());
    for (std::size_t level = 1; level < m; ++level)
        for (std::size_t i = m - 1; i >= level; --i) {
            const Rational span = xs[i] - xs[i - level];
            if (span == 0)
                throw domain_error("interpolate: repeated abscissa");
            dd[i] = (dd[i] - dd[i - 1]) / span;
        }
    // Horner-style expansion of the Newton form.
    Polynomial p{dd[m - 1]};
    for (std::size_t i = m - 1; i-- > 0;) {
        Polynomial q(p.size() + 1);
        for (std::size_t k = 0; k < p.size(); ++k) {
            q[k + 1] += p[k];
            q[k] -= p[k] * xs[i];
        }
        q[0] += dd[i];
        p = std::move(q);
    }
    while (p.size() > 1 && p.back() == 0)
        p.pop_back();
    return p;
}

inline Polynomial interpolate(std::span<const BigInt> xs, std::span<const BigInt> ys)
{
    std::vector<Rational> qx(xs.begin(), xs.end());
    std::vector<Rational> qy(ys.begin(), ys.end());
    return interpolate(std::span<const Rational>(qx), std::span<const Rational>(qy));
}

/// Degree of p; the zero polynomial reports 0.
inline std::size_t degree(const Polynomial& p) { return p.empty() ? 0 : p.size() - 1; }

inline Rational evaluate(const Polynomial& p, const Rational& x)
{
    Rational acc = 0;
    for (std::size_t i = p.size(); i-- > 0;)
        acc = acc * x + p[i];
    return acc;
}

/// Human-readable rendering, highest degree first, e.g. "1/2*t^2 + 5/2*t + 5".
inline std::string to_string(const Polynomial& p, const std::string& var = "t")
{
    std::string out;
    for (std::size_t i = p.size(); i-- > 0;) {
        if (p[i] == 0)
            continue;
        Rational c = p[i];
        if (!out.empty()) {
            out += c < 0 ? " - " : " + ";
            if (c < 0)
                c = -c;
        }
        else if (c < 0) {
            out += "-";
            c = -c;
        }
        const bool unit = c == 1 && i > 0;
        if (!unit)
            out += to_string(c);
        if (i > 0) {
            if (!unit)
                out += "*";
            out += var;
            if (i > 1)
                out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

} // namespace gotz
