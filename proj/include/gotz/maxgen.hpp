#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "gotz/bigint.hpp"
#include "gotz/binomial.hpp"
#include "gotz/combinatorics.hpp"
#include "gotz/error.hpp"
#include "gotz/interpolation.hpp"
#include "gotz/monomial.hpp"

namespace gotz {

/// maxgen(B) = product of lambda(u) over u in B; maxgen of the empty set is 1.
inline Monomial maxgen_of_set(const MonomialSet& set, std::size_t n)
{
    Monomial r(n);
    for (const auto& u : set) {
        if (u.n() != n)
            throw domain_error("maxgen: element " + format(u) + " lives in a different ring");
        if (u.is_unit())
            throw domain_error("maxgen: the unit monomial has no last variable");
        r.add_exponent(max_index(u), 1);
    }
    return r;
}

/// gaps_n(u) = L(u) \ B(u), by enumeration.
inline MonomialSet gaps(const Monomial& u, const Limits& limits = {})
{
    const MonomialSet lex = lexsegment(u, limits);
    const MonomialSet borel = borel_enumerate(u, limits);
    std::vector<Monomial> out;
    for (const auto& z : lex)
        if (!borel.contains(z))
            out.push_back(z);
    return MonomialSet(std::move(out));
}

/// mg_n(u) = maxgen(gaps_n(u)) by explicit enumeration.
inline Monomial mg_oracle(const Monomial& u, const Limits& limits = {}) { return maxgen_of_set(gaps(u, limits), u.n()); }

/// mg_n(u) from the closed product formula over the sorted index list
/// i_1 <= ... <= i_d of u:
///
///   prod_{k=1}^{d-1} ( prod_{j > i_{k+1}} x_j^{C(d-k-2+j-i_{k+1}, d-k-1)} )^{|B(x_{i_1}...x_{i_k})| - 1}
///
/// Monomials of degree <= 1 give the empty product 1. The cost is linear in
/// deg(u); use mg_shifted for large powers of x_n.
inline Monomial mg_closed(const Monomial& u)
{
    const std::size_t n = u.n();
    const auto idx = sorted_indices(u);
    const std::size_t d = idx.size();
    Monomial r(n);
    if (d < 2)
        return r;
    const auto sizes = borel_prefix_sizes(idx, n);
    for (std::size_t k = 1; k < d; ++k) {
        const BigInt mult = sizes[k] - 1;
        if (mult == 0)
            continue;
        const std::size_t next = idx[k];  // i_{k+1}
        for (std::size_t j = next + 1; j <= n; ++j) {
            // C(d-k-2+j-next, d-k-1) == C(d-k-2+j-next, j-next-1)
            const BigInt top = BigInt(d - k - 1) + (j - next - 1);
            r.add_exponent(j, mult * binom(top, static_cast<std::uint64_t>(j - next - 1)));
        }
    }
    return r;
}

/// mg_n(u x_n^t) = sigma_n^t(mg_n(u)).
inline Monomial mg_shifted(const Monomial& u, const BigInt& t) { return sigma_pow(mg_closed(u), t); }

/// mg_n(u) for any u, peeling off the x_n-power first so that huge
/// exponents of x_n cost nothing.
inline Monomial mg(const Monomial& u)
{
    auto [u0, t] = split_last(u);
    return mg_shifted(u0, t);
}

/// f(t) = deg_{x_n} mg_n(u_0 x_n^t) for u_0 in S_{n-1}, written x_{i_1}...x_{i_r}:
///
///   f(t) = sum_{k=1}^{r-1} C(t+r-k-2+n-i_{k+1}, n-1-i_{k+1}) (|B(x_{i_1}...x_{i_k})| - 1)
inline BigInt f_poly_eval(const Monomial& u0, std::size_t n, const BigInt& t)
{
    if (u0.n() + 1 != n)
        throw domain_error("f_poly_eval: u0 must live in " + std::to_string(n - 1) + " variables");
    if (t < 0)
        throw domain_error("f_poly_eval: negative t");
    const auto idx = sorted_indices(u0);
    const std::size_t r = idx.size();
    BigInt f = 0;
    if (r < 2)
        return f;
    const auto sizes = borel_prefix_sizes(idx, n);
    for (std::size_t k = 1; k < r; ++k) {
        const BigInt mult = sizes[k] - 1;
        if (mult == 0)
            continue;
        const std::size_t next = idx[k];
        const BigInt top = t + (r - k - 1) + (n - next) - 1;
        f += mult * binom(top, static_cast<std::uint64_t>(n - 1 - next));
    }
    return f;
}

/// mg_n(u_0 x_n^t) split as w(t) x_n^{f(t)}, w(t) in S_{n-1}.
struct MgDecomposition {
    Monomial base;   // w(t), ambient n - 1
    BigInt xn_exp;   // f(t)
    std::size_t n;
    BigInt t;

    Monomial reconstruct() const
    {
        Monomial r = embed(base, n);
        r.set_exponent(n, xn_exp);
        return r;
    }
};

/// Computes w(t) by truncating mg_shifted and f(t) from its own formula, and
/// fails with consistency_error if the two disagree on the x_n exponent.
inline MgDecomposition target_decompose(const Monomial& u0, std::size_t n, const BigInt& t)
{
    if (n < 2 || u0.n() + 1 != n)
        throw domain_error("target_decompose: u0 must live in n - 1 variables");
    const Monomial target = mg_shifted(embed(u0, n), t);
    MgDecomposition dec{truncate(target, n - 1), f_poly_eval(u0, n, t), n, t};
    if (dec.xn_exp != target.exponent(n))
        throw consistency_error("target_decompose: f(t) = " + dec.xn_exp.str() + " but mg has x" + std::to_string(n) +
                                "^" + target.exponent(n).str() + " for u0 = " + format(u0));
    return dec;
}

/// f(t) as an explicit polynomial of degree <= n - 3, reconstructed from its
/// values at t = 0, ..., n - 3.
inline Polynomial f_polynomial(const Monomial& u0, std::size_t n)
{
    if (n < 3)
        throw domain_error("f_polynomial: needs n >= 3");
    const std::size_t points = n - 2;
    std::vector<BigInt> ts, fs;
    for (std::size_t t = 0; t < points; ++t) {
        ts.emplace_back(t);
        fs.push_back(f_poly_eval(u0, n, t));
    }
    return interpolate(std::span<const BigInt>(ts), std::span<const BigInt>(fs));
}

} // namespace gotz
