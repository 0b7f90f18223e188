#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gotz/bigint.hpp"
#include "gotz/binomial.hpp"
#include "gotz/error.hpp"
#include "gotz/monomial.hpp"

namespace gotz {

/// Size limits for anything that materializes sets of monomials.
struct Limits {
    std::uint64_t enumeration_cap = 5'000'000;
};

/// A finite set of monomials of one ring and one degree, kept in strictly
/// descending lex order.
class MonomialSet {
public:
    MonomialSet() = default;

    explicit MonomialSet(std::vector<Monomial> elements) : elements_(std::move(elements))
    {
        for (std::size_t i = 1; i < elements_.size(); ++i)
            if (lex_cmp(elements_[i - 1], elements_[i]) != std::strong_ordering::greater)
                throw domain_error("MonomialSet elements must be strictly lex-descending");
    }

    std::span<const Monomial> elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }
    bool empty() const noexcept { return elements_.empty(); }
    auto begin() const noexcept { return elements_.begin(); }
    auto end() const noexcept { return elements_.end(); }
    const Monomial& operator[](std::size_t i) const { return elements_[i]; }

    bool contains(const Monomial& u) const
    {
        return std::binary_search(elements_.begin(), elements_.end(), u, [](const Monomial& a, const Monomial& b) {
            return lex_cmp(a, b) == std::strong_ordering::greater;
        });
    }

    friend bool operator==(const MonomialSet&, const MonomialSet&) = default;

private:
    std::vector<Monomial> elements_;
};

namespace detail {

inline void check_cap(const BigInt& count, const Limits& limits, const char* what)
{
    if (count > limits.enumeration_cap)
        throw cap_exceeded(std::string(what) + ": " + count.str() + " elements exceed the enumeration cap of " +
                           std::to_string(limits.enumeration_cap));
}

// Visits S_{n,d} in lex-descending order until the visitor returns false.
inline bool visit_desc(std::vector<BigInt>& exps, std::size_t i, const BigInt& left,
                       const std::function<bool(const Monomial&)>& visit)
{
    if (i + 1 == exps.size()) {
        exps[i] = left;
        return visit(Monomial(exps));
    }
    for (BigInt e = left; e >= 0; --e) {
        exps[i] = e;
        for (std::size_t j = i + 1; j < exps.size(); ++j)
            exps[j] = 0;
        if (!visit_desc(exps, i + 1, left - e, visit))
            return false;
    }
    return true;
}

inline void for_each_desc(std::size_t n, const BigInt& d, const std::function<bool(const Monomial&)>& visit)
{
    std::vector<BigInt> exps(n);
    visit_desc(exps, 0, d, visit);
}

} // namespace detail

/// All of S_{n,d}, lex-descending.
inline MonomialSet enumerate_monomials(std::size_t n, const BigInt& d, const Limits& limits = {})
{
    if (n == 0)
        throw domain_error("enumerate_monomials: n must be positive");
    if (d < 0)
        throw domain_error("enumerate_monomials: negative degree");
    detail::check_cap(binom(d + n - 1, n - 1), limits, "S_{n,d}");
    std::vector<Monomial> out;
    detail::for_each_desc(n, d, [&](const Monomial& m) {
        out.push_back(m);
        return true;
    });
    return MonomialSet(std::move(out));
}

/// B(u) by explicit closure of {u} under v -> v x_i / x_j (x_j | v, i <= j).
/// This is the reference construction; borel_size is the fast count.
inline MonomialSet borel_enumerate(const Monomial& u, const Limits& limits = {})
{
    auto desc = [](const Monomial& a, const Monomial& b) { return lex_cmp(a, b) == std::strong_ordering::greater; };
    std::set<Monomial, decltype(desc)> seen(desc);
    std::vector<Monomial> todo{u};
    seen.insert(u);
    const std::size_t n = u.n();
    while (!todo.empty()) {
        Monomial v = std::move(todo.back());
        todo.pop_back();
        for (std::size_t j = 2; j <= n; ++j) {
            if (v.exponent(j) == 0)
                continue;
            for (std::size_t i = 1; i < j; ++i) {
                Monomial w = v;
                w.add_exponent(j, -1);
                w.add_exponent(i, 1);
                if (seen.insert(w).second) {
                    detail::check_cap(seen.size(), limits, "B(u)");
                    todo.push_back(std::move(w));
                }
            }
        }
    }
    return MonomialSet(std::vector<Monomial>(seen.begin(), seen.end()));
}

/// |B(u)| as the number of nondecreasing sequences j_1 <= ... <= j_d with
/// j_k <= i_k, where u = x_{i_1} ... x_{i_d} sorted. Runs of a repeated
/// variable are folded in closed form, so exponents may be huge.
///
/// This characterization of B(u) is standard but external to the threshold
/// algorithm; the test suite certifies it against borel_enumerate.
inline BigInt borel_size(const Monomial& u)
{
    const std::size_t n = u.n();
    // dp[j]: sequences processed so far whose last value is j + 1.
    std::vector<BigInt> dp(n);
    dp[0] = 1;
    for (std::size_t i = 1; i <= n; ++i) {
        const BigInt& e = u.exponent(i);
        if (e == 0)
            continue;
        // e-fold prefix sum restricted to values <= i.
        std::vector<BigInt> c(i);  // c[s] = C(e-1+s, s)
        c[0] = 1;
        for (std::size_t s = 1; s < i; ++s)
            c[s] = c[s - 1] * (e - 1 + s) / s;
        std::vector<BigInt> next(n);
        for (std::size_t j = 0; j < i; ++j)
            for (std::size_t k = 0; k <= j; ++k)
                if (dp[k] != 0)
                    next[j] += dp[k] * c[j - k];
        dp = std::move(next);
    }
    BigInt total = 0;
    for (const auto& v : dp)
        total += v;
    return total;
}

/// |B(x_{i_1} ... x_{i_k})| for k = 0, ..., d, given sorted indices.
inline std::vector<BigInt> borel_prefix_sizes(std::span<const std::size_t> indices, std::size_t n)
{
    std::vector<BigInt> dp(n);
    dp[0] = 1;
    std::vector<BigInt> sizes;
    sizes.reserve(indices.size() + 1);
    sizes.emplace_back(1);
    for (std::size_t idx : indices) {
        BigInt run = 0;
        BigInt total = 0;
        for (std::size_t j = 0; j < n; ++j) {
            run += dp[j];
            dp[j] = j < idx ? run : BigInt(0);
            total += dp[j];
        }
        sizes.push_back(std::move(total));
    }
    return sizes;
}

/// |L(u)|: the number of monomials of S_{n,d} that are lex >= u.
inline BigInt lex_rank(const Monomial& u)
{
    const std::size_t n = u.n();
    BigInt remaining = deg(u);
    BigInt rank = 1;
    for (std::size_t i = 1; i < n; ++i) {
        const BigInt& a = u.exponent(i);
        // Same prefix, strictly larger exponent at x_i.
        if (remaining > a)
            rank += binom(remaining - a - 1 + (n - i), static_cast<std::uint64_t>(n - i));
        remaining -= a;
    }
    return rank;
}

/// L(u) = {z in S_{n,d} : z >= u}, lex-descending.
inline MonomialSet lexsegment(const Monomial& u, const Limits& limits = {})
{
    detail::check_cap(lex_rank(u), limits, "L(u)");
    std::vector<Monomial> out;
    detail::for_each_desc(u.n(), deg(u), [&](const Monomial& z) {
        out.push_back(z);
        return !(z == u);
    });
    return MonomialSet(std::move(out));
}

/// L*(v, u) = {z : v > z >= u} = L(u) \ L(v), lex-descending.
inline MonomialSet lexinterval(const Monomial& v, const Monomial& u, const Limits& limits = {})
{
    if (lex_cmp(v, u) == std::strong_ordering::less)
        throw domain_error("lexinterval: upper end " + format(v) + " is below " + format(u));
    detail::check_cap(lex_rank(u), limits, "L(u)");
    std::vector<Monomial> out;
    bool inside = false;
    detail::for_each_desc(u.n(), deg(u), [&](const Monomial& z) {
        if (inside)
            out.push_back(z);
        else if (z == v)
            inside = true;
        if (z == u) {
            if (out.empty() || !(out.back() == u))
                out.clear();  // v == u
            return false;
        }
        return true;
    });
    return MonomialSet(std::move(out));
}

} // namespace gotz
