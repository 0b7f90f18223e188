#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gotz/bigint.hpp"
#include "gotz/binomial.hpp"
#include "gotz/error.hpp"

namespace gotz {

/// A monomial x_1^{a_1} ... x_n^{a_n} of S_n. The ambient variable count n
/// is part of the value; binary operations require equal n.
///
/// Variables are indexed from 1 as in x_1, ..., x_n.
class Monomial {
public:
    /// The unit monomial of S_n.
    explicit Monomial(std::size_t n) : exps_(n)
    {
        if (n == 0)
            throw domain_error("monomial needs at least one variable");
    }

    explicit Monomial(std::vector<BigInt> exps) : exps_(std::move(exps))
    {
        if (exps_.empty())
            throw domain_error("monomial needs at least one variable");
        for (const auto& e : exps_)
            if (e < 0)
                throw domain_error("negative exponent " + e.str());
    }

    /// x_i^e in S_n.
    static Monomial variable(std::size_t n, std::size_t i, BigInt e = 1)
    {
        Monomial m(n);
        m.set_exponent(i, std::move(e));
        return m;
    }

    std::size_t n() const noexcept { return exps_.size(); }

    const BigInt& exponent(std::size_t i) const { return exps_[check(i)]; }

    void set_exponent(std::size_t i, BigInt e)
    {
        if (e < 0)
            throw domain_error("negative exponent " + e.str());
        exps_[check(i)] = std::move(e);
    }

    /// Adds delta (possibly negative) to the exponent of x_i.
    void add_exponent(std::size_t i, const BigInt& delta)
    {
        auto& e = exps_[check(i)];
        if (delta < 0 && e < -delta)
            throw domain_error("exponent of x" + std::to_string(i) + " would become negative");
        e += delta;
    }

    /// Exponents with 0-based positions.
    std::span<const BigInt> exponents() const noexcept { return exps_; }

    bool is_unit() const
    {
        for (const auto& e : exps_)
            if (e != 0)
                return false;
        return true;
    }

    Monomial& operator*=(const Monomial& other)
    {
        require_same_n(other, "mul");
        for (std::size_t i = 0; i < exps_.size(); ++i)
            exps_[i] += other.exps_[i];
        return *this;
    }

    friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }

    friend bool operator==(const Monomial&, const Monomial&) = default;

    void require_same_n(const Monomial& other, std::string_view op) const
    {
        if (n() != other.n())
            throw domain_error(std::string(op) + ": ambient variable counts differ (" + std::to_string(n()) +
                               " vs " + std::to_string(other.n()) + ")");
    }

private:
    std::size_t check(std::size_t i) const
    {
        if (i < 1 || i > exps_.size())
            throw domain_error("variable index " + std::to_string(i) + " outside [1, " +
                               std::to_string(exps_.size()) + "]");
        return i - 1;
    }

    std::vector<BigInt> exps_;
};

inline BigInt deg(const Monomial& u)
{
    BigInt d = 0;
    for (const auto& e : u.exponents())
        d += e;
    return d;
}

inline const BigInt& deg_in(const Monomial& u, std::size_t i) { return u.exponent(i); }

/// Largest k with x_k dividing u.
inline std::size_t max_index(const Monomial& u)
{
    const auto e = u.exponents();
    for (std::size_t k = e.size(); k > 0; --k)
        if (e[k - 1] != 0)
            return k;
    throw domain_error("the unit monomial has no max");
}

/// x_{max(u)}.
inline Monomial last_variable(const Monomial& u) { return Monomial::variable(u.n(), max_index(u)); }

inline Monomial mul(const Monomial& u, const Monomial& v) { return u * v; }

/// u / v; fails unless v divides u.
inline Monomial div(const Monomial& u, const Monomial& v)
{
    u.require_same_n(v, "div");
    std::vector<BigInt> r(u.exponents().begin(), u.exponents().end());
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (r[i] < v.exponents()[i])
            throw domain_error("div: x" + std::to_string(i + 1) + " exponent would go negative");
        r[i] -= v.exponents()[i];
    }
    return Monomial(std::move(r));
}

/// Lexicographic comparison with x_1 > x_2 > ... > x_n. Only monomials of
/// the same degree in the same ring are comparable.
inline std::strong_ordering lex_cmp(const Monomial& u, const Monomial& v)
{
    u.require_same_n(v, "lex_cmp");
    if (deg(u) != deg(v))
        throw domain_error("lex_cmp: monomials of different degree are not compared");
    const auto a = u.exponents();
    const auto b = v.exponents();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i])
            return a[i] > b[i] ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
}

/// The immediate lex successor of u in S_{n,d}:
/// pred(u_0 x_m^a) = u_0 x_{m-1} x_n^{a-1} with m = max(u).
inline Monomial pred(const Monomial& u)
{
    const std::size_t m = max_index(u);
    if (m == 1)
        throw domain_error("pred: x1^d is the lex maximum and has no predecessor");
    Monomial r = u;
    const BigInt a = u.exponent(m);
    r.set_exponent(m, 0);
    r.add_exponent(m - 1, 1);
    r.add_exponent(u.n(), a - 1);
    return r;
}

/// Projection S_n -> S_i dropping x_{i+1}, ..., x_n.
inline Monomial truncate(const Monomial& u, std::size_t i)
{
    if (i < 1 || i > u.n())
        throw domain_error("truncate: index " + std::to_string(i) + " outside [1, " + std::to_string(u.n()) + "]");
    const auto e = u.exponents();
    return Monomial(std::vector<BigInt>(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(i)));
}

/// Re-embeds u into S_n for n >= u.n(); new variables get exponent 0.
inline Monomial embed(const Monomial& u, std::size_t n)
{
    if (n < u.n())
        throw domain_error("embed: target ring is smaller than the source ring");
    std::vector<BigInt> r(u.exponents().begin(), u.exponents().end());
    r.resize(n);
    return Monomial(std::move(r));
}

/// Splits u = u_0 x_n^t with x_n not dividing u_0; u_0 keeps ambient n.
inline std::pair<Monomial, BigInt> split_last(const Monomial& u)
{
    Monomial u0 = u;
    BigInt t = u.exponent(u.n());
    u0.set_exponent(u.n(), 0);
    return {std::move(u0), std::move(t)};
}

/// Prefix-sum map x_1^{a_1} x_2^{a_1+a_2} ... x_n^{a_1+...+a_n}.
inline Monomial sigma(const Monomial& u)
{
    std::vector<BigInt> r(u.exponents().begin(), u.exponents().end());
    for (std::size_t i = 1; i < r.size(); ++i)
        r[i] += r[i - 1];
    return Monomial(std::move(r));
}

/// t-fold iterate of sigma in closed form:
/// exponent of x_i is sum_{j<=i} a_j C(t-1+i-j, i-j).
inline Monomial sigma_pow(const Monomial& u, const BigInt& t)
{
    if (t < 0)
        throw domain_error("sigma_pow: negative iteration count");
    if (t == 0)
        return u;
    const std::size_t n = u.n();
    std::vector<BigInt> c(n);  // c[s] = C(t-1+s, s)
    c[0] = 1;
    for (std::size_t s = 1; s < n; ++s)
        c[s] = c[s - 1] * (t - 1 + s) / s;
    const auto a = u.exponents();
    std::vector<BigInt> r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j)
            if (a[j] != 0)
                r[i] += a[j] * c[i - j];
    return Monomial(std::move(r));
}

/// Canonical text: ascending indices, "^e" only for e >= 2, "*" separators,
/// "1" for the unit.
inline std::string format(const Monomial& u)
{
    std::string out;
    const auto e = u.exponents();
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += 'x';
        out += std::to_string(i + 1);
        if (e[i] != 1) {
            out += '^';
            out += e[i].str();
        }
    }
    return out.empty() ? "1" : out;
}

/// Parses `monomial := "1" | term ("*" term)*`, `term := "x" INDEX ("^" EXP)?`
/// with INDEX in [1, n] and EXP >= 1. Repeated variables add up. Spaces and
/// tabs are accepted around "*" only.
inline Monomial parse(std::string_view text, std::size_t n)
{
    if (n == 0)
        throw parse_error("ambient variable count must be positive");
    Monomial u(n);
    if (text == "1")
        return u;
    std::size_t pos = 0;
    auto fail = [&](const std::string& what) -> parse_error {
        return parse_error("cannot parse monomial '" + std::string(text) + "' at offset " + std::to_string(pos) +
                           ": " + what);
    };
    auto digits = [&]() {
        const std::size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9')
            ++pos;
        if (pos == start)
            throw fail("expected a decimal number");
        return parse_decimal(text.substr(start, pos - start));
    };
    auto skip_blanks = [&]() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t'))
            ++pos;
    };
    while (true) {
        if (pos >= text.size() || text[pos] != 'x')
            throw fail("expected 'x'");
        ++pos;
        const BigInt index = digits();
        if (index < 1 || index > n)
            throw fail("variable index " + index.str() + " outside [1, " + std::to_string(n) + "]");
        BigInt e = 1;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            e = digits();
            if (e == 0)
                throw fail("explicit zero exponent");
        }
        u.add_exponent(static_cast<std::size_t>(index), e);
        const std::size_t before = pos;
        skip_blanks();
        if (pos == text.size()) {
            if (pos != before)
                throw fail("trailing whitespace");
            break;
        }
        if (text[pos] != '*')
            throw fail("expected '*'");
        ++pos;
        skip_blanks();
    }
    return u;
}

/// Indices i_1 <= ... <= i_d with u = x_{i_1} ... x_{i_d}. Only for
/// monomials whose degree is small enough to list.
inline std::vector<std::size_t> sorted_indices(const Monomial& u)
{
    const BigInt d = deg(u);
    constexpr std::uint64_t max_listed = 10'000'000;
    if (d > max_listed)
        throw cap_exceeded("degree " + d.str() + " too large to list variable indices");
    std::vector<std::size_t> out;
    out.reserve(static_cast<std::size_t>(d));
    const auto e = u.exponents();
    for (std::size_t i = 0; i < e.size(); ++i)
        for (BigInt c = 0; c < e[i]; ++c)
            out.push_back(i + 1);
    return out;
}

} // namespace gotz
