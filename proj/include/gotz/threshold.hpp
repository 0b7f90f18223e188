#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gotz/bigint.hpp"
#include "gotz/binomial.hpp"
#include "gotz/combinatorics.hpp"
#include "gotz/error.hpp"
#include "gotz/interpolation.hpp"
#include "gotz/maxgen.hpp"
#include "gotz/monomial.hpp"
#include "gotz/paths.hpp"

namespace gotz {

/// Outcome of the mg = mc test for one monomial.
struct GotzmannWitness {
    Monomial u;
    Monomial mg;
    Monomial u_tilde;
    Monomial mc;
    BigInt gap_count;
    bool is_gotzmann = false;
    std::string diagnostic;
};

/// u is Gotzmann iff mg_n(u) = mc_n(u). mg comes from the closed formula,
/// mc from walking g = deg(mg) steps up from u; no lexsegment is built.
inline GotzmannWitness is_gotzmann(const Monomial& u, const WalkOptions& options = {})
{
    Monomial target = mg(u);
    BigInt g = deg(target);
    const BigInt lex = lex_rank(u);
    if (g != lex - borel_size(u))
        throw consistency_error("is_gotzmann: deg(mg) = " + g.str() + " differs from |L(u)| - |B(u)| for " +
                                format(u));
    GotzmannWitness w{u, std::move(target), u, Monomial(u.n()), g, false, {}};
    if (g > lex - 1) {
        w.diagnostic = "gap count " + g.str() + " exceeds the " + (lex - 1).str() + " predecessors of " + format(u);
        return w;
    }
    WalkState st = advance(u, g, options);
    w.u_tilde = std::move(st.current);
    w.mc = std::move(st.cost);
    w.is_gotzmann = w.mg == w.mc;
    return w;
}

/// Reference test: builds L(u), B(u), the gaps and the cogaps explicitly.
inline bool is_gotzmann_oracle(const Monomial& u, const Limits& limits = {})
{
    const MonomialSet lex = lexsegment(u, limits);  // descending, ends at u
    const MonomialSet borel = borel_enumerate(u, limits);
    std::vector<Monomial> gap_list;
    for (const auto& z : lex)
        if (!borel.contains(z))
            gap_list.push_back(z);
    const std::size_t g = gap_list.size();
    // cogaps = L*(pred^g(u), u): the last g elements of L(u).
    const auto all = lex.elements();
    const MonomialSet cogaps(std::vector<Monomial>(all.end() - static_cast<std::ptrdiff_t>(g), all.end()));
    return maxgen_of_set(MonomialSet(std::move(gap_list)), u.n()) == maxgen_of_set(cogaps, u.n());
}

/// Threshold computation for u = u_0 x_n^shift in S_n.
///
/// `tau` is tau_n(u_0) = f(t*) - h(t*) - k(t*) + t* with t* = tau_{n-1}(u_0),
/// f, h, k the x_n-degrees of mg_n(u_0 x_n^{t*}), of the cost to z_n(t*),
/// and of z_n(t*). The threshold of u itself is max(tau - shift, 0).
struct ThresholdReport {
    ThresholdReport(Monomial u_, Monomial u0_, std::size_t n_) : u(std::move(u_)), u0(std::move(u0_)), n(n_) {}

    Monomial u;
    Monomial u0;
    std::size_t n = 0;
    BigInt shift;
    BigInt t_star;
    BigInt f;
    BigInt h;
    BigInt k;
    BigInt delta;
    BigInt tau;
    std::optional<Monomial> z;
    std::shared_ptr<const ThresholdReport> sub_report;

    BigInt threshold() const { return tau > shift ? BigInt(tau - shift) : BigInt(0); }
};

/// Lookup/store hook for reports keyed by the x_n-free part u_0 (ambient n).
/// Stored reports always have shift 0 and u == u0.
class ThresholdMemo {
public:
    virtual ~ThresholdMemo() = default;
    virtual std::shared_ptr<const ThresholdReport> find(const Monomial& u0) = 0;
    virtual void store(const ThresholdReport& report) = 0;
};

struct TauOptions {
    WalkOptions walk{};
    ThresholdMemo* memo = nullptr;
};

namespace detail {

inline ThresholdReport with_shift(const ThresholdReport& base, const Monomial& u, const BigInt& shift)
{
    ThresholdReport r = base;
    r.u = u;
    r.shift = shift;
    return r;
}

} // namespace detail

/// Gotzmann threshold report for u in S_{u.n()}, recursing down the number
/// of variables: tau_2 = 0, and tau_n(u_0) needs t* = tau_{n-1}(u_0).
inline ThresholdReport tau(const Monomial& u, const TauOptions& options = {})
{
    const std::size_t n = u.n();
    auto [u0, shift] = split_last(u);
    if (options.memo) {
        if (auto hit = options.memo->find(u0))
            return detail::with_shift(*hit, u, shift);
    }
    ThresholdReport r(u0, u0, n);
    if (n >= 3) {
        const Monomial v0 = truncate(u0, n - 1);
        auto sub = std::make_shared<const ThresholdReport>(tau(v0, options));
        r.t_star = sub->threshold();
        r.sub_report = std::move(sub);
        const MgDecomposition target = target_decompose(v0, n, r.t_star);
        ZSearch zs = find_z(v0, n, r.t_star, options.walk);
        r.f = target.xn_exp;
        r.h = zs.state.cost.exponent(n);
        r.k = zs.z.exponent(n);
        r.z = std::move(zs.z);
        r.delta = r.f - r.h;
        if (r.delta < 0)
            throw consistency_error("tau: f - h = " + r.delta.str() + " < 0 for u0 = " + format(u0));
        r.tau = r.delta - r.k + r.t_star;
        if (r.tau < 0)
            throw consistency_error("tau: negative threshold " + r.tau.str() + " for u0 = " + format(u0));
    }
    if (options.memo)
        options.memo->store(r);
    return detail::with_shift(r, u, shift);
}

/// tau for u given in at most n variables.
inline ThresholdReport tau(const Monomial& u, std::size_t n, const TauOptions& options = {})
{
    return tau(embed(u, n), options);
}

/// Smallest t <= scan_cap with u_0 x_n^t Gotzmann, by direct testing.
inline BigInt tau_oracle(const Monomial& u0, std::size_t n, std::uint64_t scan_cap, const WalkOptions& options = {})
{
    if (u0.n() != n && u0.n() + 1 != n)
        throw domain_error("tau_oracle: u0 must live in n or n - 1 variables");
    Monomial u = embed(u0, n);
    if (u.exponent(n) != 0)
        throw domain_error("tau_oracle: u0 must be free of x" + std::to_string(n));
    for (std::uint64_t t = 0; t <= scan_cap; ++t) {
        u.set_exponent(n, t);
        if (is_gotzmann(u, options).is_gotzmann)
            return t;
    }
    throw cap_exceeded("tau_oracle: no Gotzmann power of x" + std::to_string(n) + " up to " +
                       std::to_string(scan_cap) + " for " + format(u0));
}

/// tau_3(x_1^a x_2^b) = C(b, 2).
inline BigInt tau3_formula(const BigInt& b) { return binom(b, 2); }

/// tau_4(x_1^a x_2^b x_3^c)
///   = C(C(b,2),2) + (b+4)/3 C(b,2) + (b+1) C(c+1,2) + C(c+1,3) - c.
inline BigInt tau4_formula(const BigInt& b, const BigInt& c)
{
    const BigInt b2 = binom(b, 2);
    const BigInt scaled = (b + 4) * b2;
    if (scaled % 3 != 0)
        throw consistency_error("tau4_formula: (b+4) C(b,2) not divisible by 3 for b = " + b.str());
    return binom(b2, 2) + scaled / 3 + (b + 1) * binom(c + 1, 2) + binom(c + 1, 3) - c;
}

/// tau_5(x_2^d) = C(C(C(d,2),2) + C(d+1,3) + C(d,2), 2) - C(C(d,2),3) + C(d+3,4) - d.
inline BigInt tau5_x2_formula(const BigInt& d)
{
    const BigInt d2 = binom(d, 2);
    return binom(binom(d2, 2) + binom(d + 1, 3) + d2, 2) - binom(d2, 3) + binom(d + 3, 4) - d;
}

enum class TauFormula { tau3, tau4, tau5_x2 };

/// Evaluates a named closed formula; tau3 takes {b}, tau4 {b, c}, tau5_x2 {d}.
inline BigInt tau_formula(TauFormula which, const std::vector<BigInt>& params)
{
    for (const auto& p : params)
        if (p < 0)
            throw domain_error("tau_formula: negative parameter");
    auto need = [&](std::size_t count) {
        if (params.size() != count)
            throw domain_error("tau_formula: expected " + std::to_string(count) + " parameters");
    };
    switch (which) {
    case TauFormula::tau3:
        need(1);
        return tau3_formula(params[0]);
    case TauFormula::tau4:
        need(2);
        return tau4_formula(params[0], params[1]);
    case TauFormula::tau5_x2:
        need(1);
        return tau5_x2_formula(params[0]);
    }
    throw domain_error("tau_formula: unknown formula");
}

struct ConjectureRow {
    BigInt d;
    BigInt tau_n;
    BigInt tau_prev;
    std::optional<Rational> ratio;  // tau_n / C(tau_prev, 2); empty when C(tau_prev, 2) = 0
};

struct ConjectureReport {
    std::size_t n = 0;
    std::vector<ConjectureRow> rows;
    std::size_t conjectured_degree = 0;  // 2^{n-2}
    Rational conjectured_leading;        // 2 / 2^{2^{n-2}}
    std::optional<Polynomial> interpolant;
};

/// Computes tau_n(x_2^d) and tau_{n-1}(x_2^d) for d in [d_lo, d_hi] and the
/// exact ratios tau_n / C(tau_{n-1}, 2). When there are more than 2^{n-2}
/// points the interpolating polynomial in d is attached.
inline ConjectureReport conjecture_scan(std::size_t n, std::uint64_t d_lo, std::uint64_t d_hi,
                                        const TauOptions& options = {})
{
    if (n < 3)
        throw domain_error("conjecture_scan: needs n >= 3");
    if (d_lo > d_hi)
        throw domain_error("conjecture_scan: empty degree range");
    if (n > 40)
        throw domain_error("conjecture_scan: n too large");
    ConjectureReport rep;
    rep.n = n;
    rep.conjectured_degree = std::size_t{1} << (n - 2);
    rep.conjectured_leading = Rational(2) / Rational(BigInt(1) << rep.conjectured_degree);
    std::vector<BigInt> xs, ys;
    for (std::uint64_t d = d_lo; d <= d_hi; ++d) {
        const ThresholdReport r = tau(Monomial::variable(n, 2, d), options);
        ConjectureRow row{d, r.threshold(), r.t_star, std::nullopt};
        const BigInt denom = binom(row.tau_prev, 2);
        if (denom != 0)
            row.ratio = Rational(row.tau_n, denom);
        xs.push_back(row.d);
        ys.push_back(row.tau_n);
        rep.rows.push_back(std::move(row));
    }
    if (xs.size() > rep.conjectured_degree)
        rep.interpolant = interpolate(std::span<const BigInt>(xs), std::span<const BigInt>(ys));
    return rep;
}

} // namespace gotz
