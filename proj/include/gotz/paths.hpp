#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>

#include "gotz/bigint.hpp"
#include "gotz/binomial.hpp"
#include "gotz/combinatorics.hpp"
#include "gotz/error.hpp"
#include "gotz/maxgen.hpp"
#include "gotz/monomial.hpp"

namespace gotz {

/// Position on an upward lex walk together with the accumulated cost
/// mu_n(origin, current) and the number of elementary steps taken.
struct WalkState {
    Monomial current;
    Monomial cost;
    BigInt steps;

    friend bool operator==(const WalkState&, const WalkState&) = default;
};

/// `elementary` applies pred one step at a time and serves as the reference;
/// `block` takes closed-form partial conversions.
enum class Engine { block, elementary };

struct WalkLimits {
    std::uint64_t max_jumps = 10'000'000;
    std::uint64_t max_elementary_steps = 100'000'000;
};

/// One move of a walk. Elementary steps are reported as jumps of length one.
struct JumpEvent {
    const Monomial& from;
    const Monomial& to;
    const Monomial& block_cost;
    const BigInt& steps_so_far;
};

using JumpObserver = std::function<void(const JumpEvent&)>;

struct WalkOptions {
    Engine engine = Engine::block;
    WalkLimits limits{};
    JumpObserver observer{};
};

/// Cost of converting l of the k trailing x_m's of v x_m^k into x_{m-1}:
///
///   mu_n(v x_m^k, v x_{m-1}^l x_m^{k-l})
///     = x_m^l prod_{i=1}^{n-m} x_{m+i}^{C(k+i-1, i+1) - C(k+i-1-l, i+1)}
///
/// The cost does not depend on v.
inline Monomial conversion_cost(std::size_t m, const BigInt& k, const BigInt& l, std::size_t n)
{
    Monomial r(n);
    r.set_exponent(m, l);
    for (std::size_t i = 1; m + i <= n; ++i) {
        const BigInt top = k + (i - 1);
        r.set_exponent(m + i, binom(top, i + 1) - binom(top - l, i + 1));
    }
    return r;
}

/// Checked form of conversion_cost taking the prefix v (in m - 1 variables).
inline Monomial partial_conversion_cost(const Monomial& v, std::size_t m, const BigInt& k, const BigInt& l,
                                        std::size_t n)
{
    if (m < 2 || m > n)
        throw domain_error("partial_conversion_cost: need 2 <= m <= n");
    if (v.n() != m - 1)
        throw domain_error("partial_conversion_cost: v must live in m - 1 variables");
    if (l < 1 || l > k)
        throw domain_error("partial_conversion_cost: need 1 <= l <= k");
    return conversion_cost(m, k, l, n);
}

namespace detail {

class Walker {
public:
    Walker(const Monomial& origin, const WalkOptions& options)
        : state_{origin, Monomial(origin.n()), 0}, options_(options)
    {
    }

    const WalkState& state() const noexcept { return state_; }
    WalkState take() && { return std::move(state_); }

    void elementary_step()
    {
        count_jump();
        if (++elementary_ > options_.limits.max_elementary_steps)
            throw cap_exceeded("walk exceeded " + std::to_string(options_.limits.max_elementary_steps) +
                               " elementary steps");
        if (state_.current.is_unit() || max_index(state_.current) == 1)
            throw walk_error("walk reached the lex maximum " + format(state_.current) + " and has no predecessor");
        const Monomial step_cost = last_variable(state_.current);
        Monomial next = pred(state_.current);
        apply(std::move(next), step_cost, 1);
    }

    /// Converts l of the x_m's at the top of the current position.
    void jump(std::size_t m, const BigInt& l, const Monomial& block)
    {
        count_jump();
        Monomial next = state_.current;
        next.add_exponent(m, -l);
        next.add_exponent(m - 1, l);
        apply(std::move(next), block, deg(block));
    }

private:
    void count_jump()
    {
        if (++jumps_ > options_.limits.max_jumps)
            throw cap_exceeded("walk exceeded " + std::to_string(options_.limits.max_jumps) + " jumps");
    }

    void apply(Monomial next, const Monomial& block, const BigInt& length)
    {
        state_.cost *= block;
        state_.steps += length;
        if (options_.observer)
            options_.observer(JumpEvent{state_.current, next, block, state_.steps});
        state_.current = std::move(next);
    }

    WalkState state_;
    const WalkOptions& options_;
    std::uint64_t jumps_ = 0;
    std::uint64_t elementary_ = 0;
};

// Largest l in [0, k] with admissible(l), for admissible monotone
// (true up to some point, false after) and admissible(0) true. Doubling
// then bisection.
template <class Pred>
BigInt largest_admissible(const BigInt& k, Pred admissible)
{
    if (admissible(k))
        return k;
    BigInt lo = 0;  // admissible
    BigInt hi = 1;  // candidate
    while (hi < k && admissible(hi)) {
        lo = hi;
        hi *= 2;
    }
    if (hi > k)
        hi = k;  // not admissible
    while (hi - lo > 1) {
        BigInt mid = (lo + hi) / 2;
        if (admissible(mid))
            lo = std::move(mid);
        else
            hi = std::move(mid);
    }
    return lo;
}

} // namespace detail

/// Walks `budget` elementary steps upward from origin. The result is
/// identical for both engines: current = pred^budget(origin) and
/// cost = mu_n(origin, current).
inline WalkState advance(const Monomial& origin, const BigInt& budget, const WalkOptions& options = {})
{
    if (budget < 0)
        throw domain_error("advance: negative budget");
    if (budget > 0 && budget > lex_rank(origin) - 1)
        throw walk_error("advance: " + format(origin) + " has only " + (lex_rank(origin) - 1).str() +
                         " predecessors, budget is " + budget.str());
    detail::Walker walker(origin, options);
    const std::size_t n = origin.n();
    if (options.engine == Engine::elementary) {
        if (budget > options.limits.max_elementary_steps)
            throw cap_exceeded("advance: budget " + budget.str() + " exceeds the elementary step cap");
        for (BigInt i = 0; i < budget; ++i)
            walker.elementary_step();
        return std::move(walker).take();
    }
    BigInt remaining = budget;
    while (remaining > 0) {
        const Monomial& cur = walker.state().current;
        const std::size_t m = max_index(cur);
        const BigInt k = cur.exponent(m);
        const BigInt l = detail::largest_admissible(
            k, [&](const BigInt& l) { return l == 0 || deg(conversion_cost(m, k, l, n)) <= remaining; });
        if (l > 0) {
            const Monomial block = conversion_cost(m, k, l, n);
            remaining -= deg(block);
            walker.jump(m, l, block);
        }
        else {
            walker.elementary_step();
            remaining -= 1;
        }
    }
    return std::move(walker).take();
}

/// mu_n(u, v) for v >= u: the cost of the upward path from u to v.
inline Monomial cost_between(const Monomial& u, const Monomial& v, const WalkOptions& options = {})
{
    if (lex_cmp(v, u) == std::strong_ordering::less)
        throw domain_error("cost_between: " + format(v) + " is below " + format(u));
    const BigInt length = lex_rank(u) - lex_rank(v);
    WalkState st = advance(u, length, options);
    if (!(st.current == v))
        throw consistency_error("cost_between: walk of length " + length.str() + " ended at " + format(st.current) +
                                " instead of " + format(v));
    return std::move(st.cost);
}

/// Endpoint u~ = pred^g(u) of the cogap walk (g = |gaps_n(u)|) and its cost mc_n(u).
struct CogapWalk {
    BigInt gap_count;
    Monomial u_tilde;
    Monomial mc;
};

inline CogapWalk cogap_walk(const Monomial& u, const WalkOptions& options = {})
{
    BigInt g = lex_rank(u) - borel_size(u);
    WalkState st = advance(u, g, options);
    return {std::move(g), std::move(st.current), std::move(st.cost)};
}

inline Monomial u_tilde(const Monomial& u, const WalkOptions& options = {}) { return cogap_walk(u, options).u_tilde; }

inline Monomial mc(const Monomial& u, const WalkOptions& options = {}) { return cogap_walk(u, options).mc; }

namespace detail {

enum class TargetStatus { below, hit, over };

// Compares pi_{n-1}(cost * extra) with the (n-1)-target.
inline TargetStatus target_status(const Monomial& cost, const Monomial* extra, const Monomial& target)
{
    bool equal = true;
    for (std::size_t i = 1; i <= target.n(); ++i) {
        BigInt e = cost.exponent(i);
        if (extra)
            e += extra->exponent(i);
        const BigInt& w = target.exponent(i);
        if (e > w)
            return TargetStatus::over;
        if (e != w)
            equal = false;
    }
    return equal ? TargetStatus::hit : TargetStatus::below;
}

[[noreturn]] inline void overshoot(const Monomial& u0, std::size_t n, const BigInt& t, const WalkState& st,
                                   const Monomial& target)
{
    throw walk_error("target unreachable / component overshoot: walking from " + format(u0) + "*x" +
                     std::to_string(n) + "^" + t.str() + " the truncated cost " + format(truncate(st.cost, n - 1)) +
                     " passed the target " + format(target) + " at " + format(st.current));
}

} // namespace detail

/// Result of the z-search: z_n(t) and the walk state on arrival.
struct ZSearch {
    Monomial z;
    WalkState state;
};

/// z_n(t): the first position on the upward walk from u_0 x_n^t at which the
/// truncated cost pi_{n-1}(mu_n(u_0 x_n^t, z)) equals the (n-1)-target
/// w(t) = pi_{n-1}(mg_n(u_0 x_n^t)). Exists for t >= tau_{n-1}(u_0).
///
/// The block engine never lets a jump reach the target: it takes the
/// largest conversion that keeps the truncated cost strictly below w(t)
/// and resolves the first hit with single steps.
inline ZSearch find_z(const Monomial& u0, std::size_t n, const BigInt& t, const WalkOptions& options = {})
{
    if (n < 2 || u0.n() + 1 != n)
        throw domain_error("find_z: u0 must live in n - 1 variables");
    const Monomial target = target_decompose(u0, n, t).base;
    Monomial origin = embed(u0, n);
    origin.set_exponent(n, t);

    detail::Walker walker(origin, options);
    using detail::TargetStatus;
    auto status = [&](const Monomial* extra) { return detail::target_status(walker.state().cost, extra, target); };

    if (status(nullptr) == TargetStatus::hit)
        return {origin, walker.state()};

    auto step_and_check = [&]() {
        walker.elementary_step();
        const auto s = status(nullptr);
        if (s == TargetStatus::over)
            detail::overshoot(u0, n, t, walker.state(), target);
        return s == TargetStatus::hit;
    };

    while (true) {
        const Monomial& cur = walker.state().current;
        if (cur.is_unit() || max_index(cur) == 1)
            throw walk_error("target unreachable: the walk from " + format(origin) + " reached " + format(cur) +
                             " without meeting " + format(target));
        if (options.engine == Engine::elementary) {
            if (step_and_check())
                break;
            continue;
        }
        const std::size_t m = max_index(cur);
        const BigInt k = cur.exponent(m);
        BigInt l = k;
        if (m < n) {
            l = detail::largest_admissible(k, [&](const BigInt& l) {
                if (l == 0)
                    return true;
                const Monomial block = conversion_cost(m, k, l, n);
                return status(&block) == TargetStatus::below;
            });
        }
        if (l > 0)
            walker.jump(m, l, conversion_cost(m, k, l, n));
        if (l < k && step_and_check())
            break;
    }
    ZSearch out{walker.state().current, walker.state()};
    return out;
}

/// pred^b(u) when the path cost is x_n^b, which holds exactly when
/// deg_{x_n}(u) >= b.
inline Monomial xn_power_path(const Monomial& u, const BigInt& b)
{
    const std::size_t n = u.n();
    if (b < 0)
        throw domain_error("xn_power_path: negative length");
    if (b > u.exponent(n))
        throw domain_error("xn_power_path: a path of cost x" + std::to_string(n) + "^" + b.str() +
                           " needs deg_x" + std::to_string(n) + "(u) >= " + b.str() + ", but " + format(u) + " has " +
                           u.exponent(n).str());
    if (b == 0)
        return u;
    if (n == 1)
        throw domain_error("xn_power_path: x1^d has no predecessor");
    Monomial r = u;
    r.add_exponent(n, -b);
    r.add_exponent(n - 1, b);
    return r;
}

} // namespace gotz
