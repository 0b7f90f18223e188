#pragma once

// Self-check suites behind `gotz verify`. Each suite counts checks and
// records a message per mismatch.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "gotz/bigint.hpp"
#include "gotz/combinatorics.hpp"
#include "gotz/json.hpp"
#include "gotz/maxgen.hpp"
#include "gotz/monomial.hpp"
#include "gotz/paths.hpp"
#include "gotz/threshold.hpp"

namespace gotz {

struct SuiteResult {
    explicit SuiteResult(std::string name = {}) : suite(std::move(name)) {}

    std::string suite;
    std::uint64_t checks = 0;
    std::vector<std::string> failures;

    bool passed() const { return failures.empty(); }

    void expect(bool ok, const std::string& what)
    {
        ++checks;
        if (!ok)
            failures.push_back(what);
    }

    json to_json() const
    {
        return json{{"suite", suite}, {"checks", checks}, {"failures", failures.size()}, {"messages", failures},
                    {"passed", passed()}};
    }
};

/// Constants from the worked examples: S_{3,2}, sigma, a short path cost,
/// the mg values and the threshold tau_5(x_2^2 x_4) = 6 with its f, h, k.
inline SuiteResult verify_worked_examples()
{
    SuiteResult r("paper-examples");
    auto eq = [&](const Monomial& got, const std::string& want, const std::string& what) {
        r.expect(format(got) == want, what + ": got " + format(got) + ", want " + want);
    };
    eq(maxgen_of_set(enumerate_monomials(3, 2), 3), "x1*x2^2*x3^3", "maxgen(S_{3,2})");
    eq(sigma(parse("x2", 5)), "x2*x3*x4*x5", "sigma_5(x2)");
    eq(sigma(parse("x2^2*x3^5", 4)), "x2^2*x3^7*x4^7", "sigma_4(x2^2*x3^5)");
    eq(sigma(parse("x2", 2)), "x2", "sigma_2(x2)");
    eq(cost_between(parse("x2^2*x4*x5", 5), parse("x2^2*x3*x4", 5)), "x4*x5^2", "mu_5(x2^2x4x5, x2^2x3x4)");
    eq(mg_closed(parse("x2^2*x4", 5)), "x3*x4^2*x5^5", "mg_5(x2^2*x4)");
    eq(mg_closed(parse("x2^3", 5)), "x3^3*x4^4*x5^5", "mg_5(x2^3)");
    const ThresholdReport rep = tau(parse("x2^2*x4", 5));
    r.expect(rep.threshold() == 6, "tau_5(x2^2*x4) = " + rep.threshold().str() + ", want 6");
    for (int t = 1; t <= 6; ++t) {
        const Monomial u0 = parse("x2^2*x4", 4);
        const BigInt f = target_decompose(u0, 5, t).xn_exp;
        const ZSearch zs = find_z(u0, 5, t);
        r.expect(f == binom(BigInt(t + 1), 2) + 2 * t + 5, "f(" + std::to_string(t) + ") = " + f.str());
        r.expect(zs.state.cost.exponent(5) == binom(BigInt(t + 3), 2) - 3,
                 "h(" + std::to_string(t) + ") = " + zs.state.cost.exponent(5).str());
        r.expect(zs.z.exponent(5) == t - 1, "k(" + std::to_string(t) + ") = " + zs.z.exponent(5).str());
    }
    r.expect(is_gotzmann(parse("x2^2*x4*x5^6", 5)).is_gotzmann, "x2^2*x4*x5^6 should be Gotzmann");
    r.expect(!is_gotzmann(parse("x2^2*x4*x5^5", 5)).is_gotzmann, "x2^2*x4*x5^5 should not be Gotzmann");
    return r;
}

/// Fast routes against enumeration on S_{n,d}, d <= max_deg: the Gotzmann
/// test, mg, and (for x_n-free u_0 of degree <= max_deg) the threshold.
inline SuiteResult verify_oracle(std::size_t n, std::uint64_t max_deg, const Limits& limits = {})
{
    SuiteResult r("oracle");
    for (std::uint64_t d = 0; d <= max_deg; ++d) {
        for (const auto& u : enumerate_monomials(n, d, limits)) {
            const bool fast = is_gotzmann(u).is_gotzmann;
            const bool slow = is_gotzmann_oracle(u, limits);
            r.expect(fast == slow, "is_gotzmann(" + format(u) + ") = " + std::to_string(fast) + ", oracle " +
                                       std::to_string(slow));
            const Monomial a = mg_closed(u);
            const Monomial b = mg_oracle(u, limits);
            r.expect(a == b, "mg(" + format(u) + ") = " + format(a) + ", oracle " + format(b));
        }
        if (n >= 2) {
            for (const auto& u0 : enumerate_monomials(n - 1, d, limits)) {
                const BigInt fast = tau(u0, n).threshold();
                const BigInt slow = tau_oracle(u0, n, 100'000);
                r.expect(fast == slow, "tau_" + std::to_string(n) + "(" + format(u0) + ") = " + fast.str() +
                                           ", oracle " + slow.str());
            }
        }
    }
    return r;
}

/// tau against the closed formulas: "tau3" (x_1^a x_2^b, a <= 2), "tau4"
/// (x_2^b x_3^c) and "tau5" (x_2^d), parameters over [lo, hi].
inline SuiteResult verify_formulas(const std::string& which, std::uint64_t lo, std::uint64_t hi)
{
    SuiteResult r("formulas");
    if (which == "tau3" || which == "all") {
        for (std::uint64_t a = 0; a <= 2; ++a)
            for (std::uint64_t b = lo; b <= hi; ++b) {
                Monomial u = Monomial::variable(3, 1, a);
                u.set_exponent(2, b);
                const BigInt got = tau(u).threshold();
                r.expect(got == tau3_formula(b), "tau_3(" + format(u) + ") = " + got.str());
            }
    }
    if (which == "tau4" || which == "all") {
        for (std::uint64_t b = lo; b <= hi; ++b)
            for (std::uint64_t c = lo; c <= hi; ++c) {
                Monomial u = Monomial::variable(4, 2, b);
                u.set_exponent(3, c);
                const BigInt got = tau(u).threshold();
                r.expect(got == tau4_formula(b, c), "tau_4(" + format(u) + ") = " + got.str() + ", formula " +
                                                        tau4_formula(b, c).str());
            }
    }
    if (which == "tau5" || which == "all") {
        for (std::uint64_t d = lo; d <= hi; ++d) {
            const BigInt got = tau(Monomial::variable(5, 2, d)).threshold();
            r.expect(got == tau5_x2_formula(d), "tau_5(x2^" + std::to_string(d) + ") = " + got.str() + ", formula " +
                                                    tau5_x2_formula(d).str());
        }
    }
    if (r.checks == 0)
        r.failures.push_back("unknown formula '" + which + "' (expected tau3, tau4, tau5 or all)");
    return r;
}

/// Random origins in S_n (n in [2, max_n]) and budgets <= max_budget: the
/// block engine must reproduce the elementary engine exactly.
inline SuiteResult verify_walk(std::size_t max_n, std::uint64_t samples, std::uint64_t max_budget, std::uint64_t seed)
{
    SuiteResult r("walk");
    std::mt19937_64 rng(seed);
    const WalkOptions elementary{Engine::elementary};
    for (std::uint64_t s = 0; s < samples; ++s) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(2, max_n)(rng);
        std::vector<BigInt> exps(n);
        for (std::size_t i = 1; i < n; ++i)
            exps[i] = std::uniform_int_distribution<int>(0, 6)(rng);
        exps[0] = std::uniform_int_distribution<int>(0, 2)(rng);
        Monomial origin(std::move(exps));
        const BigInt available = lex_rank(origin) - 1;
        const BigInt cap = available < max_budget ? available : BigInt(max_budget);
        const BigInt budget = BigInt(std::uniform_int_distribution<std::uint64_t>(0, static_cast<std::uint64_t>(cap))(rng));
        const WalkState fast = gotz::advance(origin, budget);
        const WalkState slow = gotz::advance(origin, budget, elementary);
        r.expect(fast == slow, "advance(" + format(origin) + ", " + budget.str() + "): block " + format(fast.current) +
                                   " / " + format(fast.cost) + ", elementary " + format(slow.current) + " / " +
                                   format(slow.cost));
    }
    return r;
}

} // namespace gotz
