#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "gotz/paths.hpp"
#include "support/reference.hpp"

using gotz::BigInt;
using gotz::Monomial;
using gotz::parse;

TEST_CASE("path cost examples", "[paths]")
{
    CHECK(gotz::format(gotz::cost_between(parse("x2^2*x4*x5", 5), parse("x2^2*x3*x4", 5))) == "x4*x5^2");
    CHECK(gotz::format(gotz::cost_between(parse("x2^2*x4^2", 5), parse("x2^2*x3*x4", 5))) == "x4*x5");
    CHECK(gotz::cost_between(parse("x2^2", 3), parse("x2^2", 3)).is_unit());
    CHECK_THROWS_AS(gotz::cost_between(parse("x1*x3", 3), parse("x2^2", 3)), gotz::domain_error);
}

TEST_CASE("conversion cost against enumeration", "[paths]")
{
    for (std::size_t n = 2; n <= 5; ++n)
        for (std::size_t m = 2; m <= n; ++m)
            for (int k = 1; k <= 4; ++k)
                for (int l = 1; l <= k; ++l) {
                    ref::Exps from(n, 0), to(n, 0);
                    from[m - 1] = k;
                    to[m - 2] = l;
                    to[m - 1] = k - l;
                    const Monomial v(m - 1);
                    CHECK(ref::from_mono(gotz::partial_conversion_cost(v, m, k, l, n)) == ref::cost(from, to));
                }
    CHECK_THROWS_AS(gotz::partial_conversion_cost(Monomial(2), 3, 2, 3, 4), gotz::domain_error);
    CHECK_THROWS_AS(gotz::partial_conversion_cost(Monomial(2), 4, 2, 1, 4), gotz::domain_error);
}

TEST_CASE("block walk equals elementary walk and enumeration", "[paths][property]")
{
    std::mt19937_64 rng(99);
    const gotz::WalkOptions elementary{gotz::Engine::elementary};
    for (int i = 0; i < 150; ++i) {
        const std::size_t n = 2 + static_cast<std::size_t>(rng() % 4);
        const Monomial u = ref::random_monomial(rng, n, 3);
        const BigInt avail = gotz::lex_rank(u) - 1;
        const BigInt budget = avail == 0 ? BigInt(0) : BigInt(rng() % static_cast<std::uint64_t>(avail + 1));
        const auto fast = gotz::advance(u, budget);
        const auto slow = gotz::advance(u, budget, elementary);
        CHECK(fast == slow);
        CHECK(fast.steps == budget);
        const auto e = ref::from_mono(u);
        const auto target = ref::pred_n(e, static_cast<std::size_t>(budget));
        CHECK(ref::from_mono(fast.current) == target);
        CHECK(ref::from_mono(fast.cost) == ref::cost(e, target));
    }
}

TEST_CASE("walk limits and errors", "[paths][errors]")
{
    CHECK_THROWS_AS(gotz::advance(parse("x2^2", 3), 4), gotz::walk_error);
    CHECK_THROWS_AS(gotz::advance(parse("x2^2", 3), -1), gotz::domain_error);
    gotz::WalkOptions tight{gotz::Engine::elementary, gotz::WalkLimits{10, 3}};
    CHECK_THROWS_AS(gotz::advance(parse("x3^4", 3), 10, tight), gotz::cap_exceeded);
}

TEST_CASE("the cost of a shifted path is sigma of the cost", "[paths][property]")
{
    std::mt19937_64 rng(3);
    int checked = 0;
    while (checked < 60) {
        const std::size_t n = 2 + static_cast<std::size_t>(rng() % 4);
        const Monomial u = ref::random_monomial(rng, n, 3);
        const BigInt avail = gotz::lex_rank(u) - 1;
        if (avail == 0)
            continue;
        const auto st = gotz::advance(u, BigInt(rng() % static_cast<std::uint64_t>(avail + 1)));
        const Monomial xn = Monomial::variable(n, n);
        CHECK(gotz::cost_between(u * xn, st.current * xn) == gotz::sigma(st.cost));
        ++checked;
    }
}

TEST_CASE("observer sees every jump", "[paths]")
{
    std::vector<std::string> seen;
    gotz::WalkOptions opts;
    opts.observer = [&](const gotz::JumpEvent& ev) { seen.push_back(gotz::format(ev.to)); };
    const auto st = gotz::advance(parse("x3^5", 3), 20, opts);
    REQUIRE_FALSE(seen.empty());
    CHECK(seen.back() == gotz::format(st.current));
}

TEST_CASE("z search", "[paths][property]")
{
    // z_5(t) for u0 = x2^2 x4 moves up by x5 when t grows
    const Monomial u0 = parse("x2^2*x4", 4);
    Monomial prev = gotz::find_z(u0, 5, 1).z;
    for (int t = 2; t <= 8; ++t) {
        const auto zs = gotz::find_z(u0, 5, t);
        CHECK(zs.z == prev * Monomial::variable(5, 5));
        CHECK(zs.z.exponent(5) == t - 1);
        CHECK(zs.state == gotz::find_z(u0, 5, t, gotz::WalkOptions{gotz::Engine::elementary}).state);
        prev = zs.z;
    }
    CHECK_THROWS_AS(gotz::find_z(u0, 4, 1), gotz::domain_error);
}

TEST_CASE("x_n power path", "[paths]")
{
    CHECK(gotz::xn_power_path(parse("x2*x4^3", 4), 2) == parse("x2*x3^2*x4", 4));
    CHECK_THROWS_AS(gotz::xn_power_path(parse("x2*x4", 4), 2), gotz::domain_error);
}
