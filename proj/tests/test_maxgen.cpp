#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "gotz/maxgen.hpp"
#include "support/reference.hpp"

using gotz::BigInt;
using gotz::Monomial;
using gotz::parse;

TEST_CASE("maxgen of a set", "[maxgen]")
{
    CHECK(gotz::format(gotz::maxgen_of_set(gotz::enumerate_monomials(3, 2), 3)) == "x1*x2^2*x3^3");
    CHECK(gotz::maxgen_of_set(gotz::MonomialSet{}, 3).is_unit());
    CHECK_THROWS_AS(gotz::maxgen_of_set(gotz::MonomialSet({Monomial(3)}), 3), gotz::domain_error);
    for (std::size_t n = 1; n <= 4; ++n)
        for (int d = 1; d <= 4; ++d)
            for (const auto& e : ref::all_desc(n, d)) {
                const Monomial u = ref::to_mono(e);
                CHECK(gotz::deg(gotz::maxgen_of_set(gotz::borel_enumerate(u), n)) == gotz::borel_size(u));
            }
}

TEST_CASE("mg frozen values", "[maxgen]")
{
    CHECK(gotz::format(gotz::mg(parse("x2^2", 3))) == "x3");
    CHECK(gotz::format(gotz::mg(parse("x2^2*x4", 5))) == "x3*x4^2*x5^5");
    CHECK(gotz::format(gotz::mg(parse("x2^3", 5))) == "x3^3*x4^4*x5^5");
    CHECK(gotz::format(gotz::mg(parse("x2^2*x4", 4))) == "x3*x4^2");
    CHECK(gotz::mg(parse("x4", 4)).is_unit());
    CHECK(gotz::mg(Monomial(4)).is_unit());
    CHECK(gotz::mg(parse("x1^5", 4)).is_unit());
}

TEST_CASE("closed mg against enumeration", "[maxgen]")
{
    for (std::size_t n = 1; n <= 4; ++n)
        for (int d = 0; d <= 5; ++d)
            for (const auto& e : ref::all_desc(n, d)) {
                const Monomial u = ref::to_mono(e);
                const auto want = ref::mg(e);
                CHECK(ref::from_mono(gotz::mg_closed(u)) == want);
                CHECK(ref::from_mono(gotz::mg(u)) == want);
                CHECK(ref::from_mono(gotz::mg_oracle(u)) == want);
            }
}

TEST_CASE("mg shift and truncation laws", "[maxgen][property]")
{
    std::mt19937_64 rng(23);
    for (int i = 0; i < 60; ++i) {
        const std::size_t n = 3 + static_cast<std::size_t>(rng() % 3);
        const Monomial u = ref::random_monomial(rng, n, 3);
        const int t = static_cast<int>(rng() % 5);
        Monomial shifted = u;
        shifted.add_exponent(n, t);
        CHECK(gotz::mg_closed(shifted) == gotz::mg_shifted(u, t));
        CHECK(gotz::mg(shifted) == gotz::mg_closed(shifted));
        // pi_{n-1}(mg_n(u)) = mg_{n-1}(pi_{n-1}(u)) for u free of x_n
        Monomial u0 = u;
        u0.set_exponent(n, 0);
        CHECK(gotz::truncate(gotz::mg(u0), n - 1) == gotz::mg(gotz::truncate(u0, n - 1)));
    }
}

TEST_CASE("f and the mg decomposition", "[maxgen]")
{
    const Monomial u0 = parse("x2^2*x4", 4);
    for (int t = 0; t <= 10; ++t) {
        const auto dec = gotz::target_decompose(u0, 5, t);
        CHECK(dec.xn_exp == gotz::binom(BigInt(t + 1), 2) + 2 * t + 5);
        CHECK(dec.reconstruct() == gotz::mg(parse("x2^2*x4", 5) * Monomial::variable(5, 5, t)));
    }
    const gotz::Polynomial f = gotz::f_polynomial(u0, 5);
    CHECK(gotz::degree(f) == 2);
    CHECK(gotz::to_string(f[0]) == "5");
    CHECK(gotz::to_string(f[1]) == "5/2");
    CHECK(gotz::to_string(f[2]) == "1/2");

    std::mt19937_64 rng(5);
    for (int i = 0; i < 40; ++i) {
        const std::size_t n = 3 + static_cast<std::size_t>(rng() % 3);
        const Monomial v = ref::random_monomial(rng, n - 1, 3);
        const gotz::Polynomial p = gotz::f_polynomial(v, n);
        for (int t = 0; t <= 8; ++t)
            CHECK(gotz::evaluate(p, gotz::Rational(t)) == gotz::Rational(gotz::f_poly_eval(v, n, t)));
    }
    CHECK_THROWS_AS(gotz::target_decompose(u0, 4, 0), gotz::domain_error);
    CHECK_THROWS_AS(gotz::f_poly_eval(u0, 5, -1), gotz::domain_error);
}

TEST_CASE("gaps", "[maxgen]")
{
    const auto g = gotz::gaps(parse("x2^2", 3));
    REQUIRE(g.size() == 1);
    CHECK(g[0] == parse("x1*x3", 3));
}
