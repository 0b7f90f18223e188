#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "gotz/combinatorics.hpp"
#include "support/reference.hpp"

using gotz::BigInt;
using gotz::Monomial;
using gotz::parse;

namespace {

std::vector<std::string> formatted(const gotz::MonomialSet& s)
{
    std::vector<std::string> out;
    for (const auto& u : s)
        out.push_back(gotz::format(u));
    return out;
}

} // namespace

TEST_CASE("binomials", "[combinatorics]")
{
    CHECK(gotz::binom(BigInt(10), 3) == 120);
    CHECK(gotz::binom(BigInt(3), BigInt(5)) == 0);
    CHECK(gotz::binom(BigInt(0), BigInt(0)) == 1);
    CHECK(gotz::binom(gotz::parse_decimal("100000000000000000000"), BigInt(2)) ==
          gotz::parse_decimal("4999999999999999999950000000000000000000"));
    CHECK_THROWS_AS(gotz::binom(BigInt(-1), BigInt(0)), gotz::domain_error);
}

TEST_CASE("enumeration of S_{n,d}", "[combinatorics]")
{
    for (std::size_t n = 1; n <= 5; ++n)
        for (int d = 0; d <= 5; ++d) {
            const auto s = gotz::enumerate_monomials(n, d);
            CHECK(BigInt(s.size()) == gotz::binom(BigInt(n - 1 + d), BigInt(d)));
            const auto list = ref::all_desc(n, d);
            REQUIRE(s.size() == list.size());
            for (std::size_t i = 0; i < list.size(); ++i)
                CHECK(ref::from_mono(s[i]) == list[i]);
        }
    CHECK_THROWS_AS(gotz::enumerate_monomials(10, 30, gotz::Limits{1000}), gotz::cap_exceeded);
}

TEST_CASE("Borel sets", "[combinatorics]")
{
    CHECK(formatted(gotz::borel_enumerate(parse("x2*x3", 3))) ==
          std::vector<std::string>{"x1^2", "x1*x2", "x1*x3", "x2^2", "x2*x3"});
    CHECK(formatted(gotz::borel_enumerate(parse("x2^2", 3))) == std::vector<std::string>{"x1^2", "x1*x2", "x2^2"});
    CHECK(gotz::borel_size(Monomial(4)) == 1);
    CHECK(gotz::borel_size(parse("x1^9", 4)) == 1);

    for (std::size_t n = 1; n <= 4; ++n)
        for (int d = 0; d <= 5; ++d)
            for (const auto& e : ref::all_desc(n, d)) {
                const Monomial u = ref::to_mono(e);
                const auto b = ref::borel(e);
                CHECK(gotz::borel_size(u) == BigInt(b.size()));
                const auto s = gotz::borel_enumerate(u);
                REQUIRE(s.size() == b.size());
                for (const auto& z : s)
                    CHECK(b.count(ref::from_mono(z)) == 1);
            }
}

TEST_CASE("Borel size with huge exponents", "[combinatorics]")
{
    // B(x2^d) in S_2 has d + 1 elements.
    const BigInt d = gotz::parse_decimal("987654321987654321");
    CHECK(gotz::borel_size(Monomial::variable(2, 2, d)) == d + 1);
    // B(x_n^d) = S_{n,d}.
    CHECK(gotz::borel_size(Monomial::variable(4, 4, 1000)) == gotz::binom(BigInt(1003), BigInt(3)));
}

TEST_CASE("lex rank, segments and intervals", "[combinatorics]")
{
    for (std::size_t n = 1; n <= 4; ++n)
        for (int d = 0; d <= 5; ++d) {
            const auto list = ref::all_desc(n, d);
            for (std::size_t i = 0; i < list.size(); ++i) {
                const Monomial u = ref::to_mono(list[i]);
                CHECK(gotz::lex_rank(u) == BigInt(i + 1));
                CHECK(gotz::lexsegment(u).size() == i + 1);
            }
        }
    const Monomial u = parse("x2^2*x4*x5", 5);
    const Monomial v = parse("x2^2*x3*x4", 5);
    const auto iv = gotz::lexinterval(v, u);
    CHECK(iv.size() == 3);
    CHECK(iv[0] == parse("x2^2*x3*x5", 5));
    CHECK(iv[2] == u);
    CHECK(gotz::lexinterval(u, u).empty());
    CHECK_THROWS_AS(gotz::lexinterval(u, v), gotz::domain_error);
    CHECK(gotz::lex_rank(Monomial::variable(3, 3, 10)) == gotz::binom(BigInt(12), BigInt(2)));
}

TEST_CASE("MonomialSet invariants", "[combinatorics]")
{
    CHECK_THROWS_AS(gotz::MonomialSet({parse("x2", 2), parse("x1", 2)}), gotz::domain_error);
    const gotz::MonomialSet s({parse("x1^2", 2), parse("x2^2", 2)});
    CHECK(s.contains(parse("x2^2", 2)));
    CHECK_FALSE(s.contains(parse("x1*x2", 2)));
}
