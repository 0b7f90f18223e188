#include <catch2/catch_amalgamated.hpp>

#include "gotz/verify.hpp"

TEST_CASE("self-check suites", "[verify]")
{
    const auto worked = gotz::verify_worked_examples();
    CHECK(worked.passed());
    CHECK(worked.checks > 20);
    for (const auto& m : worked.failures)
        UNSCOPED_INFO(m);

    CHECK(gotz::verify_oracle(3, 4).passed());
    CHECK(gotz::verify_formulas("all", 2, 4).passed());
    CHECK(gotz::verify_walk(5, 50, 1000, 42).passed());

    const auto bad = gotz::verify_formulas("tau9", 2, 3);
    CHECK_FALSE(bad.passed());
    CHECK(bad.to_json().at("failures") == 1);
}
