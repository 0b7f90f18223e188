#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gotz/cache.hpp"
#include "gotz/json.hpp"

using gotz::Monomial;
using gotz::parse;

namespace {

std::filesystem::path temp_file(const std::string& name)
{
    auto p = std::filesystem::temp_directory_path() / ("gotz_test_" + name + ".jsonl");
    std::filesystem::remove(p);
    return p;
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("JSON monomial input", "[json]")
{
    CHECK(gotz::parse_any("[\"0\", \"2\", \"0\", \"1\", \"0\"]", 5) == parse("x2^2*x4", 5));
    CHECK_THROWS_AS(gotz::parse_any("[0, 2, 0, 1, 0]", 5), gotz::parse_error);
    CHECK(gotz::parse_any("x2^2*x4", 5) == parse("x2^2*x4", 5));
    CHECK_THROWS_AS(gotz::parse_any("[0, 2]", 5), gotz::parse_error);
    CHECK_THROWS_AS(gotz::parse_any("[\"0\", \"-2\", \"0\", \"0\", \"0\"]", 5), gotz::parse_error);
    CHECK_THROWS_AS(gotz::parse_any("[0, 2", 5), gotz::parse_error);
}

TEST_CASE("threshold report JSON round trip", "[json]")
{
    const auto r = gotz::tau(parse("x2^2*x4*x5^2", 5));
    const gotz::json j = gotz::to_json(r);
    CHECK(j.at("tau") == "6");
    CHECK(j.at("threshold") == "4");
    CHECK(j.at("shift") == "2");
    CHECK(j.at("z") == "x2^3*x3");
    CHECK(j.at("sub_report").at("n") == 4);
    CHECK(gotz::to_json(gotz::report_from_json(j)).dump() == j.dump());
}

TEST_CASE("cache hits are byte-identical to recomputation", "[cache]")
{
    const auto path = temp_file("hit");
    const Monomial u = parse("x2^3", 5);
    std::string fresh;
    {
        gotz::JsonlCache cache(path);
        gotz::TauOptions opts;
        opts.memo = &cache;
        fresh = gotz::to_json(gotz::tau(u, opts)).dump();
        CHECK(cache.size() == 4);  // n = 2, 3, 4, 5
        CHECK(fresh == gotz::to_json(gotz::tau(u)).dump());
    }
    const std::string file_before = slurp(path);
    gotz::JsonlCache reload(path);
    CHECK(reload.size() == 4);
    gotz::TauOptions opts;
    opts.memo = &reload;
    CHECK(gotz::to_json(gotz::tau(u, opts)).dump() == fresh);
    CHECK(reload.hits() == 1);
    CHECK(slurp(path) == file_before);
    std::filesystem::remove(path);
}

TEST_CASE("cache skips stale and torn lines", "[cache]")
{
    const auto path = temp_file("stale");
    {
        gotz::JsonlCache old(path, "0.0.1");
        gotz::TauOptions opts;
        opts.memo = &old;
        gotz::tau(parse("x2^2", 4), opts);
    }
    {
        std::ofstream out(path, std::ios::app);
        out << "{\"version\": \"" << gotz::version << "\", \"n\": 4, \"u0\"";  // torn write
    }
    gotz::JsonlCache cache(path);
    CHECK(cache.size() == 0);
    gotz::TauOptions opts;
    opts.memo = &cache;
    CHECK(gotz::tau(parse("x2^2", 4), opts).threshold() == 2);
    CHECK(cache.size() == 3);
    std::filesystem::remove(path);
}
