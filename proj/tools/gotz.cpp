#include <cstdint>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include <CLI11.hpp>

#include "gotz/cache.hpp"
#include "gotz/json.hpp"
#include "gotz/maxgen.hpp"
#include "gotz/monomial.hpp"
#include "gotz/paths.hpp"
#include "gotz/threshold.hpp"
#include "gotz/verify.hpp"
#include "gotz/version.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;
constexpr int exit_cap = 3;

struct Range {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
};

Range parse_range(const std::string& text)
{
    const auto dots = text.find("..");
    auto number = [&](const std::string& s) {
        const gotz::BigInt v = gotz::parse_decimal(s);
        return gotz::to_u64(v, "range bound");
    };
    if (dots == std::string::npos) {
        const auto v = number(text);
        return {v, v};
    }
    Range r{number(text.substr(0, dots)), number(text.substr(dots + 2))};
    if (r.lo > r.hi)
        throw gotz::parse_error("empty range '" + text + "'");
    return r;
}

void print(const gotz::json& j) { std::cout << j.dump(2) << '\n'; }

struct Common {
    std::size_t n = 0;
    bool as_json = false;
};

std::unique_ptr<gotz::JsonlCache> open_cache(const std::string& flag)
{
    std::string path = flag;
    if (path.empty())
        if (const char* env = std::getenv("GOTZ_CACHE"))
            path = env;
    if (path.empty())
        return nullptr;
    return std::make_unique<gotz::JsonlCache>(path);
}

gotz::WalkOptions trace_options(bool trace)
{
    gotz::WalkOptions opts;
    if (trace)
        opts.observer = [](const gotz::JumpEvent& ev) { std::cerr << gotz::to_json(ev).dump() << '\n'; };
    return opts;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Gotzmann thresholds of principal Borel ideals"};
    app.set_version_flag("--version", std::string(gotz::version));
    app.require_subcommand(1);

    // Positional monomials are kept as raw text and parsed once n is known.
    Common c;
    std::string mono, mono2, cache_path, mg_t = "0", sigma_t = "1", steps = "1";
    bool trace = false;
    auto add_n = [&](CLI::App* sub) {
        sub->add_option("--n", c.n, "number of variables")->required()->check(CLI::Range(1, 1000));
        sub->add_flag("--json", c.as_json, "JSON output");
    };

    auto* tau_cmd = app.add_subcommand("tau", "Gotzmann threshold of u: least t with u*x_n^t Gotzmann");
    add_n(tau_cmd);
    tau_cmd->add_option("monomial", mono)->required();
    tau_cmd->add_flag("--trace", trace, "stream walk jumps to stderr as JSON lines");
    tau_cmd->add_option("--cache", cache_path, "JSON-lines cache file (default $GOTZ_CACHE)");

    auto* gotz_cmd = app.add_subcommand("is-gotzmann", "mg = mc test");
    add_n(gotz_cmd);
    gotz_cmd->add_option("monomial", mono)->required();

    auto* mg_cmd = app.add_subcommand("mg", "maxgen of the gaps of u*x_n^t");
    add_n(mg_cmd);
    mg_cmd->add_option("monomial", mono)->required();
    mg_cmd->add_option("--t", mg_t, "extra power of x_n")->capture_default_str();

    auto* mc_cmd = app.add_subcommand("mc", "maxgen of the cogaps of u");
    add_n(mc_cmd);
    mc_cmd->add_option("monomial", mono)->required();

    auto* cost_cmd = app.add_subcommand("cost", "path cost from u up to v (v >lex u)");
    add_n(cost_cmd);
    cost_cmd->add_option("u", mono)->required();
    cost_cmd->add_option("v", mono2)->required();

    auto* pred_cmd = app.add_subcommand("pred", "walk up the lex order");
    add_n(pred_cmd);
    pred_cmd->add_option("monomial", mono)->required();
    pred_cmd->add_option("--steps", steps, "number of steps")->capture_default_str();
    pred_cmd->add_flag("--trace", trace, "stream walk jumps to stderr as JSON lines");

    auto* sigma_cmd = app.add_subcommand("sigma", "prefix-sum map, iterated t times");
    add_n(sigma_cmd);
    sigma_cmd->add_option("monomial", mono)->required();
    sigma_cmd->add_option("--t", sigma_t, "iterations")->capture_default_str();

    std::string suite, which = "all", d_text = "2..6";
    std::size_t verify_n = 4;
    std::uint64_t max_deg = 3, samples = 200, max_budget = 10'000, seed = 1;
    auto* verify_cmd = app.add_subcommand("verify", "run a self-check suite");
    verify_cmd->add_option("--suite", suite)
        ->required()
        ->check(CLI::IsMember({"oracle", "formulas", "walk", "paper-examples"}));
    verify_cmd->add_option("--n", verify_n, "variables (oracle) or largest n (walk)")->check(CLI::Range(2, 40));
    verify_cmd->add_option("--max-deg", max_deg, "largest degree (oracle)");
    verify_cmd->add_option("--which", which, "tau3, tau4, tau5 or all (formulas)");
    verify_cmd->add_option("--d", d_text, "parameter range lo..hi (formulas)");
    verify_cmd->add_option("--samples", samples, "instances (walk)");
    verify_cmd->add_option("--max-budget", max_budget, "largest step budget (walk)");
    verify_cmd->add_option("--seed", seed, "RNG seed (walk)");

    std::size_t conj_n = 0;
    bool conj_json = false;
    auto* conj_cmd = app.add_subcommand("conjecture", "tau_n(x2^d) / C(tau_{n-1}(x2^d), 2) over a range of d");
    conj_cmd->add_option("--n", conj_n)->required()->check(CLI::Range(3, 40));
    conj_cmd->add_option("--d", d_text, "range lo..hi")->required();
    conj_cmd->add_flag("--json", conj_json, "JSON output");
    conj_cmd->add_option("--cache", cache_path, "JSON-lines cache file (default $GOTZ_CACHE)");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (tau_cmd->parsed()) {
            const auto u = gotz::parse_any(mono, c.n);
            auto cache = open_cache(cache_path);
            gotz::TauOptions opts{trace_options(trace), cache.get()};
            const gotz::ThresholdReport rep = gotz::tau(u, opts);
            if (c.as_json)
                print(gotz::to_json(rep));
            else
                std::cout << rep.threshold() << '\n';
        }
        else if (gotz_cmd->parsed()) {
            const auto w = gotz::is_gotzmann(gotz::parse_any(mono, c.n));
            if (c.as_json)
                print(gotz::to_json(w));
            else
                std::cout << (w.is_gotzmann ? "true" : "false") << '\n';
        }
        else if (mg_cmd->parsed()) {
            const auto u = gotz::parse_any(mono, c.n);
            const auto m = gotz::mg_shifted(u, gotz::parse_decimal(mg_t));
            if (c.as_json)
                print(gotz::json{{"u", gotz::format(u)}, {"t", mg_t}, {"mg", gotz::format(m)},
                                 {"degree", gotz::deg(m).str()}});
            else
                std::cout << gotz::format(m) << '\n';
        }
        else if (mc_cmd->parsed()) {
            const auto u = gotz::parse_any(mono, c.n);
            const auto w = gotz::cogap_walk(u);
            if (c.as_json)
                print(gotz::json{{"u", gotz::format(u)}, {"gap_count", w.gap_count.str()},
                                 {"u_tilde", gotz::format(w.u_tilde)}, {"mc", gotz::format(w.mc)}});
            else
                std::cout << gotz::format(w.mc) << '\n';
        }
        else if (cost_cmd->parsed()) {
            const auto u = gotz::parse_any(mono, c.n);
            const auto v = gotz::parse_any(mono2, c.n);
            const auto m = gotz::cost_between(u, v);
            if (c.as_json)
                print(gotz::json{{"u", gotz::format(u)}, {"v", gotz::format(v)}, {"cost", gotz::format(m)}});
            else
                std::cout << gotz::format(m) << '\n';
        }
        else if (pred_cmd->parsed()) {
            const auto u = gotz::parse_any(mono, c.n);
            const gotz::BigInt budget = gotz::parse_decimal(steps);
            if (budget > gotz::lex_rank(u) - 1)
                throw gotz::domain_error(gotz::format(u) + " has only " + (gotz::lex_rank(u) - 1).str() +
                                         " lex predecessors");
            const auto st = gotz::advance(u, budget, trace_options(trace));
            if (c.as_json)
                print(gotz::to_json(st));
            else
                std::cout << gotz::format(st.current) << '\n';
        }
        else if (sigma_cmd->parsed()) {
            const auto u = gotz::parse_any(mono, c.n);
            const auto s = gotz::sigma_pow(u, gotz::parse_decimal(sigma_t));
            if (c.as_json)
                print(gotz::json{{"u", gotz::format(u)}, {"t", sigma_t}, {"sigma", gotz::format(s)}});
            else
                std::cout << gotz::format(s) << '\n';
        }
        else if (verify_cmd->parsed()) {
            gotz::SuiteResult r;
            if (suite == "paper-examples")
                r = gotz::verify_worked_examples();
            else if (suite == "oracle")
                r = gotz::verify_oracle(verify_n, max_deg);
            else if (suite == "formulas") {
                const Range d = parse_range(d_text);
                r = gotz::verify_formulas(which, d.lo, d.hi);
            }
            else
                r = gotz::verify_walk(verify_n, samples, max_budget, seed);
            print(r.to_json());
            return r.passed() ? exit_ok : exit_failed;
        }
        else if (conj_cmd->parsed()) {
            const Range d = parse_range(d_text);
            auto cache = open_cache(cache_path);
            gotz::TauOptions opts;
            opts.memo = cache.get();
            const auto rep = gotz::conjecture_scan(conj_n, d.lo, d.hi, opts);
            if (conj_json) {
                print(gotz::to_json(rep));
                return exit_ok;
            }
            std::cout << "n = " << rep.n << ", conjectured degree " << rep.conjectured_degree
                      << ", leading coefficient " << gotz::to_string(rep.conjectured_leading) << '\n';
            std::cout << std::left << std::setw(4) << "d" << std::setw(22) << ("tau_" + std::to_string(rep.n))
                      << std::setw(22) << ("tau_" + std::to_string(rep.n - 1)) << "ratio\n";
            for (const auto& row : rep.rows) {
                std::cout << std::setw(4) << row.d << std::setw(22) << row.tau_n << std::setw(22) << row.tau_prev;
                if (row.ratio) {
                    std::ostringstream approx;
                    approx << std::fixed << std::setprecision(6) << row.ratio->convert_to<double>();
                    std::cout << gotz::to_string(*row.ratio) << "  (~" << approx.str() << ")";
                }
                else
                    std::cout << "-";
                std::cout << '\n';
            }
            if (rep.interpolant)
                std::cout << "interpolant: " << gotz::to_string(*rep.interpolant, "d") << '\n';
            else
                std::cout << "interpolant: needs more than " << rep.conjectured_degree << " points\n";
        }
    }
    catch (const gotz::parse_error& e) {
        std::cerr << "gotz: parse error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const gotz::domain_error& e) {
        std::cerr << "gotz: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const gotz::cap_exceeded& e) {
        std::cerr << "gotz: resource cap: " << e.what() << '\n';
        return exit_cap;
    }
    catch (const std::exception& e) {
        std::cerr << "gotz: " << e.what() << '\n';
        return exit_failed;
    }
    return exit_ok;
}
