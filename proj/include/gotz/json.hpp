#pragma once

// JSON forms of monomials, sets and reports. Every big integer is written as
// a decimal string so that consumers never truncate it.

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "gotz/bigint.hpp"
#include "gotz/combinatorics.hpp"
#include "gotz/error.hpp"
#include "gotz/interpolation.hpp"
#include "gotz/maxgen.hpp"
#include "gotz/monomial.hpp"
#include "gotz/paths.hpp"
#include "gotz/threshold.hpp"

namespace gotz {

using json = nlohmann::json;

/// Alternative monomial input: an array of n decimal-string exponents.
inline Monomial monomial_from_json(const json& j, std::size_t n)
{
    if (!j.is_array())
        throw parse_error("monomial JSON must be an array of decimal strings");
    if (j.size() != n)
        throw parse_error("monomial JSON has " + std::to_string(j.size()) + " exponents, expected " +
                          std::to_string(n));
    std::vector<BigInt> exps;
    exps.reserve(n);
    for (const auto& e : j) {
        if (!e.is_string())
            throw parse_error("monomial JSON exponents must be decimal strings");
        exps.push_back(parse_decimal(e.get<std::string>()));
    }
    return Monomial(std::move(exps));
}

/// Parses either the text grammar or, when the input starts with '[', the
/// JSON exponent array.
inline Monomial parse_any(const std::string& text, std::size_t n)
{
    if (!text.empty() && text.front() == '[') {
        json j;
        try {
            j = json::parse(text);
        }
        catch (const json::parse_error& e) {
            throw parse_error(std::string("invalid monomial JSON: ") + e.what());
        }
        return monomial_from_json(j, n);
    }
    return parse(text, n);
}

inline json exponents_to_json(const Monomial& u)
{
    json j = json::array();
    for (const auto& e : u.exponents())
        j.push_back(e.str());
    return j;
}

inline json to_json(const MonomialSet& set)
{
    json j = json::array();
    for (const auto& u : set)
        j.push_back(format(u));
    return j;
}

inline json to_json(const MgDecomposition& dec)
{
    return json{{"base", format(dec.base)}, {"xn_exp", dec.xn_exp.str()}, {"n", dec.n}, {"t", dec.t.str()}};
}

inline json to_json(const WalkState& st)
{
    return json{{"current", format(st.current)}, {"cost", format(st.cost)}, {"steps", st.steps.str()}};
}

inline json to_json(const JumpEvent& ev)
{
    return json{{"from", format(ev.from)},
                {"to", format(ev.to)},
                {"block_cost", format(ev.block_cost)},
                {"steps_so_far", ev.steps_so_far.str()}};
}

inline json to_json(const GotzmannWitness& w)
{
    json j{{"u", format(w.u)},
           {"n", w.u.n()},
           {"mg", format(w.mg)},
           {"u_tilde", format(w.u_tilde)},
           {"mc", format(w.mc)},
           {"gap_count", w.gap_count.str()},
           {"is_gotzmann", w.is_gotzmann}};
    if (!w.diagnostic.empty())
        j["diagnostic"] = w.diagnostic;
    return j;
}

inline json to_json(const ThresholdReport& r)
{
    json j{{"u", format(r.u)},
           {"u0", format(r.u0)},
           {"n", r.n},
           {"shift", r.shift.str()},
           {"t_star", r.t_star.str()},
           {"f", r.f.str()},
           {"h", r.h.str()},
           {"k", r.k.str()},
           {"delta", r.delta.str()},
           {"tau", r.tau.str()},
           {"threshold", r.threshold().str()}};
    j["z"] = r.z ? json(format(*r.z)) : json(nullptr);
    j["sub_report"] = r.sub_report ? to_json(*r.sub_report) : json(nullptr);
    return j;
}

inline ThresholdReport report_from_json(const json& j)
{
    try {
        const auto n = j.at("n").get<std::size_t>();
        ThresholdReport r(parse(j.at("u").get<std::string>(), n), parse(j.at("u0").get<std::string>(), n), n);
        r.shift = parse_decimal(j.at("shift").get<std::string>());
        r.t_star = parse_decimal(j.at("t_star").get<std::string>());
        r.f = parse_decimal(j.at("f").get<std::string>());
        r.h = parse_decimal(j.at("h").get<std::string>());
        r.k = parse_decimal(j.at("k").get<std::string>());
        r.delta = parse_decimal(j.at("delta").get<std::string>());
        r.tau = parse_decimal(j.at("tau").get<std::string>());
        if (!j.at("z").is_null())
            r.z = parse(j.at("z").get<std::string>(), r.n);
        if (!j.at("sub_report").is_null())
            r.sub_report = std::make_shared<const ThresholdReport>(report_from_json(j.at("sub_report")));
        return r;
    }
    catch (const json::exception& e) {
        throw parse_error(std::string("malformed threshold report: ") + e.what());
    }
}

inline json to_json(const Polynomial& p)
{
    json j = json::array();
    for (const auto& c : p)
        j.push_back(to_string(c));
    return j;
}

inline json to_json(const ConjectureReport& rep)
{
    json rows = json::array();
    for (const auto& row : rep.rows) {
        rows.push_back(json{{"d", row.d.str()},
                            {"tau_n", row.tau_n.str()},
                            {"tau_prev", row.tau_prev.str()},
                            {"ratio", row.ratio ? json(to_string(*row.ratio)) : json(nullptr)}});
    }
    json j{{"n", rep.n},
           {"rows", rows},
           {"conjectured_degree", rep.conjectured_degree},
           {"conjectured_leading", to_string(rep.conjectured_leading)}};
    if (rep.interpolant) {
        j["interpolant"] = json{{"coefficients", to_json(*rep.interpolant)},
                                {"degree", degree(*rep.interpolant)},
                                {"text", to_string(*rep.interpolant, "d")}};
    }
    else {
        j["interpolant"] = nullptr;
    }
    return j;
}

} // namespace gotz
