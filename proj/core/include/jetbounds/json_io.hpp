#ifndef JETBOUNDS_JSON_IO_HPP
#define JETBOUNDS_JSON_IO_HPP

#include "jetbounds/annex.hpp"
#include "jetbounds/bounds.hpp"
#include "jetbounds/morse.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace jetbounds {

// Machine-readable output keeps every rational as an exact "p/q"
// string; decimal renderings are separate and marked approximate.

inline nlohmann::json rational_json(const Rational& q)
{
    return to_string(q);
}

inline nlohmann::json rational_list_json(const std::vector<Rational>& v)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& q : v)
        out.push_back(to_string(q));
    return out;
}

inline double approx(const Rational& q)
{
    return static_cast<double>(q);
}

inline nlohmann::json to_json(const MorsePolynomial& mp)
{
    nlohmann::json j;
    j["n"] = mp.params.n;
    j["k"] = mp.params.k;
    j["eps"] = to_string(mp.params.eps);
    std::vector<Rational> raw(mp.raw.coeffs().begin(), mp.raw.coeffs().end());
    j["raw"] = rational_list_json(raw);
    j["q"] = rational_list_json(mp.q);
    return j;
}

inline MorsePolynomial morse_from_json(const nlohmann::json& j)
{
    JetParams params(j.at("n").get<unsigned>(), j.at("k").get<unsigned>(),
                     parse_rational(j.at("eps").get<std::string>()));
    std::vector<Rational> raw;
    for (const auto& s : j.at("raw"))
        raw.push_back(parse_rational(s.get<std::string>()));
    std::vector<Rational> q;
    for (const auto& s : j.at("q"))
        q.push_back(parse_rational(s.get<std::string>()));
    return MorsePolynomial{params, Poly(std::move(raw)), std::move(q)};
}

inline nlohmann::json to_json(const BoundsReport& r)
{
    nlohmann::json j;
    j["n"] = r.params.n;
    j["k"] = r.params.k;
    j["eps"] = to_string(r.params.eps);
    j["q"] = rational_list_json(r.q);
    j["majorants_r"] = rational_list_json(r.r.R);
    j["majorants_d"] = rational_list_json(r.r.D);
    j["d_eps"] = to_string(r.d_eps);
    // The Step-4 chain also admits the weaker constant 27/4 stated at its
    // end; 27/2 is the value the R-chain actually delivers, so that is
    // what d_eps uses. Both candidates are kept visible here.
    j["d_eps_candidates"] = {to_string(Rational(27, 2)), to_string(Rational(27, 4))};
    j["fujiwara_m"] = to_string(r.fujiwara_m);
    j["threshold_2m"] = to_string(r.threshold_2m);
    j["scan_threshold"] = r.scan_threshold.str();
    j["ggl_bound"] = to_string(r.ggl_bound);
    j["monomial_bound"] = to_string(r.monomial_bound);
    j["kobayashi_bound"] = to_string(r.kobayashi_bound);
    j["monomial_bound_approx"] = approx(r.monomial_bound);
    j["kobayashi_bound_approx"] = approx(r.kobayashi_bound);
    nlohmann::json verdicts = nlohmann::json::array();
    for (const auto& v : r.verdicts) {
        nlohmann::json jv;
        jv["name"] = v.name;
        jv["holds"] = v.holds;
        if (!v.detail.empty())
            jv["detail"] = v.detail;
        verdicts.push_back(jv);
    }
    j["verdicts"] = verdicts;
    j["all_verdicts"] = r.all_verdicts();
    return j;
}

inline nlohmann::json to_json(const ConvergenceReport& r)
{
    nlohmann::json j;
    nlohmann::json samples = nlohmann::json::array();
    for (const auto& s : r.samples) {
        nlohmann::json js;
        js["m"] = s.m;
        js["ratio"] = to_string(s.ratio);
        js["ratio_approx"] = approx(s.ratio);
        samples.push_back(js);
    }
    j["samples"] = samples;
    j["tolerance"] = to_string(r.tolerance);
    j["converged"] = r.converged;
    j["monotone"] = r.monotone;
    return j;
}

inline nlohmann::json to_json(const WhitneyVerdict& v)
{
    nlohmann::json j;
    j["equal"] = v.equal;
    j["lhs"] = to_string(v.lhs);
    j["rhs"] = to_string(v.rhs);
    j["leading"] = to_string(v.fit.leading);
    return j;
}

} // namespace jetbounds

#endif
