#pragma once

// JSON and CSV renderings of library results. Key order is fixed so repeated
// runs produce byte-identical output.

#include "daisy/asymptotics.hpp"
#include "daisy/bounds.hpp"
#include "daisy/cyclic.hpp"
#include "daisy/interval.hpp"

#include "json.hpp"

#include <cmath>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>

namespace daisy {

using Json = nlohmann::ordered_json;

inline Json param_to_json(const ParamValue& v)
{
    if (auto* i = std::get_if<long long>(&v)) {
        return *i;
    }
    if (auto* z = std::get_if<Integer>(&v)) {
        if (z->fits_slong_p()) {
            return static_cast<long long>(z->get_si());
        }
        return z->get_str();
    }
    return to_fraction_string(std::get<Rational>(v));
}

inline Json to_json(const BoundReport& rep)
{
    Json params = Json::object();
    for (const auto& [name, value] : rep.params) {
        params[name] = param_to_json(value);
    }
    Json j;
    j["formula"] = to_string(rep.formula);
    j["params"] = std::move(params);
    j["value"] = to_fraction_string(rep.value);
    j["decimal"] = rep.decimal();
    if (bounds_edge_count(rep.formula)) {
        Integer c = rep.ceil();
        j["ceil"] = c.fits_slong_p() ? Json(static_cast<long long>(c.get_si())) : Json(c.get_str());
    }
    j["inputs"] = rep.inputs;
    j["tag"] = to_string(rep.tag);
    return j;
}

inline Json to_json(const ShiftProfile& p)
{
    Json j;
    j["n"] = p.n;
    j["r"] = p.r;
    j["t"] = p.t;
    j["counts"] = p.counts;
    j["average"] = to_fraction_string(p.average);
    j["best_j"] = p.best_j;
    j["best_count"] = p.best_count;
    return j;
}

inline ShiftProfile shift_profile_from_json(const Json& j)
{
    ShiftProfile p;
    p.n = j.at("n").get<unsigned>();
    p.r = j.at("r").get<unsigned>();
    p.t = j.at("t").get<unsigned>();
    p.counts = j.at("counts").get<std::vector<std::uint64_t>>();
    p.average = parse_rational(j.at("average").get<std::string>());
    p.best_j = j.at("best_j").get<unsigned>();
    p.best_count = j.at("best_count").get<std::uint64_t>();
    if (p.counts.size() != p.n || p.best_j >= p.n || p.counts[p.best_j] != p.best_count) {
        throw std::invalid_argument("inconsistent shift profile JSON");
    }
    return p;
}

/// Doubles that still enclose [v.lo, v.hi].
inline Json to_json(const IntervalValue& v)
{
    double lo = static_cast<double>(v.lo);
    double hi = static_cast<double>(v.hi);
    if (static_cast<long double>(lo) > v.lo) {
        lo = std::nextafter(lo, -std::numeric_limits<double>::infinity());
    }
    if (static_cast<long double>(hi) < v.hi) {
        hi = std::nextafter(hi, std::numeric_limits<double>::infinity());
    }
    Json j;
    j["lo"] = lo;
    j["hi"] = hi;
    j["error_budget"] = static_cast<double>(v.error_budget);
    return j;
}

inline Json to_json(const SpacingEstimate& s)
{
    Json j;
    j["r"] = s.r;
    j["t"] = s.t;
    j["samples"] = s.samples;
    j["mean"] = s.mean;
    j["stderr"] = s.std_error;
    j["seed"] = s.seed;
    return j;
}

/// Rows "r,n,formula,decimal"; n is blank for reports without one.
inline std::string bounds_csv(std::span<const BoundReport> reports)
{
    std::string out = "r,n,formula,decimal\n";
    for (const auto& rep : reports) {
        const ParamValue* r = rep.param("r");
        const ParamValue* n = rep.param("n");
        out += (r ? to_string(*r) : "") + "," + (n ? to_string(*n) : "") + "," + to_string(rep.formula) + "," +
               rep.decimal() + "\n";
    }
    return out;
}

}  // namespace daisy
