#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "gfd.hpp"
#include "spectrum.hpp"

namespace gwsnu {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Everything a command run needs, fed either from flags or from a flat JSON
// config file whose keys equal the long flags with dashes as underscores.
struct RunConfig {
    double alpha = 1.0;
    double beta_frac = 1.0;
    double v0 = std::nan("");
    double q = std::nan("");
    double beta1 = std::nan("");
    int a_mass = 0;
    double r0 = 1.285;
    double a_diff = 0.65;
    double c = 0.0;
    double mu = 939.0;
    int n = 0;
    int n_max = 8;
    double r_max = 12.0;
    int points = 600;
    double alpha_min = 0.7;
    double alpha_max = 1.0;
    int steps = 7;
    std::string format = "csv";
    std::string out;
    bool nu_space = false;
};

inline bool config_equal(const RunConfig& a, const RunConfig& b) {
    auto deq = [](double x, double y) {
        if (std::isnan(x) && std::isnan(y)) return true;
        return x == y;
    };
    return deq(a.alpha, b.alpha) && deq(a.beta_frac, b.beta_frac) && deq(a.v0, b.v0) &&
           deq(a.q, b.q) && deq(a.beta1, b.beta1) && a.a_mass == b.a_mass &&
           deq(a.r0, b.r0) && deq(a.a_diff, b.a_diff) && deq(a.c, b.c) && deq(a.mu, b.mu) &&
           a.n == b.n && a.n_max == b.n_max && deq(a.r_max, b.r_max) && a.points == b.points &&
           deq(a.alpha_min, b.alpha_min) && deq(a.alpha_max, b.alpha_max) &&
           a.steps == b.steps && a.format == b.format && a.out == b.out &&
           a.nu_space == b.nu_space;
}

inline nlohmann::ordered_json config_to_json(const RunConfig& rc) {
    nlohmann::ordered_json j;
    j["alpha"] = rc.alpha;
    j["beta_frac"] = rc.beta_frac;
    if (std::isfinite(rc.v0)) j["v0"] = rc.v0;
    if (std::isfinite(rc.q)) j["q"] = rc.q;
    if (std::isfinite(rc.beta1)) j["beta1"] = rc.beta1;
    if (rc.a_mass > 0) j["a_mass"] = rc.a_mass;
    j["r0"] = rc.r0;
    j["a_diff"] = rc.a_diff;
    j["c"] = rc.c;
    j["mu"] = rc.mu;
    j["n"] = rc.n;
    j["n_max"] = rc.n_max;
    j["r_max"] = rc.r_max;
    j["points"] = rc.points;
    j["alpha_min"] = rc.alpha_min;
    j["alpha_max"] = rc.alpha_max;
    j["steps"] = rc.steps;
    j["format"] = rc.format;
    if (!rc.out.empty()) j["out"] = rc.out;
    j["nu_space"] = rc.nu_space;
    return j;
}

inline RunConfig config_from_json(const nlohmann::json& j) {
    RunConfig rc;
    try {
        if (j.contains("alpha")) rc.alpha = j.at("alpha").get<double>();
        if (j.contains("beta_frac")) rc.beta_frac = j.at("beta_frac").get<double>();
        if (j.contains("v0")) rc.v0 = j.at("v0").get<double>();
        if (j.contains("q")) rc.q = j.at("q").get<double>();
        if (j.contains("beta1")) rc.beta1 = j.at("beta1").get<double>();
        if (j.contains("a_mass")) rc.a_mass = j.at("a_mass").get<int>();
        if (j.contains("r0")) rc.r0 = j.at("r0").get<double>();
        if (j.contains("a_diff")) rc.a_diff = j.at("a_diff").get<double>();
        if (j.contains("c")) rc.c = j.at("c").get<double>();
        if (j.contains("mu")) rc.mu = j.at("mu").get<double>();
        if (j.contains("n")) rc.n = j.at("n").get<int>();
        if (j.contains("n_max")) rc.n_max = j.at("n_max").get<int>();
        if (j.contains("r_max")) rc.r_max = j.at("r_max").get<double>();
        if (j.contains("points")) rc.points = j.at("points").get<int>();
        if (j.contains("alpha_min")) rc.alpha_min = j.at("alpha_min").get<double>();
        if (j.contains("alpha_max")) rc.alpha_max = j.at("alpha_max").get<double>();
        if (j.contains("steps")) rc.steps = j.at("steps").get<int>();
        if (j.contains("format")) rc.format = j.at("format").get<std::string>();
        if (j.contains("out")) rc.out = j.at("out").get<std::string>();
        if (j.contains("nu_space")) rc.nu_space = j.at("nu_space").get<bool>();
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("config field has the wrong type: ") + e.what());
    }
    return rc;
}

// Resolves the well parameters, enforcing that exactly one of the explicit
// (v0, q, beta1) triple or the (a_mass, r0, a_diff) shortcut is present.
inline PotentialParams well_params(const RunConfig& rc) {
    const bool any_explicit =
        std::isfinite(rc.v0) || std::isfinite(rc.q) || std::isfinite(rc.beta1);
    const bool shortcut = rc.a_mass > 0;
    if (any_explicit && shortcut)
        throw UsageError("give either v0/q/beta1 or a-mass/r0/a-diff, not both");
    if (!any_explicit && !shortcut)
        throw UsageError("well parameters missing: give v0/q/beta1 or a-mass (with r0, a-diff)");
    if (shortcut) return nuclear_params(rc.a_mass, rc.r0, rc.a_diff, rc.c, rc.mu);
    if (!(std::isfinite(rc.v0) && std::isfinite(rc.q) && std::isfinite(rc.beta1)))
        throw UsageError("explicit well parameters need all three of v0, q, beta1");
    return PotentialParams::make(rc.v0, rc.q, rc.beta1, rc.c, rc.mu);
}

inline FractionalOrder order_of(const RunConfig& rc) {
    try {
        return FractionalOrder::make(rc.alpha, rc.beta_frac);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

inline void validate_common(const RunConfig& rc) {
    if (rc.format != "csv" && rc.format != "json")
        throw UsageError("format must be csv or json");
    if (rc.points < 2) throw UsageError("points must be at least 2");
    if (rc.n < 0) throw UsageError("n must be >= 0");
    if (rc.n_max < 0) throw UsageError("n-max must be >= 0");
}

}  // namespace gwsnu
