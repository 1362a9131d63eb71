#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gwsnu/cli_config.hpp"
#include "gwsnu/numerov.hpp"
#include "gwsnu/spectrum.hpp"
#include "gwsnu/verify.hpp"
#include "gwsnu/wavefun.hpp"

namespace {

using namespace gwsnu;
using nlohmann::ordered_json;

std::string fmt_sci(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.16e", v);
    return buf;
}

std::string csv_value(const ordered_json& v) {
    if (v.is_null()) return "nan";
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    if (v.is_number_float()) return fmt_sci(v.get<double>());
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

std::string render_csv(const ordered_json& meta, const std::vector<std::string>& cols,
                       const std::vector<ordered_json>& rows) {
    std::string out;
    for (auto it = meta.begin(); it != meta.end(); ++it)
        out += "# " + it.key() + " = " + csv_value(it.value()) + "\n";
    for (size_t i = 0; i < cols.size(); ++i) out += (i ? "," : "") + cols[i];
    out += "\n";
    for (const auto& r : rows) {
        for (size_t i = 0; i < cols.size(); ++i)
            out += (i ? "," : "") + csv_value(r.at(cols[i]));
        out += "\n";
    }
    return out;
}

std::string render_json(const ordered_json& meta, const std::vector<ordered_json>& rows) {
    ordered_json j;
    j["meta"] = meta;
    j["rows"] = ordered_json::array();
    for (const auto& r : rows) j["rows"].push_back(r);
    return j.dump(2) + "\n";
}

std::string render_table(const RunConfig& rc, const ordered_json& meta,
                         const std::vector<std::string>& cols,
                         const std::vector<ordered_json>& rows) {
    return rc.format == "json" ? render_json(meta, rows) : render_csv(meta, cols, rows);
}

void write_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        f << content;
        if (!f) throw std::runtime_error("cannot write " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("cannot move output into place: " + path);
}

void emit(const RunConfig& rc, const std::string& content) {
    if (rc.out.empty())
        std::cout << content;
    else
        write_atomic(rc.out, content);
}

ordered_json well_meta(const PotentialParams& pp) {
    ordered_json m;
    m["v0_mev"] = pp.v0;
    m["q"] = pp.q;
    m["beta1_inv_fm"] = pp.beta1;
    m["c_mev"] = pp.c;
    m["mu_mev"] = pp.mu;
    return m;
}

int cmd_potential(const RunConfig& rc) {
    validate_common(rc);
    if (!(rc.r_max > 0.0)) throw UsageError("r-max must be positive");
    const PotentialParams pp = well_params(rc);
    ordered_json meta = well_meta(pp);
    meta["well_radius_fm"] = well_radius(pp);
    meta["r_max_fm"] = rc.r_max;
    meta["points"] = rc.points;
    std::vector<ordered_json> rows;
    for (int i = 0; i < rc.points; ++i) {
        const double r = rc.r_max * static_cast<double>(i) / (rc.points - 1);
        ordered_json row;
        row["r_fm"] = r;
        row["V_MeV"] = potential_eval(pp, r);
        rows.push_back(row);
    }
    emit(rc, render_table(rc, meta, {"r_fm", "V_MeV"}, rows));
    return 0;
}

int cmd_spectrum(const RunConfig& rc) {
    validate_common(rc);
    const PotentialParams pp = well_params(rc);
    const FractionalOrder fo = order_of(rc);
    const DimensionlessParams shape = dimensionless(pp);
    ordered_json meta = well_meta(pp);
    meta["alpha"] = fo.alpha;
    meta["beta_frac"] = fo.beta_frac;
    meta["energy_scale_mev"] = energy_scale(pp);
    meta["beta_dimensionless"] = shape.beta_pot;
    meta["gamma_dimensionless"] = shape.gamma_p;
    meta["middle_sign_convention"] =
        "roots coincide with the +1 middle-sign closed form at alpha = 1";
    std::vector<ordered_json> rows;
    for (int n = 0; n <= rc.n_max; ++n) {
        const LevelOutcome lo = solve_eps_fractional(shape, fo, n);
        if (!lo.feasible) {
            meta["infeasible_from_n"] = n;
            meta["infeasible_reason"] = lo.reason;
            break;
        }
        if (n == 0) {
            meta["scan_window_lo"] = lo.window_lo;
            meta["scan_window_hi"] = lo.window_hi;
        }
        ordered_json row;
        row["n"] = n;
        row["eps_n"] = lo.eps;
        row["E_MeV"] = eps_to_energy(lo.eps, pp);
        row["feasible"] = true;
        row["residual"] = lo.residual;
        rows.push_back(row);
    }
    if (rows.empty()) meta["note"] = "no level satisfies the quantization condition";
    emit(rc, render_table(rc, meta, {"n", "eps_n", "E_MeV", "feasible", "residual"}, rows));
    return 0;
}

int cmd_wavefunction(const RunConfig& rc) {
    validate_common(rc);
    if (!(rc.r_max > 0.0)) throw UsageError("r-max must be positive");
    const PotentialParams pp = well_params(rc);
    const FractionalOrder fo = order_of(rc);
    if (!rc.nu_space && fo.alpha != 1.0)
        throw UsageError(
            "r-space wavefunction requires alpha = 1: the substitution x = exp(-2 beta1 r) is "
            "exact only there; pass --nu-space to sample in the transformed variable");
    const DimensionlessParams shape = dimensionless(pp);
    const LevelOutcome lo = solve_eps_fractional(shape, fo, rc.n);
    ordered_json meta = well_meta(pp);
    meta["alpha"] = fo.alpha;
    meta["beta_frac"] = fo.beta_frac;
    meta["n"] = rc.n;
    std::vector<ordered_json> rows;
    if (!lo.feasible) {
        meta["infeasible_reason"] = lo.reason;
        meta["note"] = "requested level does not satisfy the quantization condition";
        emit(rc, render_table(rc, meta,
                              rc.nu_space ? std::vector<std::string>{"x", "R"}
                                          : std::vector<std::string>{"r_fm", "R"},
                              rows));
        return 0;
    }
    meta["eps_n"] = lo.eps;
    meta["E_MeV"] = eps_to_energy(lo.eps, pp);
    const WavefunctionSpec ws = build_spec(lo.nu, rc.n);
    if (rc.nu_space) {
        meta["normalization"] = "unnormalized transformed-variable samples";
        for (int i = 0; i < rc.points; ++i) {
            const double x = ws.x_support * static_cast<double>(i) / (rc.points - 1);
            ordered_json row;
            row["x"] = x;
            row["R"] = radial_R_x(ws, x);
            rows.push_back(row);
        }
        emit(rc, render_table(rc, meta, {"x", "R"}, rows));
        return 0;
    }
    const double norm_r_max = std::max(20.0, rc.r_max);
    const WavefunctionSpec wn = normalize(ws, pp.beta1, norm_r_max);
    meta["normalization"] = "unit integral of R^2 dr";
    meta["norm_domain_fm"] = norm_r_max;
    meta["norm_constant"] = wn.norm_const;
    for (int i = 0; i < rc.points; ++i) {
        const double r = rc.r_max * static_cast<double>(i) / (rc.points - 1);
        ordered_json row;
        row["r_fm"] = r;
        row["R"] = radial_R(wn, pp.beta1, r);
        rows.push_back(row);
    }
    emit(rc, render_table(rc, meta, {"r_fm", "R"}, rows));
    return 0;
}

int cmd_scan_alpha(const RunConfig& rc) {
    validate_common(rc);
    if (!(rc.alpha_min > 0.0) || !(rc.alpha_max <= 1.0) || !(rc.alpha_min <= rc.alpha_max))
        throw UsageError("alpha scan range must satisfy 0 < alpha-min <= alpha-max <= 1");
    if (rc.steps < 2 && rc.alpha_min != rc.alpha_max)
        throw UsageError("steps must be at least 2 for a nontrivial alpha range");
    if (rc.steps < 1) throw UsageError("steps must be at least 1");
    const PotentialParams pp = well_params(rc);
    const DimensionlessParams shape = dimensionless(pp);
    ordered_json meta = well_meta(pp);
    meta["beta_frac"] = rc.beta_frac;
    meta["n"] = rc.n;
    meta["alpha_min"] = rc.alpha_min;
    meta["alpha_max"] = rc.alpha_max;
    meta["steps"] = rc.steps;
    std::vector<ordered_json> rows;
    int feasible_count = 0;
    for (int i = 0; i < rc.steps; ++i) {
        const double a = rc.steps == 1 ? rc.alpha_min
                                       : rc.alpha_min + (rc.alpha_max - rc.alpha_min) *
                                                            static_cast<double>(i) /
                                                            (rc.steps - 1);
        const FractionalOrder fo = FractionalOrder::make(a, rc.beta_frac);
        const LevelOutcome lo = solve_eps_fractional(shape, fo, rc.n);
        ordered_json row;
        row["alpha"] = a;
        if (lo.feasible) {
            row["eps_n"] = lo.eps;
            row["E_MeV"] = eps_to_energy(lo.eps, pp);
            ++feasible_count;
        } else {
            row["eps_n"] = nullptr;
            row["E_MeV"] = nullptr;
        }
        row["feasible"] = lo.feasible;
        rows.push_back(row);
    }
    meta["feasible_rows"] = feasible_count;
    if (feasible_count < rc.steps)
        meta["note"] = "rows with feasible = false have no quantization root at that order";
    emit(rc, render_table(rc, meta, {"alpha", "eps_n", "E_MeV", "feasible"}, rows));
    return 0;
}

int cmd_verify(const RunConfig& rc, bool have_well, bool c_given) {
    PotentialParams pp = have_well
                             ? well_params(rc)
                             : nuclear_params(56, 1.285, 0.65, c_given ? rc.c : 10.0, rc.mu);
    const SuiteResult s = run_suite(pp);
    std::cout << report_text(s);
    const std::string path = rc.out.empty() ? "verify-report.json" : rc.out;
    write_atomic(path, report_json(s));
    std::cout << "report written to " << path << "\n";
    return s.all_pass ? 0 : 1;
}

struct FlagSet {
    RunConfig rc;
    std::string config_path;
    CLI::App* sub = nullptr;

    void attach(CLI::App* s) {
        sub = s;
        s->add_option("--alpha", rc.alpha, "fractional order of the radial operator (0, 1]");
        s->add_option("--beta-frac", rc.beta_frac, "auxiliary order in the scale factor (0, 1]");
        s->add_option("--v0", rc.v0, "well depth in MeV");
        s->add_option("--q", rc.q, "deformation parameter");
        s->add_option("--beta1", rc.beta1, "inverse-diffuseness 1/(2a) in 1/fm");
        s->add_option("--c", rc.c, "surface term strength in MeV");
        s->add_option("--mu", rc.mu, "reduced mass in MeV");
        s->add_option("--a-mass", rc.a_mass, "mass number shortcut for the well geometry");
        s->add_option("--r0", rc.r0, "radius coefficient in fm for the shortcut");
        s->add_option("--a-diff", rc.a_diff, "diffuseness in fm for the shortcut");
        s->add_option("--n", rc.n, "level index");
        s->add_option("--n-max", rc.n_max, "highest level index to enumerate");
        s->add_option("--r-max", rc.r_max, "outer radius in fm for sampled curves");
        s->add_option("--points", rc.points, "sample count for curves");
        s->add_option("--alpha-min", rc.alpha_min, "lower end of the alpha scan");
        s->add_option("--alpha-max", rc.alpha_max, "upper end of the alpha scan");
        s->add_option("--steps", rc.steps, "row count of the alpha scan");
        s->add_option("--format", rc.format, "output format: csv or json");
        s->add_option("--out", rc.out, "output path (stdout when omitted)");
        s->add_flag("--nu-space", rc.nu_space, "sample the transformed variable instead of r");
        s->add_option("--config", config_path, "flat JSON config file; flags override it");
    }

    bool given(const char* name) const { return sub->count(name) > 0; }

    RunConfig resolve() const {
        if (config_path.empty()) return rc;
        std::ifstream f(config_path);
        if (!f) throw UsageError("cannot open config file: " + config_path);
        nlohmann::json j;
        try {
            f >> j;
        } catch (const nlohmann::json::exception& e) {
            throw UsageError(std::string("config file is not valid JSON: ") + e.what());
        }
        RunConfig merged = config_from_json(j);
        if (given("--alpha")) merged.alpha = rc.alpha;
        if (given("--beta-frac")) merged.beta_frac = rc.beta_frac;
        if (given("--v0")) merged.v0 = rc.v0;
        if (given("--q")) merged.q = rc.q;
        if (given("--beta1")) merged.beta1 = rc.beta1;
        if (given("--c")) merged.c = rc.c;
        if (given("--mu")) merged.mu = rc.mu;
        if (given("--a-mass")) merged.a_mass = rc.a_mass;
        if (given("--r0")) merged.r0 = rc.r0;
        if (given("--a-diff")) merged.a_diff = rc.a_diff;
        if (given("--n")) merged.n = rc.n;
        if (given("--n-max")) merged.n_max = rc.n_max;
        if (given("--r-max")) merged.r_max = rc.r_max;
        if (given("--points")) merged.points = rc.points;
        if (given("--alpha-min")) merged.alpha_min = rc.alpha_min;
        if (given("--alpha-max")) merged.alpha_max = rc.alpha_max;
        if (given("--steps")) merged.steps = rc.steps;
        if (given("--format")) merged.format = rc.format;
        if (given("--out")) merged.out = rc.out;
        if (given("--nu-space")) merged.nu_space = rc.nu_space;
        return merged;
    }
};

template <class Fn>
int guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bound states of the generalized Woods-Saxon well under a "
                 "generalized fractional radial operator"};
    app.require_subcommand(1);

    FlagSet f_pot, f_spec, f_wav, f_scan, f_ver;
    f_pot.attach(app.add_subcommand("potential", "sample the potential curve"));
    f_spec.attach(app.add_subcommand("spectrum", "analytic level table"));
    f_wav.attach(app.add_subcommand("wavefunction", "sample one bound-state function"));
    f_scan.attach(app.add_subcommand("scan-alpha", "level trajectory across fractional orders"));
    f_ver.attach(app.add_subcommand("verify", "run the verification suite and write its report"));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (f_pot.sub->parsed()) return guarded([&] { return cmd_potential(f_pot.resolve()); });
    if (f_spec.sub->parsed()) return guarded([&] { return cmd_spectrum(f_spec.resolve()); });
    if (f_wav.sub->parsed()) return guarded([&] { return cmd_wavefunction(f_wav.resolve()); });
    if (f_scan.sub->parsed()) return guarded([&] { return cmd_scan_alpha(f_scan.resolve()); });
    if (f_ver.sub->parsed())
        return guarded([&] {
            const RunConfig rc = f_ver.resolve();
            const bool have_well = std::isfinite(rc.v0) || std::isfinite(rc.q) ||
                                   std::isfinite(rc.beta1) || rc.a_mass > 0;
            const bool c_given = f_ver.given("--c") ||
                                 (!f_ver.config_path.empty() && rc.c != 0.0);
            return cmd_verify(rc, have_well, c_given);
        });
    return 2;
}
