#pragma once

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "numerov.hpp"
#include "spectrum.hpp"
#include "wavefun.hpp"

namespace gwsnu {

// One published closed form evaluated next to its re-derived counterpart at a
// fixed parameter point.
struct DiscrepancyRecord {
    std::string id;
    std::string quantity;
    double published;
    double rederived;
    double abs_gap;
    bool classical_match;  // whether the two forms coincide in the alpha = 1 limit
    std::string note;
};

namespace detailv {

struct FormPair {
    const char* id;
    const char* quantity;
    double published;
    double rederived;
};

// The published intermediate quantities of the bound-state derivation next to
// the pipeline values, at one parameter point.
inline std::vector<FormPair> published_form_pairs(double alpha, double beta_frac, double q,
                                                  double eps, double beta_pot, double gamma_p) {
    const FractionalOrder fo = FractionalOrder::make(alpha, beta_frac);
    const double J = fo.inv_i_sq();
    const DimensionlessParams dp = DimensionlessParams::make(eps, beta_pot, gamma_p, q);
    const GTuple g = quadratic_under_root(dp, fo);
    const double c0 = std::max(g.c0, 0.0);
    const double kappa = g.a0 + g.b0 * q + c0 * q * q;
    const double P = std::sqrt(kappa) + q * std::sqrt(c0);

    const double A1p = (-2.0 + J) * q * q + 4.0 * J * eps * q * q;
    const double A2p = 0.5 * (-2.0 + J) * (alpha - J) * q - J * (2.0 * eps * q - beta_pot * q - gamma_p);
    const double A3p = 4.0 * (alpha - J) * q + 4.0 * (eps - beta_pot);
    const double radp = (8.0 * A2p + 4.0 * A3p * q) * (8.0 * A2p + 4.0 * A3p * q) -
                        16.0 * (A2p * A2p - 4.0 * A1p * A3p);
    const double wminus_pub =
        radp >= 0.0 ? (-(8.0 * A2p + 4.0 * A3p * q) - std::sqrt(radp)) / 8.0 : std::nan("");
    const double wminus_red = -(g.b0 + 2.0 * c0 * q) - 2.0 * std::sqrt(std::max(c0 * kappa, 0.0));

    return {
        {"interior-slope", "t coefficient of the pi_f interior line",
         0.5 * (-2.0 + J) * q, g.g1},
        {"underroot-t2", "t^2 coefficient of the quadratic under the root",
         A1p, 4.0 * g.a0},
        {"underroot-t1", "t coefficient of the quadratic under the root",
         A2p, g.b0},
        {"underroot-t0", "constant of the quadratic under the root",
         A3p, 4.0 * c0},
        {"double-zero-lower-root", "lower root of the double-zero condition",
         wminus_pub, wminus_red},
        {"ground-shift-const", "square-root constant entering the weight exponent",
         2.0 * std::sqrt(std::max((eps - beta_pot) + (alpha - J) * (alpha - J), 0.0)),
         2.0 * std::sqrt(c0)},
        {"weight-slope-coeff", "t coefficient in the weight exponent pair",
         2.0 * (alpha - 1.0) * q - 2.0 * P, -2.0 * P},
        {"prefactor-x-exponent", "x exponent of the wavefunction prefactor",
         0.5 * (alpha - J) + std::sqrt(std::max((eps - beta_pot) + (alpha - J) * (alpha - J), 0.0)),
         g.g0 + std::sqrt(c0)},
        {"prefactor-t-coefficient", "t coefficient in the prefactor exponent",
         0.5 * (-2.0 + J) * q - P, g.g1 - P},
    };
}

inline std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline std::string fmt6(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

}  // namespace detailv

// Records at the fractional probe point (alpha = 0.8), with the alpha = 1 limit
// used to flag which mismatches survive classically. Four structural records
// about the assembled wavefunction and the closed energy form follow.
inline std::vector<DiscrepancyRecord> discrepancy_records() {
    std::vector<DiscrepancyRecord> recs;
    const double q = 1.0, eps = 169.0, beta_pot = 25.0, gamma_p = 0.0;
    auto frac = detailv::published_form_pairs(0.8, 1.0, q, eps, beta_pot, gamma_p);
    auto clas = detailv::published_form_pairs(1.0, 1.0, q, eps, beta_pot, gamma_p);
    for (size_t i = 0; i < frac.size(); ++i) {
        DiscrepancyRecord r;
        r.id = frac[i].id;
        r.quantity = frac[i].quantity;
        r.published = frac[i].published;
        r.rederived = frac[i].rederived;
        r.abs_gap = std::fabs(r.published - r.rederived);
        const double cg = std::fabs(clas[i].published - clas[i].rederived);
        r.classical_match = cg < 1e-9 * std::max(1.0, std::fabs(clas[i].rederived));
        r.note = r.classical_match
                     ? "published and rederived forms agree at alpha = 1 but split at alpha = 0.8"
                     : "published form disagrees with the rederivation even at alpha = 1";
        recs.push_back(r);
    }

    // classical ground level of the beta = 25, gamma = 0, q = 1 well
    {
        DiscrepancyRecord r;
        r.id = "assembly-x-exponent";
        r.quantity = "x exponent on the assembled bound-state function";
        r.published = -(12.0 + 24.0);
        r.rederived = 12.0;
        r.abs_gap = std::fabs(r.published - r.rederived);
        r.classical_match = false;
        r.note = "published assembly negates and augments the prefactor exponent; the product "
                 "of prefactor and polynomial carries the positive exponent";
        recs.push_back(r);
    }
    {
        DiscrepancyRecord r;
        r.id = "weight-to-jacobi-second-exponent";
        r.quantity = "second index of the polynomial family";
        r.published = (24.0 * 1.0 + (-25.0)) / (1.0 * 1.0);
        r.rederived = -(24.0 * 1.0 + (-25.0)) / (1.0 * 1.0);
        r.abs_gap = std::fabs(r.published - r.rederived);
        r.classical_match = false;
        r.note = "published sign puts the index at -1, outside the admissible range; the "
                 "rederived index is +1 and reproduces the weight exactly";
        recs.push_back(r);
    }
    {
        DiscrepancyRecord r;
        r.id = "polynomial-argument";
        r.quantity = "argument handed to the polynomial family, at x = 0.5";
        r.published = 1.0 - 1.0 * 0.5;   // 1 - q x^alpha
        r.rederived = 1.0 - 2.0 * 0.5;   // 1 - 2 q x^alpha
        r.abs_gap = std::fabs(r.published - r.rederived);
        r.classical_match = false;
        r.note = "the weight written over (0, q^{-1/alpha}) matches the polynomial family only "
                 "under the argument 1 - 2 q x^alpha";
        recs.push_back(r);
    }
    {
        DiscrepancyRecord r;
        r.id = "rodrigues-kernel";
        r.quantity = "generator inside the n-fold derivative, at x = 0.5, q = 1, alpha = 1";
        r.published = -2.0;              // sigma''(x): constant, degree-degenerate in n
        r.rederived = 0.5 * (1.0 - 0.5); // sigma(x)^n factor at n = 1
        r.abs_gap = std::fabs(r.published - r.rederived);
        r.classical_match = false;
        r.note = "the published generator uses the second derivative of sigma, which cannot "
                 "raise the polynomial degree with n; the power sigma^n does and is adopted";
        recs.push_back(r);
    }
    return recs;
}

// Both middle-sign variants of the closed energy form against the integrator.
struct MiddleSignVerdict {
    double plus_form_mev;
    double minus_form_mev;
    double numerov_mev;
    double plus_gap;
    double minus_gap;
    int closer_sign;             // sign landing nearer the integrator
    int solver_equivalent_sign;  // sign reproduced by the quantization pipeline
};

inline MiddleSignVerdict middle_sign_verdict(const PotentialParams& ref,
                                             const RadialGrid& grid) {
    const DimensionlessParams shape = dimensionless(ref);
    MiddleSignVerdict v{};
    v.plus_form_mev = eps_to_energy(
        classical_eps(0, shape.q, shape.beta_pot, shape.gamma_p, +1), ref);
    v.minus_form_mev = eps_to_energy(
        classical_eps(0, shape.q, shape.beta_pot, shape.gamma_p, -1), ref);
    const std::vector<double> lv = ws_spectrum(ref, grid, 1);
    v.numerov_mev = lv.empty() ? std::nan("") : lv.front();
    v.plus_gap = std::fabs(v.plus_form_mev - v.numerov_mev);
    v.minus_gap = std::fabs(v.minus_form_mev - v.numerov_mev);
    v.closer_sign = (v.minus_gap <= v.plus_gap) ? -1 : +1;
    v.solver_equivalent_sign = +1;
    return v;
}

struct CriterionResult {
    int index;
    std::string name;
    bool pass;
    std::string detail;
};

struct SuiteResult {
    std::vector<CriterionResult> criteria;
    std::vector<DiscrepancyRecord> records;
    MiddleSignVerdict verdict;
    std::vector<std::string> notes;
    bool all_pass;
};

namespace detailv {

inline CriterionResult classical_equivalence() {
    int feasible = 0, boundary = 0, bad = 0;
    double max_rel = 0.0;
    const FractionalOrder fo = FractionalOrder::make(1.0, 1.0);
    for (double beta_pot : {9.0, 25.0, 49.0})
        for (double gamma_p : {0.0, 1.0, 5.0})
            for (double q : {0.5, 1.0, 2.0})
                for (int n = 0; n < 4; ++n) {
                    const auto shape = DimensionlessParams::make(0.0, beta_pot, gamma_p, q);
                    const LevelOutcome lo = solve_eps_fractional(shape, fo, n);
                    const double lam = std::sqrt(1.0 + 4.0 * gamma_p / q) + 1.0 + 2.0 * n;
                    const bool should = lam <= 2.0 * std::sqrt(beta_pot) + 1e-12;
                    if (lo.feasible != should) {
                        ++bad;
                        continue;
                    }
                    if (!lo.feasible) continue;
                    ++feasible;
                    if (lo.boundary) ++boundary;
                    const double cl = classical_eps(n, q, beta_pot, gamma_p, +1);
                    const double rel = std::fabs(lo.eps - cl) / std::max(1.0, std::fabs(cl));
                    max_rel = std::max(max_rel, rel);
                    if (rel > 1e-8) ++bad;
                }
    CriterionResult r;
    r.index = 1;
    r.name = "classical-closed-form-equivalence";
    r.pass = bad == 0 && feasible == 85 && boundary == 5;
    r.detail = std::to_string(feasible) + "/108 grid points feasible, " +
               std::to_string(boundary) + " on the floor, max rel dev " + fmt6(max_rel) +
               " against the +1 middle-sign form";
    return r;
}

inline CriterionResult double_zero_certificate() {
    double worst_dz = 0.0, worst_sq = 0.0;
    int checked = 0, bad = 0;
    const FractionalOrder fo = FractionalOrder::make(1.0, 1.0);
    for (double beta_pot : {9.0, 25.0, 49.0})
        for (double gamma_p : {0.0, 1.0, 5.0})
            for (double q : {0.5, 1.0, 2.0})
                for (int n = 0; n < 4; ++n) {
                    const auto shape = DimensionlessParams::make(0.0, beta_pot, gamma_p, q);
                    const LevelOutcome lo = solve_eps_fractional(shape, fo, n);
                    if (!lo.feasible) continue;
                    ++checked;
                    const double dz = std::fabs(lo.nu.double_zero_residual());
                    worst_dz = std::max(worst_dz, dz);
                    if (dz > 1e-10) ++bad;
                    for (double t : {0.15, 0.4, 0.8, 1.6}) {
                        const double u = lo.nu.under_root_at(t);
                        const double p = lo.nu.perfect_square_at(t);
                        const double rel = std::fabs(u - p) / std::max(1.0, std::fabs(u));
                        worst_sq = std::max(worst_sq, rel);
                        if (rel > 1e-9) ++bad;
                    }
                }
    CriterionResult r;
    r.index = 2;
    r.name = "double-zero-certificate";
    r.pass = bad == 0 && checked == 85;
    r.detail = std::to_string(checked) + " roots: discriminant residual <= " + fmt6(worst_dz) +
               ", perfect-square residual <= " + fmt6(worst_sq);
    return r;
}

inline CriterionResult quantization_cancellation() {
    int bad = 0, solved = 0;
    double worst = 0.0, worst_pi = 0.0;
    for (double alpha : {0.6, 0.8, 1.0}) {
        const FractionalOrder fo = FractionalOrder::make(alpha, 1.0);
        for (int n = 0; n < 3; ++n) {
            const auto shape = DimensionlessParams::make(0.0, 25.0, 0.0, 1.0);
            const LevelOutcome lo = solve_eps_fractional(shape, fo, n);
            if (!lo.feasible) {
                ++bad;
                continue;
            }
            ++solved;
            for (double x : {0.5, 1.0, 2.0}) {
                const double lam = lo.nu.lambda_at(x);
                const double lam_n = lo.nu.lambda_n_at(n, x);
                const double rel =
                    std::fabs(lam - lam_n) / std::max(1.0, std::fabs(lam) + std::fabs(lam_n));
                worst = std::max(worst, rel);
                if (rel > 1e-9) ++bad;
                const double num = central_diff([&](double z) { return lo.nu.pi_f_at(z); }, x);
                const double an = lo.nu.pi_f_deriv_at(x);
                const double drel = std::fabs(num - an) / std::max(1.0, std::fabs(an));
                worst_pi = std::max(worst_pi, drel);
                if (drel > 1e-6) ++bad;
            }
        }
    }
    CriterionResult r;
    r.index = 3;
    r.name = "quantization-cancellation";
    r.pass = bad == 0 && solved == 9;
    r.detail = "lambda difference <= " + fmt6(worst) + " across x in {0.5, 1, 2}, pi_f' check <= " +
               fmt6(worst_pi);
    return r;
}

inline CriterionResult fractional_derivative_rules() {
    int bad = 0;
    double worst_pow = 0.0, worst_comp = 0.0;
    for (double alpha : {0.6, 0.8})
        for (double bf : {0.9, 1.0}) {
            const FractionalOrder fo = FractionalOrder::make(alpha, bf);
            for (double s : {0.7, 1.3, 2.1})
                for (double k : {1.5, 2.0, 3.25}) {
                    const double analytic = i_factor(fo) * k * std::pow(s, k - alpha);
                    const double got = gfd_first_with_deriv(k * std::pow(s, k - 1.0), fo, s);
                    const double rel =
                        std::fabs(got - analytic) / std::max(1.0, std::fabs(analytic));
                    worst_pow = std::max(worst_pow, rel);
                    if (rel > 1e-12) ++bad;
                    const double ii = i_factor(fo) * i_factor(fo);
                    const double second =
                        ii * ((1.0 - alpha) * std::pow(s, 1.0 - 2.0 * alpha) * k *
                                  std::pow(s, k - 1.0) +
                              std::pow(s, 2.0 - 2.0 * alpha) * k * (k - 1.0) *
                                  std::pow(s, k - 2.0));
                    const double got2 =
                        gfd_second([k](double z) { return std::pow(z, k); }, fo, s);
                    const double rel2 =
                        std::fabs(got2 - second) / std::max(1.0, std::fabs(second));
                    worst_comp = std::max(worst_comp, rel2);
                    if (rel2 > 1e-7) ++bad;
                }
        }
    const FractionalOrder cl = FractionalOrder::make(1.0, 1.0);
    for (double s : {0.7, 1.3, 2.1}) {
        const double fp = 2.5 * std::pow(s, 1.5);
        if (gfd_first_with_deriv(fp, cl, s) != fp) ++bad;
    }
    CriterionResult r;
    r.index = 4;
    r.name = "fractional-derivative-rules";
    r.pass = bad == 0;
    r.detail = "power rule residual <= " + fmt6(worst_pow) + ", second-operator residual <= " +
               fmt6(worst_comp) + ", classical reduction exact";
    return r;
}

inline CriterionResult wavefunction_structure() {
    int bad = 0;
    double worst_ratio = 0.0, worst_pearson = 0.0, worst_phi = 0.0, worst_orth = 0.0,
           worst_norm = 0.0;
    const double beta1 = 0.7692308, mu = 939.0;
    const double scale = 2.0 * hbar_c * hbar_c * beta1 * beta1 / mu;
    const PotentialParams pp = PotentialParams::make(25.0 * scale, 1.0, beta1, 0.0, mu);
    const DimensionlessParams shape = dimensionless(pp);
    const FractionalOrder fo = FractionalOrder::make(1.0, 1.0);
    WavefunctionSpec spec1{};
    bool have_spec1 = false;
    for (int n = 0; n <= 3; ++n) {
        const LevelOutcome lo = solve_eps_fractional(shape, fo, n);
        if (!lo.feasible) {
            ++bad;
            continue;
        }
        const WavefunctionSpec ws = build_spec(lo.nu, n);
        if (n == 1) {
            spec1 = ws;
            have_spec1 = true;
        }
        const auto terms = rodrigues_terms(ws);
        const JacobiParams jp{n, ws.jacobi_a, ws.jacobi_b};
        double rmin = 0.0, rmax = 0.0, rsum = 0.0;
        int cnt = 0;
        for (double x = 0.1; x < 0.95; x += 0.1) {
            const double jv = jacobi_eval(jp, 1.0 - 2.0 * ws.q * x);
            const double yv = eval_terms(terms, ws.alpha, ws.q, x);
            if (std::fabs(jv) < 1e-12) continue;
            const double ratio = yv / jv;
            if (cnt == 0) {
                rmin = rmax = ratio;
            } else {
                rmin = std::min(rmin, ratio);
                rmax = std::max(rmax, ratio);
            }
            rsum += ratio;
            ++cnt;
            const std::vector<ExprTerm> srho{
                ExprTerm{1.0, ws.a11 + 1.0, ws.rho_t_exp + 1.0}};
            const auto dsrho = differentiate_terms(srho, ws.alpha, ws.q);
            const double lhs = eval_terms(dsrho, ws.alpha, ws.q, x);
            const double rhs = lo.nu.tau_f_at(x) * rho_weight(ws, x);
            const double prel = std::fabs(lhs - rhs) / std::max(1.0, std::fabs(rhs));
            worst_pearson = std::max(worst_pearson, prel);
            if (prel > 1e-6) ++bad;
            const double dphi = central_diff([&](double z) { return phi_factor(ws, z); }, x);
            const double want = lo.nu.pi_f_at(x) / (x * (1.0 - ws.q * x)) * phi_factor(ws, x);
            const double frel = std::fabs(dphi - want) / std::max(1.0, std::fabs(want));
            worst_phi = std::max(worst_phi, frel);
            if (frel > 1e-6) ++bad;
        }
        if (cnt > 1) {
            const double spread = (rmax - rmin) / std::max(1.0, std::fabs(rsum / cnt));
            worst_ratio = std::max(worst_ratio, spread);
            if (spread > 1e-7) ++bad;
        }
        const double nrm = norm_constant(ws, beta1);
        const double back = nrm * nrm * norm_integral(ws, beta1, 20.0, 8000);
        const double nrel = std::fabs(back - 1.0);
        worst_norm = std::max(worst_norm, nrel);
        if (nrel > 1e-6) ++bad;
    }
    if (have_spec1) {
        for (auto mk : {std::pair<int, int>{0, 1}, {0, 2}, {1, 2}}) {
            const double off = orthogonality_integral(spec1, mk.first, mk.second);
            const double dm = orthogonality_integral(spec1, mk.first, mk.first);
            const double dk = orthogonality_integral(spec1, mk.second, mk.second);
            const double rel = std::fabs(off) / std::sqrt(dm * dk);
            worst_orth = std::max(worst_orth, rel);
            if (rel > 1e-6) ++bad;
        }
    } else {
        ++bad;
    }
    CriterionResult r;
    r.index = 5;
    r.name = "wavefunction-structure";
    r.pass = bad == 0;
    r.detail = "polynomial ratio spread <= " + fmt6(worst_ratio) + ", weight identity <= " +
               fmt6(worst_pearson) + ", prefactor log-derivative <= " + fmt6(worst_phi) +
               ", orthogonality <= " + fmt6(worst_orth) + ", norm defect <= " + fmt6(worst_norm);
    return r;
}

inline CriterionResult numerov_oracle(const PotentialParams& ref) {
    int bad = 0;
    const double mu = 939.0;
    const RadialGrid gb = RadialGrid::make(1e-9, 5.0, 4000);
    const auto box = find_levels([](double) { return 0.0; }, mu, gb, 0.001, 60.0, 1);
    const double box_exact = M_PI * M_PI * hbar_c * hbar_c / (2.0 * mu * 25.0);
    double box_rel = 1.0;
    if (!box.empty()) box_rel = std::fabs(box.front() - box_exact) / box_exact;
    if (box_rel > 1e-3) ++bad;

    const RadialGrid gh = RadialGrid::make(1e-9, 12.0, 6000);
    const double w2 = 0.5 * mu * (10.0 / hbar_c) * (10.0 / hbar_c);
    const auto ho = find_levels([&](double r2) { return w2 * r2 * r2; }, mu, gh, 0.001, 60.0, 2);
    double ho_rel = 1.0;
    if (ho.size() >= 2)
        ho_rel = std::max(std::fabs(ho[0] - 15.0) / 15.0, std::fabs(ho[1] - 35.0) / 35.0);
    if (ho_rel > 2e-3) ++bad;

    PotentialParams ws0 = ref;
    ws0.c = 0.0;
    const auto lv1 = ws_spectrum(ws0, RadialGrid::make(1e-4, 25.0, 8000), 8);
    const auto lv2 = ws_spectrum(ws0, RadialGrid::make(1e-4, 25.0, 16000), 8);
    double drift = 1.0;
    if (!lv1.empty() && lv1.size() == lv2.size()) {
        drift = 0.0;
        for (size_t i = 0; i < lv1.size(); ++i)
            drift = std::max(drift, std::fabs(lv1[i] - lv2[i]));
    }
    if (drift > 1e-4) ++bad;

    CriterionResult r;
    r.index = 6;
    r.name = "numerov-oracle";
    r.pass = bad == 0;
    r.detail = "box rel " + fmt6(box_rel) + ", oscillator rel " + fmt6(ho_rel) +
               ", well grid drift " + fmt6(drift) + " MeV over " +
               std::to_string(lv1.size()) + " levels";
    return r;
}

inline CriterionResult potential_shape(const PotentialParams& ref) {
    int bad = 0;
    PotentialParams c0p = ref;
    c0p.c = 0.0;
    const double R = well_radius(c0p);
    const double vr = potential_eval(c0p, R);
    const double rel = std::fabs(vr + 0.5 * c0p.v0) / (0.5 * c0p.v0);
    if (rel > 5e-3) ++bad;
    const double tail = std::fabs(potential_eval(ref, 60.0));
    if (tail > 1e-8 * ref.v0) ++bad;
    int mono_bad = 0;
    for (double r2 : {0.5 * R, R, 1.5 * R}) {
        double prev = 1.0;
        bool first = true;
        for (double cc : {0.0, 5.0, 10.0}) {
            PotentialParams p2 = ref;
            p2.c = cc;
            const double v = potential_eval(p2, r2);
            if (!first && !(v < prev)) ++mono_bad;
            prev = v;
            first = false;
        }
    }
    if (mono_bad > 0) ++bad;
    const double mid_exact = -0.5 * ref.v0 - ref.c / (4.0 * ref.q);
    const double mid = potential_eval(ref, R);
    if (std::fabs(mid - mid_exact) > 1e-9 * std::fabs(mid_exact)) ++bad;
    CriterionResult r;
    r.index = 7;
    r.name = "potential-shape";
    r.pass = bad == 0;
    r.detail = "half-depth crossing rel " + fmt6(rel) + ", far tail " + fmt6(tail) +
               " MeV, deepening monotone in the surface strength";
    return r;
}

inline CriterionResult discrepancy_gate(const std::vector<DiscrepancyRecord>& recs,
                                        const MiddleSignVerdict& v) {
    int bad = 0;
    if (recs.size() < 6) ++bad;
    bool has_sign_context = false;
    for (const auto& r : recs) {
        if (r.note.empty() || r.id.empty()) ++bad;
        if (r.id == "weight-to-jacobi-second-exponent") has_sign_context = true;
    }
    if (!has_sign_context) ++bad;
    if (v.closer_sign != -1 && v.closer_sign != 1) ++bad;
    if (std::isnan(v.numerov_mev)) ++bad;
    CriterionResult r;
    r.index = 8;
    r.name = "discrepancy-report";
    r.pass = bad == 0;
    r.detail = std::to_string(recs.size()) + " records; middle-sign verdict: integrator favors " +
               (v.closer_sign < 0 ? std::string("-1") : std::string("+1")) +
               " while the quantization pipeline reproduces +1";
    return r;
}

}  // namespace detailv

inline SuiteResult run_suite(const PotentialParams& ref) {
    SuiteResult s{};
    s.records = discrepancy_records();
    s.verdict = middle_sign_verdict(ref, RadialGrid::make(1e-4, 25.0, 20000));
    s.criteria.push_back(detailv::classical_equivalence());
    s.criteria.push_back(detailv::double_zero_certificate());
    s.criteria.push_back(detailv::quantization_cancellation());
    s.criteria.push_back(detailv::fractional_derivative_rules());
    s.criteria.push_back(detailv::wavefunction_structure());
    s.criteria.push_back(detailv::numerov_oracle(ref));
    s.criteria.push_back(detailv::potential_shape(ref));
    s.criteria.push_back(detailv::discrepancy_gate(s.records, s.verdict));
    s.notes.push_back(
        "the quantization condition admits no bound level at the reference configuration for "
        "any order in [0.7, 1.0]; closed-form level tables quoted for it are not reproducible "
        "as quantization roots");
    s.notes.push_back(
        "the r-space substitution x = exp(-2 beta1 r) is exact only at order 1; the assembled "
        "bound-state function satisfies the transformed equation, not the physical radial one, "
        "so integrator energies are the physical reference");
    s.all_pass = true;
    for (const auto& c : s.criteria) s.all_pass = s.all_pass && c.pass;
    return s;
}

inline std::string report_json(const SuiteResult& s) {
    using detailv::fmt;
    std::ostringstream o;
    o << "{\n  \"criteria\": [\n";
    for (size_t i = 0; i < s.criteria.size(); ++i) {
        const auto& c = s.criteria[i];
        o << "    {\"index\": " << c.index << ", \"name\": \"" << c.name << "\", \"pass\": "
          << (c.pass ? "true" : "false") << ", \"detail\": \"" << c.detail << "\"}"
          << (i + 1 < s.criteria.size() ? "," : "") << "\n";
    }
    o << "  ],\n  \"discrepancies\": [\n";
    for (size_t i = 0; i < s.records.size(); ++i) {
        const auto& r = s.records[i];
        o << "    {\"id\": \"" << r.id << "\", \"quantity\": \"" << r.quantity
          << "\", \"published\": " << fmt(r.published) << ", \"rederived\": " << fmt(r.rederived)
          << ", \"abs_gap\": " << fmt(r.abs_gap)
          << ", \"classical_match\": " << (r.classical_match ? "true" : "false")
          << ", \"note\": \"" << r.note << "\"}" << (i + 1 < s.records.size() ? "," : "") << "\n";
    }
    o << "  ],\n  \"middle_sign\": {\"plus_form_mev\": " << fmt(s.verdict.plus_form_mev)
      << ", \"minus_form_mev\": " << fmt(s.verdict.minus_form_mev)
      << ", \"numerov_mev\": " << fmt(s.verdict.numerov_mev)
      << ", \"plus_gap\": " << fmt(s.verdict.plus_gap)
      << ", \"minus_gap\": " << fmt(s.verdict.minus_gap)
      << ", \"closer_sign\": " << s.verdict.closer_sign
      << ", \"solver_equivalent_sign\": " << s.verdict.solver_equivalent_sign << "},\n";
    o << "  \"notes\": [\n";
    for (size_t i = 0; i < s.notes.size(); ++i)
        o << "    \"" << s.notes[i] << "\"" << (i + 1 < s.notes.size() ? "," : "") << "\n";
    o << "  ],\n  \"all_pass\": " << (s.all_pass ? "true" : "false") << "\n}\n";
    return o.str();
}

inline std::string report_text(const SuiteResult& s) {
    std::ostringstream o;
    o << "verification suite\n==================\n";
    for (const auto& c : s.criteria)
        o << "criterion " << c.index << " " << (c.pass ? "PASS" : "FAIL") << "  " << c.name
          << "\n    " << c.detail << "\n";
    o << "\ndiscrepancy records (" << s.records.size() << ")\n";
    for (const auto& r : s.records)
        o << "  " << r.id << ": published " << detailv::fmt6(r.published) << " vs rederived "
          << detailv::fmt6(r.rederived) << " (gap " << detailv::fmt6(r.abs_gap) << ", "
          << (r.classical_match ? "classical limit agrees" : "classical limit disagrees")
          << ")\n    " << r.note << "\n";
    o << "\nmiddle sign: +1 form " << detailv::fmt6(s.verdict.plus_form_mev) << " MeV, -1 form "
      << detailv::fmt6(s.verdict.minus_form_mev) << " MeV, integrator "
      << detailv::fmt6(s.verdict.numerov_mev) << " MeV -> integrator favors "
      << (s.verdict.closer_sign < 0 ? "-1" : "+1")
      << "; the quantization pipeline reproduces +1\n";
    for (const auto& n : s.notes) o << "note: " << n << "\n";
    o << (s.all_pass ? "ALL PASS\n" : "FAILURES PRESENT\n");
    return o.str();
}

}  // namespace gwsnu
