#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "nucore.hpp"

namespace gwsnu {

constexpr double hbar_c = 197.3269804;  // MeV fm

// Physical potential parameters, MeV and fm throughout:
//   V(r) = -v0 / (1 + q e^{2 beta1 r}) - c e^{2 beta1 r} / (1 + q e^{2 beta1 r})^2
struct PotentialParams {
    double v0;     // well depth, MeV
    double q;      // deformation, dimensionless
    double beta1;  // inverse diffuseness, fm^-1
    double c;      // surface term strength, MeV
    double mu;     // reduced mass, MeV

    static PotentialParams make(double v0, double q, double beta1, double c, double mu) {
        if (!(v0 > 0.0)) throw std::invalid_argument("PotentialParams: v0 must be positive");
        if (!(q > 0.0)) throw std::invalid_argument("PotentialParams: q must be positive");
        if (!(beta1 > 0.0)) throw std::invalid_argument("PotentialParams: beta1 must be positive");
        if (!(mu > 0.0)) throw std::invalid_argument("PotentialParams: mu must be positive");
        if (!std::isfinite(c)) throw std::invalid_argument("PotentialParams: c must be finite");
        return PotentialParams{v0, q, beta1, c, mu};
    }
};

// A = mass number; well geometry R = r0 A^{1/3}, diffuseness a.
inline PotentialParams nuclear_params(int a_mass, double r0 = 1.285, double a_diff = 0.65,
                                      double c = 0.0, double mu = 939.0) {
    if (a_mass < 1) throw std::invalid_argument("nuclear_params: mass number must be >= 1");
    if (!(r0 > 0.0) || !(a_diff > 0.0))
        throw std::invalid_argument("nuclear_params: r0 and a_diff must be positive");
    const double v0 = 40.5 + 0.13 * a_mass;
    const double radius = r0 * std::cbrt(static_cast<double>(a_mass));
    const double beta1 = 1.0 / (2.0 * a_diff);
    const double q = std::exp(-radius / a_diff);
    return PotentialParams::make(v0, q, beta1, c, mu);
}

inline double well_radius(const PotentialParams& pp) {
    // q = e^{-R/a} with beta1 = 1/(2a) inverts to R = -ln(q)/(2 beta1).
    return -std::log(pp.q) / (2.0 * pp.beta1);
}

// eps = -E / scale, beta_pot = v0 / scale, gamma_p = c / scale.
inline double energy_scale(const PotentialParams& pp) {
    return 2.0 * hbar_c * hbar_c * pp.beta1 * pp.beta1 / pp.mu;
}

inline DimensionlessParams dimensionless(const PotentialParams& pp, double energy_mev = 0.0) {
    const double s = energy_scale(pp);
    return DimensionlessParams::make(-energy_mev / s, pp.v0 / s, pp.c / s, pp.q);
}

inline double eps_to_energy(double eps, const PotentialParams& pp) {
    return -eps * energy_scale(pp);
}

inline double energy_to_eps(double energy_mev, const PotentialParams& pp) {
    return -energy_mev / energy_scale(pp);
}

// Classical (alpha = 1) closed form: eps_n = Lam^2/16 + beta^2/Lam^2 + middle_sign beta/2
// with Lam = sqrt(1 + 4 gamma / q) + 1 + 2n.
inline double classical_eps(int n, double q, double beta_pot, double gamma_p,
                            int middle_sign = -1) {
    if (n < 0) throw std::invalid_argument("classical_eps: n must be >= 0");
    if (middle_sign != 1 && middle_sign != -1)
        throw std::invalid_argument("classical_eps: middle_sign must be +1 or -1");
    const double lam = std::sqrt(1.0 + 4.0 * gamma_p / q) + 1.0 + 2.0 * n;
    return lam * lam / 16.0 + beta_pot * beta_pot / (lam * lam) + middle_sign * beta_pot / 2.0;
}

// Smallest eps with c0 >= 0; below it sqrt(c0) turns complex.
inline double eps_floor(const DimensionlessParams& shape, const FractionalOrder& fo) {
    const double j = fo.inv_i_sq();
    const double g0 = 0.5 * (fo.alpha - j);
    return shape.beta_pot - g0 * g0 / j;
}

struct LevelOutcome {
    bool feasible;
    bool boundary;       // root sits exactly at the c0 = 0 floor
    std::string reason;  // empty when feasible
    double eps;
    double residual;     // F at the accepted root
    NUIntermediates nu;  // branch data evaluated at the root
    double window_lo, window_hi;
    int scan_points;
    int roots_found;
};

namespace detail {

inline double residual_at(const DimensionlessParams& shape, const FractionalOrder& fo, int n,
                          double eps, ResidualOutcome* full = nullptr) {
    const auto dp = DimensionlessParams::make(eps, shape.beta_pot, shape.gamma_p, shape.q);
    ResidualOutcome r = energy_residual(dp, fo, n);
    if (full) *full = r;
    if (!r.feasible) return std::nan("");
    return r.F;
}

}  // namespace detail

// Quantization condition F(eps) = L - Ln = 0, solved by a sign-change scan over
// [eps_floor, hi] followed by bisection. A root pinned to the floor itself
// (where c0 = 0) is detected separately through the residual magnitude.
inline LevelOutcome solve_eps_fractional(const DimensionlessParams& shape,
                                         const FractionalOrder& fo, int n,
                                         int scan_points = 20000) {
    if (n < 0) throw std::invalid_argument("solve_eps_fractional: n must be >= 0");
    if (scan_points < 16)
        throw std::invalid_argument("solve_eps_fractional: scan_points too small");
    LevelOutcome out{};
    out.feasible = false;
    out.boundary = false;
    out.scan_points = scan_points;

    const double lo = eps_floor(shape, fo);
    ResidualOutcome at_floor{};
    const double f_floor = detail::residual_at(shape, fo, n, lo, &at_floor);
    if (!at_floor.feasible) {
        out.reason = at_floor.reason.empty() ? "no valid branch at the eps floor"
                                             : at_floor.reason;
        return out;
    }
    const double edge_tol = 1e-9 * std::max(1.0, std::fabs(at_floor.L) + std::fabs(at_floor.Ln));
    if (std::fabs(f_floor) < edge_tol) {
        out.feasible = true;
        out.boundary = true;
        out.eps = lo;
        out.residual = f_floor;
        out.nu = at_floor.nu;
        out.window_lo = lo;
        out.window_hi = lo;
        out.roots_found = 1;
        return out;
    }
    if (f_floor < 0.0) {
        out.reason = "quantization residual already negative at the eps floor; no level";
        return out;
    }

    // Expand the window until the residual changes sign, then scan it.
    double hi = std::max({4.0 * shape.beta_pot + 4.0 * shape.gamma_p / shape.q + 4.0, 100.0,
                          lo + 4.0});
    double f_hi = detail::residual_at(shape, fo, n, hi);
    int expansions = 0;
    while (!(f_hi < 0.0) && expansions < 60) {
        hi = lo + 2.0 * (hi - lo);
        f_hi = detail::residual_at(shape, fo, n, hi);
        ++expansions;
    }
    if (!(f_hi < 0.0)) {
        out.reason = "no sign change located for the quantization residual";
        return out;
    }
    out.window_lo = lo;
    out.window_hi = hi;

    std::vector<double> roots;
    double x_prev = lo;
    double f_prev = f_floor;
    for (int i = 1; i < scan_points; ++i) {
        const double x = lo + (hi - lo) * static_cast<double>(i) / (scan_points - 1);
        const double f = detail::residual_at(shape, fo, n, x);
        if (std::isnan(f)) {
            x_prev = x;
            f_prev = std::nan("");
            continue;
        }
        if (!std::isnan(f_prev) && ((f_prev > 0.0 && f < 0.0) || (f_prev < 0.0 && f > 0.0))) {
            double a = x_prev, b = x, fa = f_prev;
            for (int it = 0; it < 200; ++it) {
                const double m = 0.5 * (a + b);
                const double fm = detail::residual_at(shape, fo, n, m);
                if (std::isnan(fm)) break;
                if ((fa > 0.0 && fm > 0.0) || (fa < 0.0 && fm < 0.0)) {
                    a = m;
                    fa = fm;
                } else {
                    b = m;
                }
                if (b - a < 4.0 * std::numeric_limits<double>::epsilon() *
                                std::max(1.0, std::fabs(m)))
                    break;
            }
            const double r = 0.5 * (a + b);
            bool dup = false;
            for (double seen : roots)
                if (std::fabs(seen - r) < 1e-9 * std::max(1.0, std::fabs(r))) dup = true;
            if (!dup) roots.push_back(r);
        } else if (!std::isnan(f_prev) && f == 0.0) {
            roots.push_back(x);
        }
        x_prev = x;
        f_prev = f;
    }
    out.roots_found = static_cast<int>(roots.size());
    if (roots.empty()) {
        out.reason = "scan found no quantization root inside the window";
        return out;
    }
    ResidualOutcome at_root{};
    const double f_root = detail::residual_at(shape, fo, n, roots.front(), &at_root);
    out.feasible = true;
    out.eps = roots.front();
    out.residual = f_root;
    out.nu = at_root.nu;
    return out;
}

struct EnergyLevel {
    int n;
    double eps;
    double energy_mev;
    bool boundary;
    bool feasible;
    std::string reason;
};

// All bound levels up to n_max, stopping at the first infeasible n: the
// feasibility margin shrinks monotonically with n, so nothing lies beyond it.
// Every accepted level is re-certified: residual small, double-zero condition
// honored, descending tau_f slope, eps positive (bound side).
inline std::vector<EnergyLevel> enumerate_levels(const PotentialParams& pp,
                                                 const FractionalOrder& fo, int n_max = 50) {
    if (n_max < 0 || n_max > 50)
        throw std::invalid_argument("enumerate_levels: n_max must be in [0, 50]");
    std::vector<EnergyLevel> levels;
    const DimensionlessParams shape = dimensionless(pp);
    for (int n = 0; n <= n_max; ++n) {
        LevelOutcome lo = solve_eps_fractional(shape, fo, n);
        if (!lo.feasible) break;
        if (!(lo.eps > 0.0)) break;
        ResidualOutcome cert;
        detail::residual_at(shape, fo, n, lo.eps, &cert);
        const bool certified =
            cert.feasible &&
            std::fabs(cert.F) < 1e-9 * std::max(1.0, std::fabs(cert.L) + std::fabs(cert.Ln)) &&
            std::fabs(cert.nu.double_zero_residual()) < 1e-10 && cert.nu.t1_tau < 0.0;
        if (!certified) break;
        levels.push_back(
            EnergyLevel{n, lo.eps, eps_to_energy(lo.eps, pp), lo.boundary, true, ""});
    }
    return levels;
}

}  // namespace gwsnu
