#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "spectrum.hpp"

namespace gwsnu {

struct RadialGrid {
    double r_min;
    double r_max;
    int steps;

    static RadialGrid make(double r_min = 1e-4, double r_max = 25.0, int steps = 10000) {
        if (!(r_min > 0.0)) throw std::invalid_argument("RadialGrid: r_min must be positive");
        if (!(r_max > r_min)) throw std::invalid_argument("RadialGrid: r_max must exceed r_min");
        if (steps < 32) throw std::invalid_argument("RadialGrid: steps too small");
        return RadialGrid{r_min, r_max, steps};
    }

    double h() const { return (r_max - r_min) / steps; }
};

// V(r) = -v0 / (1 + q e^{2 b r}) - c e^{2 b r} / (1 + q e^{2 b r})^2, written
// through d = e^{-2 b r} so the exponential never overflows at large r.
inline double potential_eval(const PotentialParams& pp, double r) {
    const double d = std::exp(-2.0 * pp.beta1 * r);
    const double denom = d + pp.q;
    return -pp.v0 * d / denom - pp.c * d / (denom * denom);
}

struct ShootResult {
    double u_end;  // terminal value of the outward solution (sign is what matters)
    int nodes;     // interior sign changes
};

// Outward Numerov sweep for u'' = f(r) u with u(r_min) = 0. The running pair is
// rescaled whenever it overflows toward 1e280; that preserves both the node
// count and the sign of the terminal value, which is all the matching uses.
template <class FF>
ShootResult numerov_shoot_f(FF&& f, const RadialGrid& g) {
    const double h = g.h();
    const double h12 = h * h / 12.0;
    double r0 = g.r_min;
    double u_prev = 0.0;
    double u_curr = h;
    double f_prev = f(r0);
    double f_curr = f(r0 + h);
    int nodes = 0;
    for (int i = 1; i < g.steps; ++i) {
        const double r_next = g.r_min + (i + 1) * h;
        const double f_next = f(r_next);
        const double u_next = (2.0 * u_curr * (1.0 + 5.0 * h12 * f_curr) -
                               u_prev * (1.0 - h12 * f_prev)) /
                              (1.0 - h12 * f_next);
        if (u_curr != 0.0 && u_next * u_curr < 0.0) ++nodes;
        u_prev = u_curr;
        u_curr = u_next;
        f_prev = f_curr;
        f_curr = f_next;
        if (std::fabs(u_curr) > 1e280) {
            u_prev /= 1e280;
            u_curr /= 1e280;
        }
    }
    return ShootResult{u_curr, nodes};
}

template <class VF>
ShootResult numerov_shoot(VF&& vf, double mu, const RadialGrid& g, double energy) {
    const double k = 2.0 * mu / (hbar_c * hbar_c);
    return numerov_shoot_f([&](double r) { return k * (vf(r) - energy); }, g);
}

// Eigenvalues by node-count bisection: E_n sits exactly at the transition where
// the outward solution picks up its (n+1)-th node. The bracket from the count
// bisection is then polished on the sign of the terminal value when that sign
// actually changes across it.
template <class VF>
std::vector<double> find_levels(VF&& vf, double mu, const RadialGrid& g, double e_min,
                                double e_max, int n_levels) {
    if (!(e_max > e_min)) throw std::invalid_argument("find_levels: empty energy window");
    if (n_levels < 1 || n_levels > 20)
        throw std::invalid_argument("find_levels: n_levels must be in [1, 20]");
    std::vector<double> levels;
    const int nodes_top = numerov_shoot(vf, mu, g, e_max).nodes;
    for (int n = 0; n < n_levels; ++n) {
        if (nodes_top <= n) break;
        double lo = e_min, hi = e_max;
        for (int it = 0; it < 200; ++it) {
            const double m = 0.5 * (lo + hi);
            if (numerov_shoot(vf, mu, g, m).nodes <= n)
                lo = m;
            else
                hi = m;
            if (hi - lo < 1e-10 * std::max(1.0, std::fabs(m))) break;
        }
        const double s_lo = numerov_shoot(vf, mu, g, lo).u_end;
        const double s_hi = numerov_shoot(vf, mu, g, hi).u_end;
        double a = lo, b = hi;
        if ((s_lo > 0.0 && s_hi < 0.0) || (s_lo < 0.0 && s_hi > 0.0)) {
            double sa = s_lo;
            for (int it = 0; it < 100; ++it) {
                const double m = 0.5 * (a + b);
                const double sm = numerov_shoot(vf, mu, g, m).u_end;
                if ((sa > 0.0 && sm > 0.0) || (sa < 0.0 && sm < 0.0)) {
                    a = m;
                    sa = sm;
                } else {
                    b = m;
                }
                if (b - a < 1e-12 * std::max(1.0, std::fabs(m))) break;
            }
        }
        levels.push_back(0.5 * (a + b));
    }
    return levels;
}

// Bound spectrum of the generalized well: search (min V - margin, 0).
inline std::vector<double> ws_spectrum(const PotentialParams& pp, const RadialGrid& g,
                                       int max_levels = 16) {
    double vmin = 0.0;
    for (int i = 0; i <= 2000; ++i) {
        const double r = g.r_min + (g.r_max - g.r_min) * i / 2000.0;
        vmin = std::min(vmin, potential_eval(pp, r));
    }
    const double e_min = vmin - 1.0;
    const double e_max = -1e-6;
    return find_levels([&](double r) { return potential_eval(pp, r); }, pp.mu, g, e_min, e_max,
                       max_levels);
}

// Same spectrum under grid doubling until every level moves less than tol_mev.
inline std::vector<double> converged_ws_spectrum(const PotentialParams& pp, RadialGrid g,
                                                 int max_levels = 16, double tol_mev = 1e-8,
                                                 int max_doublings = 5) {
    std::vector<double> prev = ws_spectrum(pp, g, max_levels);
    for (int d = 0; d < max_doublings; ++d) {
        g = RadialGrid::make(g.r_min, g.r_max, 2 * g.steps);
        std::vector<double> next = ws_spectrum(pp, g, max_levels);
        bool close = next.size() == prev.size();
        if (close)
            for (size_t i = 0; i < next.size(); ++i)
                if (std::fabs(next[i] - prev[i]) > tol_mev) close = false;
        prev = std::move(next);
        if (close) break;
    }
    return prev;
}

}  // namespace gwsnu
