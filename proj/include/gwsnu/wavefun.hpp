#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "nucore.hpp"
#include "specfun.hpp"

namespace gwsnu {

// One closed-form term coef * x^e * (1 - q x^alpha)^f. The family is closed
// under d/dx, which is what makes the Rodrigues construction exact for any
// alpha, not just alpha = 1.
struct ExprTerm {
    double coef;
    double e;
    double f;
};

inline void merge_term(std::vector<ExprTerm>& terms, const ExprTerm& t) {
    if (t.coef == 0.0) return;
    for (auto& u : terms) {
        if (std::fabs(u.e - t.e) < 1e-9 && std::fabs(u.f - t.f) < 1e-9) {
            u.coef += t.coef;
            return;
        }
    }
    terms.push_back(t);
}

inline std::vector<ExprTerm> differentiate_terms(const std::vector<ExprTerm>& terms, double alpha,
                                                 double q) {
    std::vector<ExprTerm> out;
    out.reserve(2 * terms.size());
    for (const auto& t : terms) {
        merge_term(out, ExprTerm{t.coef * t.e, t.e - 1.0, t.f});
        merge_term(out, ExprTerm{-t.coef * t.f * q * alpha, t.e + alpha - 1.0, t.f - 1.0});
    }
    return out;
}

inline double eval_terms(const std::vector<ExprTerm>& terms, double alpha, double q, double x) {
    const double t = std::pow(x, alpha);
    const double base = 1.0 - q * t;
    double sum = 0.0;
    for (const auto& u : terms) sum += u.coef * std::pow(x, u.e) * std::pow(base, u.f);
    return sum;
}

// Everything needed to evaluate the bound-state wavefunction of one level:
//   rho = x^{a11} (1 - q x^alpha)^{rho_t_exp}      (Pearson weight)
//   phi = x^{phi_x_exp} (1 - q x^alpha)^{phi_t_exp} (prefactor)
//   y_n = Jacobi-type polynomial in x^alpha, degree n
struct WavefunctionSpec {
    int n;
    double alpha;
    double q;
    double a11;        // x exponent of rho; equals t0_tau - 1
    double b11;        // t1_tau + q (1 + alpha)
    double rho_t_exp;  // -(a11 q + b11) / (alpha q)
    double phi_x_exp;  // pi0
    double phi_t_exp;  // -(pi0 q + pi1) / (alpha q)
    double jacobi_a;
    double jacobi_b;
    double x_support;        // upper edge q^{-1/alpha} where 1 - q x^alpha hits zero
    double norm_const = 1.0; // multiplies R; set by normalize()
};

inline WavefunctionSpec build_spec(const NUIntermediates& nu, int n) {
    if (n < 0 || n > 12) throw std::invalid_argument("build_spec: n must be in [0, 12]");
    WavefunctionSpec ws{};
    ws.n = n;
    ws.alpha = nu.alpha;
    ws.q = nu.q;
    ws.a11 = nu.t0_tau - 1.0;
    ws.b11 = nu.t1_tau + nu.q * (1.0 + nu.alpha);
    ws.rho_t_exp = -(ws.a11 * nu.q + ws.b11) / (nu.alpha * nu.q);
    ws.phi_x_exp = nu.pi0;
    ws.phi_t_exp = -(nu.pi0 * nu.q + nu.pi1) / (nu.alpha * nu.q);
    ws.jacobi_a = ws.a11;
    ws.jacobi_b = ws.rho_t_exp;
    ws.x_support = std::pow(nu.q, -1.0 / nu.alpha);
    return ws;
}

inline double rho_weight(const WavefunctionSpec& ws, double x) {
    const double base = 1.0 - ws.q * std::pow(x, ws.alpha);
    return std::pow(x, ws.a11) * std::pow(base, ws.rho_t_exp);
}

inline double phi_factor(const WavefunctionSpec& ws, double x) {
    const double base = 1.0 - ws.q * std::pow(x, ws.alpha);
    return std::pow(x, ws.phi_x_exp) * std::pow(base, ws.phi_t_exp);
}

// y_n as a term list: (1/rho) d^n/dx^n [ sigma^n rho ] with sigma = x (1 - q x^alpha).
// The division by rho shifts exponents only, so the result is polynomial in x^alpha.
inline std::vector<ExprTerm> rodrigues_terms(const WavefunctionSpec& ws) {
    std::vector<ExprTerm> terms{
        ExprTerm{1.0, ws.a11 + ws.n, ws.rho_t_exp + ws.n}};
    for (int k = 0; k < ws.n; ++k) terms = differentiate_terms(terms, ws.alpha, ws.q);
    for (auto& t : terms) {
        t.e -= ws.a11;
        t.f -= ws.rho_t_exp;
    }
    return terms;
}

inline double rodrigues_yn(const WavefunctionSpec& ws, double x) {
    return eval_terms(rodrigues_terms(ws), ws.alpha, ws.q, x);
}

// Bound-state function in the transformed variable, scaled by norm_const
// (1 until normalize() has been applied).
inline double radial_R_x(const WavefunctionSpec& ws, double x) {
    return ws.norm_const * phi_factor(ws, x) * rodrigues_yn(ws, x);
}

// r-space evaluation through x = e^{-2 beta1 r}; the substitution is exact
// only for alpha = 1, so anything else is rejected.
inline double radial_R(const WavefunctionSpec& ws, double beta1, double r) {
    if (ws.alpha != 1.0)
        throw std::domain_error("radial_R: r-space map requires alpha == 1");
    if (!(beta1 > 0.0)) throw std::invalid_argument("radial_R: beta1 must be positive");
    const double x = std::exp(-2.0 * beta1 * r);
    return radial_R_x(ws, x);
}

// integral_0^{r_max} R^2 dr, computed through x = e^{-2 beta1 r} where the
// integrand is polynomial-like: dr = -dx / (2 beta1 x). The r-space peak can be
// arbitrarily sharp near the origin while the x-space integrand stays smooth.
inline double norm_integral(const WavefunctionSpec& ws, double beta1, double r_max = 20.0,
                            int intervals = 4000) {
    if (ws.alpha != 1.0)
        throw std::domain_error("norm_integral: r-space map requires alpha == 1");
    if (!(beta1 > 0.0)) throw std::invalid_argument("norm_integral: beta1 must be positive");
    if (!(2.0 * ws.phi_x_exp - 1.0 > -1.0))
        throw std::runtime_error("norm_integral: divergent at the origin, state not normalizable");
    const double x_lo = std::exp(-2.0 * beta1 * r_max);
    return simpson_quadrature(
        [&](double x) {
            const double v = radial_R_x(ws, x);
            return v * v / (2.0 * beta1 * x);
        },
        x_lo, 1.0, intervals);
}

// N with integral_0^{r_max} (N R)^2 dr = 1, relative to the spec's current
// scale (so it already accounts for any norm_const folded in).
inline double norm_constant(const WavefunctionSpec& ws, double beta1, double r_max = 20.0,
                            int intervals = 4000) {
    const double ssq = norm_integral(ws, beta1, r_max, intervals);
    if (!(ssq > 0.0)) throw std::runtime_error("norm_constant: vanishing norm integral");
    return 1.0 / std::sqrt(ssq);
}

// Copy of the spec with norm_const set so that the r-space square integral
// over [0, r_max] equals 1.
inline WavefunctionSpec normalize(const WavefunctionSpec& ws, double beta1, double r_max = 20.0,
                                  int intervals = 4000) {
    WavefunctionSpec out = ws;
    out.norm_const = 1.0;
    out.norm_const = norm_constant(out, beta1, r_max, intervals);
    return out;
}

// Inner product of the degree-m and degree-k members of the spec's own Jacobi
// family under the spec's weight, integrated across the full x support.
inline double orthogonality_integral(const WavefunctionSpec& ws, int m, int k,
                                     int intervals = 4096) {
    const JacobiParams pm{m, ws.jacobi_a, ws.jacobi_b};
    const JacobiParams pk{k, ws.jacobi_a, ws.jacobi_b};
    return simpson_quadrature(
        [&](double x) {
            const double arg = 1.0 - 2.0 * ws.q * std::pow(x, ws.alpha);
            return jacobi_eval(pm, arg) * jacobi_eval(pk, arg) * rho_weight(ws, x);
        },
        0.0, ws.x_support, intervals);
}

}  // namespace gwsnu
