#pragma once

#include <cmath>
#include <string>
#include <utility>

#include "gfd.hpp"

namespace gwsnu {

// Dimensionless parameters of the transformed radial equation:
// eps = -mu E / (2 hbar^2 beta1^2), beta_pot = mu V0 / (2 hbar^2 beta1^2),
// gamma_p = mu c / (2 hbar^2 beta1^2), q the deformation.
struct DimensionlessParams {
    double eps;
    double beta_pot;
    double gamma_p;
    double q;

    static DimensionlessParams make(double eps, double beta_pot, double gamma_p, double q) {
        if (!(q > 0.0)) throw std::invalid_argument("DimensionlessParams: q must be positive");
        if (!std::isfinite(beta_pot) || !std::isfinite(gamma_p) || !std::isfinite(eps))
            throw std::invalid_argument("DimensionlessParams: parameters must be finite");
        return DimensionlessParams{eps, beta_pot, gamma_p, q};
    }
};

// Coefficients of the transformed equation, all expressed through t = x^alpha:
//   tau_bar(x)    = tau_mult (1 - q t)
//   sigma(x)      = x (1 - q t)
//   sigma_tilde(x)= j (st2 t^2 + st1 t + st0)
struct TransformedCoefficients {
    double tau_mult;  // 1 - alpha + I^{-2}
    double st2;       // -eps q^2
    double st1;       // 2 eps q - beta q - gamma
    double st0;       // beta - eps
    double j;         // I^{-2}
    double q;
    double alpha;

    double tau_bar_at(double x) const { return tau_mult * (1.0 - q * std::pow(x, alpha)); }
    double sigma_at(double x) const { return x * (1.0 - q * std::pow(x, alpha)); }
    double sigma_deriv_at(double x) const { return 1.0 - q * (1.0 + alpha) * std::pow(x, alpha); }
    double sigma_second_at(double x) const {
        return -q * alpha * (1.0 + alpha) * std::pow(x, alpha - 1.0);
    }
    double sigma_tilde_at(double x) const {
        const double t = std::pow(x, alpha);
        return j * ((st2 * t + st1) * t + st0);
    }
};

inline TransformedCoefficients transformed_coefficients(const DimensionlessParams& dp,
                                                        const FractionalOrder& fo) {
    const double j = fo.inv_i_sq();
    return TransformedCoefficients{
        1.0 - fo.alpha + j,
        -dp.eps * dp.q * dp.q,
        2.0 * dp.eps * dp.q - dp.beta_pot * dp.q - dp.gamma_p,
        dp.beta_pot - dp.eps,
        j,
        dp.q,
        fo.alpha};
}

// Scalars of the under-root quadratic U(t; w) = (a0 - q w) t^2 + (b0 + w) t + c0,
// with pi_f = g0 + g1 t +- sqrt(U).
struct GTuple {
    double g0;
    double g1;
    double a0;
    double b0;
    double c0;
};

inline GTuple quadratic_under_root(const DimensionlessParams& dp, const FractionalOrder& fo) {
    const double j = fo.inv_i_sq();
    const double a = fo.alpha;
    const double q = dp.q;
    const double g0 = 0.5 * (a - j);
    const double g1 = 0.5 * (j - 2.0 * a) * q;
    return GTuple{
        g0,
        g1,
        g1 * g1 + j * dp.eps * q * q,
        2.0 * g0 * g1 - j * (2.0 * dp.eps * q - dp.beta_pot * q - dp.gamma_p),
        g0 * g0 + j * (dp.eps - dp.beta_pot)};
}

// Roots of w^2 + (2 b0 + 4 c0 q) w + (b0^2 - 4 a0 c0) = 0, the requirement that
// the t-discriminant of U vanish. Complex roots are reported, not thrown.
struct DoubleZeroRoots {
    double w_plus;
    double w_minus;
    double discriminant;  // of the w-quadratic; equals 16 c0 (a0 + b0 q + c0 q^2)
    bool real;
};

inline DoubleZeroRoots double_zero_w(const GTuple& g, double q) {
    const double kappa = g.a0 + g.b0 * q + g.c0 * q * q;
    const double disc = 16.0 * g.c0 * kappa;
    if (disc < 0.0)
        return DoubleZeroRoots{std::nan(""), std::nan(""), disc, false};
    const double mid = -(g.b0 + 2.0 * g.c0 * q);
    const double half = 2.0 * std::sqrt(g.c0 * kappa);
    return DoubleZeroRoots{mid + half, mid - half, disc, true};
}

// Selected branch of pi_f = g0 + g1 t + outer (P t + s sqrt(c0)),
// P = sqrt(a0 - q w), s = sign(b0 + w), plus the full tau_f line.
struct NUIntermediates {
    double g0, g1, a0, b0, c0;
    double w_plus, w_minus, w_selected;
    double pi0, pi1;
    double t0_tau, t1_tau;
    double lambda_coeff;  // lambda = lambda_coeff x^{alpha-1}
    int branch_sign;      // outer sign of the square root in pi_f
    double P;             // sqrt(a0 - q w_selected)
    double s_sign;        // sign resolving the perfect square
    double kappa;         // a0 + b0 q + c0 q^2
    double alpha;
    double j;
    double q;

    double pi_f_at(double x) const { return pi0 + pi1 * std::pow(x, alpha); }
    double pi_f_deriv_at(double x) const { return pi1 * alpha * std::pow(x, alpha - 1.0); }
    double tau_f_at(double x) const { return t0_tau + t1_tau * std::pow(x, alpha); }
    double tau_f_deriv_at(double x) const { return t1_tau * alpha * std::pow(x, alpha - 1.0); }
    // U(t; w_selected), which the double-zero condition makes a perfect square.
    double under_root_at(double t) const {
        return ((a0 - q * w_selected) * t + (b0 + w_selected)) * t + c0;
    }
    double perfect_square_at(double t) const {
        const double root = P * t + s_sign * std::sqrt(std::max(c0, 0.0));
        return root * root;
    }
    // K + pi_f' with the explicit x dependence kept.
    double lambda_at(double x) const {
        return w_selected * std::pow(x, alpha - 1.0) + pi_f_deriv_at(x);
    }
    // -n tau_f' - (n(n-1)/2) sigma'', explicit x dependence kept.
    double lambda_n_at(int n, double x) const {
        const double sig2 = -q * alpha * (1.0 + alpha) * std::pow(x, alpha - 1.0);
        return -n * tau_f_deriv_at(x) - 0.5 * n * (n - 1.0) * sig2;
    }
    double double_zero_residual() const {
        const double lhs = (b0 + w_selected) * (b0 + w_selected);
        const double rhs = 4.0 * c0 * (a0 - q * w_selected);
        return (lhs - rhs) / std::max(1.0, b0 * b0);
    }
};

struct BranchOutcome {
    bool feasible;
    std::string reason;  // empty when feasible
    NUIntermediates nu;
};

namespace detail {
inline double clamp_small_negative(double v, double scale) {
    if (v < 0.0 && v > -1e-12 * std::max(1.0, scale)) return 0.0;
    return v;
}
}  // namespace detail

// Enumerates the four (w root, outer sign) candidates, keeps those with
// tau_f' slope t1_tau < 0, and prefers (w_minus, -1), then (w_plus, -1),
// then the positive-outer pairs.
inline BranchOutcome select_pi_branch(const GTuple& g, double w_plus, double w_minus,
                                      const FractionalOrder& fo, double q) {
    const double j = fo.inv_i_sq();
    const double a = fo.alpha;
    const double c0 = detail::clamp_small_negative(g.c0, std::fabs(g.g0 * g.g0) + std::fabs(g.c0));
    BranchOutcome out{false, "", {}};
    if (c0 < 0.0) {
        out.reason = "c0 < 0: sqrt(c0) complex, parameter point infeasible";
        return out;
    }
    if (std::isnan(w_plus) || std::isnan(w_minus)) {
        out.reason = "double-zero roots complex, parameter point infeasible";
        return out;
    }
    const struct {
        double w;
        int outer;
    } cand[4] = {{w_minus, -1}, {w_plus, -1}, {w_minus, +1}, {w_plus, +1}};
    for (const auto& c : cand) {
        double Psq = g.a0 - q * c.w;
        Psq = detail::clamp_small_negative(Psq, std::fabs(g.a0));
        if (Psq < 0.0) continue;
        const double P = std::sqrt(Psq);
        const double s = (g.b0 + c.w >= 0.0) ? 1.0 : -1.0;
        const double pi0 = g.g0 + c.outer * s * std::sqrt(c0);
        const double pi1 = g.g1 + c.outer * P;
        const double t0 = (1.0 - a + j) + 2.0 * pi0;
        const double t1 = -(1.0 - a + j) * q + 2.0 * pi1;
        if (!(t1 < 0.0)) continue;
        NUIntermediates nu{};
        nu.g0 = g.g0;
        nu.g1 = g.g1;
        nu.a0 = g.a0;
        nu.b0 = g.b0;
        nu.c0 = c0;
        nu.w_plus = w_plus;
        nu.w_minus = w_minus;
        nu.w_selected = c.w;
        nu.pi0 = pi0;
        nu.pi1 = pi1;
        nu.t0_tau = t0;
        nu.t1_tau = t1;
        nu.branch_sign = c.outer;
        nu.P = P;
        nu.s_sign = s;
        nu.kappa = g.a0 + g.b0 * q + c0 * q * q;
        nu.alpha = a;
        nu.j = j;
        nu.q = q;
        nu.lambda_coeff = c.w + a * pi1;
        out.feasible = true;
        out.nu = nu;
        return out;
    }
    out.reason = "no branch candidate with tau_f' < 0";
    return out;
}

// x-independent coefficients of lambda = L x^{alpha-1} and
// lambda_n = Ln x^{alpha-1}; their equality quantizes the energy.
inline std::pair<double, double> lambda_coefficients(const NUIntermediates& nu,
                                                     const FractionalOrder& fo, double q, int n) {
    const double a = fo.alpha;
    const double L = nu.w_selected + a * nu.pi1;
    const double Ln = -n * a * nu.t1_tau + 0.5 * n * (n - 1.0) * q * a * (1.0 + a);
    return {L, Ln};
}

struct ResidualOutcome {
    bool feasible;
    std::string reason;
    double F;   // L - Ln
    double L;
    double Ln;
    NUIntermediates nu;
};

// F(eps) = L(eps) - Ln(eps) on the selected branch; a root is a quantized level.
inline ResidualOutcome energy_residual(const DimensionlessParams& dp, const FractionalOrder& fo,
                                       int n) {
    if (n < 0) throw std::invalid_argument("energy_residual: n must be >= 0");
    GTuple g = quadratic_under_root(dp, fo);
    // at the feasibility floor c0 vanishes analytically; absorb the rounding
    g.c0 = detail::clamp_small_negative(
        g.c0, std::max(g.g0 * g.g0, fo.inv_i_sq() * std::fabs(dp.eps - dp.beta_pot)));
    const DoubleZeroRoots wz = double_zero_w(g, dp.q);
    BranchOutcome br = wz.real ? select_pi_branch(g, wz.w_plus, wz.w_minus, fo, dp.q)
                               : BranchOutcome{false, "double-zero roots complex", {}};
    if (!br.feasible) return ResidualOutcome{false, br.reason, 0.0, 0.0, 0.0, {}};
    const auto [L, Ln] = lambda_coefficients(br.nu, fo, dp.q, n);
    return ResidualOutcome{true, "", L - Ln, L, Ln, br.nu};
}

}  // namespace gwsnu
