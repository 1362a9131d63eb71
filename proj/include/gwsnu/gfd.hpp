#pragma once

#include <cmath>
#include <stdexcept>

#include "specfun.hpp"

namespace gwsnu {

// Two-parameter fractional order (alpha, beta_frac), both in (0, 1], with the
// derived gamma-ratio factor I = Gamma(beta_frac) / Gamma(beta_frac - alpha + 1).
struct FractionalOrder {
    double alpha;
    double beta_frac;
    double i_factor;

    static FractionalOrder make(double alpha, double beta_frac) {
        if (!(alpha > 0.0) || !(alpha <= 1.0))
            throw std::invalid_argument("FractionalOrder: alpha must be in (0, 1]");
        if (!(beta_frac > 0.0) || !(beta_frac <= 1.0))
            throw std::invalid_argument("FractionalOrder: beta_frac must be in (0, 1]");
        const double shifted = beta_frac - alpha + 1.0;
        if (!(shifted > 0.0))
            throw std::invalid_argument("FractionalOrder: beta_frac - alpha + 1 must be positive");
        FractionalOrder fo{alpha, beta_frac, 1.0};
        if (alpha == 1.0 && beta_frac == 1.0)
            fo.i_factor = 1.0;  // exact classical reduction
        else
            fo.i_factor = gamma_fn(beta_frac) / gamma_fn(shifted);
        return fo;
    }

    // I^{-2}, the combination the transformed equation actually uses.
    double inv_i_sq() const { return 1.0 / (i_factor * i_factor); }

    bool classical() const { return alpha == 1.0 && beta_frac == 1.0; }
};

inline double i_factor(const FractionalOrder& fo) { return fo.i_factor; }

namespace detail {
inline void require_positive_s(double s) {
    if (!(s > 0.0))
        throw std::domain_error("generalized derivative: s must be positive");
}
}  // namespace detail

// First-order operator D^a f(s) = I s^{1-a} f'(s), with the derivative supplied
// analytically by the caller.
inline double gfd_first_with_deriv(double fprime, const FractionalOrder& fo, double s) {
    detail::require_positive_s(s);
    if (fo.classical()) return fprime;
    return fo.i_factor * std::pow(s, 1.0 - fo.alpha) * fprime;
}

// Numeric fallback: derivative by central difference.
template <typename F>
double gfd_first(F&& f, const FractionalOrder& fo, double s) {
    detail::require_positive_s(s);
    return gfd_first_with_deriv(central_diff(f, s), fo, s);
}

// Second iterate D^a[D^a f](s) = I^2 [(1-a) s^{1-2a} f'(s) + s^{2-2a} f''(s)].
inline double gfd_second_with_derivs(double fprime, double fsecond, const FractionalOrder& fo,
                                     double s) {
    detail::require_positive_s(s);
    if (fo.classical()) return fsecond;
    const double I2 = fo.i_factor * fo.i_factor;
    const double a = fo.alpha;
    return I2 * ((1.0 - a) * std::pow(s, 1.0 - 2.0 * a) * fprime +
                 std::pow(s, 2.0 - 2.0 * a) * fsecond);
}

template <typename F>
double gfd_second(F&& f, const FractionalOrder& fo, double s) {
    detail::require_positive_s(s);
    const double h = 1e-4 * std::max(1.0, std::fabs(s));
    const double fprime = central_diff(f, s, h);
    const double fsecond = central_second_diff5(f, s, h);
    return gfd_second_with_derivs(fprime, fsecond, fo, s);
}

}  // namespace gwsnu
