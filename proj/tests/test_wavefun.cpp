#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <vector>

#include "gwsnu/spectrum.hpp"
#include "gwsnu/wavefun.hpp"

using namespace gwsnu;

namespace {

const FractionalOrder kClassical = FractionalOrder::make(1.0, 1.0);

WavefunctionSpec classical_spec(int n) {
    const auto shape = DimensionlessParams::make(0.0, 25.0, 0.0, 1.0);
    const auto lo = solve_eps_fractional(shape, kClassical, n);
    REQUIRE(lo.feasible);
    return build_spec(lo.nu, n);
}

const PotentialParams kDeepWell =
    PotentialParams::make(1226.8476895053657, 1.0, 0.7692308, 0.0, 939.0);

}  // namespace

TEST_CASE("term-list differentiation matches numeric differentiation") {
    const double alpha = 0.8, q = 1.3;
    const std::vector<ExprTerm> base{ExprTerm{2.5, 1.7, 2.2}, ExprTerm{-0.7, 0.4, 1.0}};
    const auto d = differentiate_terms(base, alpha, q);
    for (double x : {0.2, 0.37, 0.55}) {
        const double numeric =
            central_diff([&](double t) { return eval_terms(base, alpha, q, t); }, x, 1e-6);
        CHECK(eval_terms(d, alpha, q, x) ==
              Catch::Approx(numeric).epsilon(1e-6).margin(1e-8));
    }
}

TEST_CASE("term merging combines matching exponents and drops zeros") {
    std::vector<ExprTerm> terms;
    merge_term(terms, ExprTerm{1.5, 2.0, 1.0});
    merge_term(terms, ExprTerm{0.0, 9.0, 9.0});
    merge_term(terms, ExprTerm{2.5, 2.0, 1.0});
    REQUIRE(terms.size() == 1);
    CHECK(terms[0].coef == 4.0);
}

TEST_CASE("spec construction mirrors the branch data") {
    // closed-form ladder of the deep classical well
    const double a11_want[] = {24.0, 10.5, 16.0 / 3.0, 2.25};
    const double b11_want[] = {-25.0, -11.5, -19.0 / 3.0, -3.25};
    for (int n = 0; n <= 3; ++n) {
        const auto ws = classical_spec(n);
        CHECK(ws.a11 == Catch::Approx(a11_want[n]).epsilon(1e-9));
        CHECK(ws.b11 == Catch::Approx(b11_want[n]).epsilon(1e-9));
        CHECK(ws.rho_t_exp == Catch::Approx(1.0).epsilon(1e-9));
        CHECK(ws.phi_t_exp == Catch::Approx(1.0).epsilon(1e-9));
        CHECK(ws.jacobi_a == Catch::Approx(ws.a11).epsilon(1e-14));
        CHECK(ws.jacobi_b == Catch::Approx(1.0).epsilon(1e-9));
        CHECK(ws.x_support == Catch::Approx(1.0).epsilon(1e-14));
        CHECK(ws.a11 >= 0.0);
        CHECK(ws.norm_const == 1.0);
        // the slope coefficient is minus twice the square-root prefactor
        const auto shape = DimensionlessParams::make(0.0, 25.0, 0.0, 1.0);
        const auto lo = solve_eps_fractional(shape, kClassical, n);
        CHECK(ws.b11 == Catch::Approx(-2.0 * lo.nu.P).epsilon(1e-9));
    }
    const auto ws0 = classical_spec(0);
    CHECK_THROWS_AS(build_spec(solve_eps_fractional(DimensionlessParams::make(0.0, 25.0, 0.0, 1.0),
                                                    kClassical, 0)
                                   .nu,
                               -1),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_spec(solve_eps_fractional(DimensionlessParams::make(0.0, 25.0, 0.0, 1.0),
                                                    kClassical, 0)
                                   .nu,
                               13),
                    std::invalid_argument);
    (void)ws0;
}

TEST_CASE("support edge zeroes the deformation factor") {
    const auto shape = DimensionlessParams::make(0.0, 25.0, 0.0, 2.0);
    const auto lo = solve_eps_fractional(shape, FractionalOrder::make(0.8, 1.0), 0);
    REQUIRE(lo.feasible);
    const auto ws = build_spec(lo.nu, 0);
    CHECK(ws.x_support == Catch::Approx(std::pow(2.0, -1.25)).epsilon(1e-13));
    CHECK(1.0 - ws.q * std::pow(ws.x_support, ws.alpha) ==
          Catch::Approx(0.0).margin(1e-12));
}

TEST_CASE("zeroth polynomial is identically one") {
    const auto ws = classical_spec(0);
    for (double x : {0.1, 0.5, 0.9}) CHECK(rodrigues_yn(ws, x) == Catch::Approx(1.0).epsilon(1e-13));
    const auto terms = rodrigues_terms(ws);
    REQUIRE(terms.size() == 1);
    CHECK(terms[0].coef == 1.0);
    CHECK(terms[0].e == 0.0);
    CHECK(terms[0].f == 0.0);
}

TEST_CASE("first polynomial matches the closed form") {
    const auto ws = classical_spec(1);
    for (double x : {0.2, 0.4, 0.6}) {
        CHECK(rodrigues_yn(ws, x) == Catch::Approx(11.5 - 13.5 * x).epsilon(1e-10));
    }
}

TEST_CASE("polynomial structure: powers of x^alpha up to degree n") {
    const auto shape = DimensionlessParams::make(0.0, 25.0, 0.0, 1.0);
    const auto lo = solve_eps_fractional(shape, FractionalOrder::make(0.8, 1.0), 2);
    REQUIRE(lo.feasible);
    const auto ws = build_spec(lo.nu, 2);
    for (const auto& t : rodrigues_terms(ws)) {
        const double k = t.e / ws.alpha;
        CHECK(std::fabs(k - std::round(k)) < 1e-9);
        CHECK(t.e < 2.0 * ws.alpha + 1e-9);
        CHECK(t.f > -1e-9);
    }
}

TEST_CASE("polynomials stay proportional to the matching jacobi family") {
    for (int n = 1; n <= 3; ++n) {
        const auto ws = classical_spec(n);
        const JacobiParams jp(n, ws.jacobi_a, ws.jacobi_b);
        const double x0 = 0.2;
        const double y0 = rodrigues_yn(ws, x0);
        const double j0 = jacobi_eval(jp, 1.0 - 2.0 * ws.q * std::pow(x0, ws.alpha));
        for (double x : {0.35, 0.5, 0.65, 0.8}) {
            const double y = rodrigues_yn(ws, x);
            const double j = jacobi_eval(jp, 1.0 - 2.0 * ws.q * std::pow(x, ws.alpha));
            // proportionality without dividing: y(x) j(x0) = y(x0) j(x)
            const double lhs = y * j0;
            const double rhs = y0 * j;
            CHECK(lhs == Catch::Approx(rhs)
                             .epsilon(1e-7)
                             .margin(1e-7 * (std::fabs(lhs) + std::fabs(rhs) + 1.0)));
        }
    }
}

TEST_CASE("weight satisfies its defining differential relation") {
    const auto ws = classical_spec(1);
    const auto shape = DimensionlessParams::make(0.0, 25.0, 0.0, 1.0);
    const auto lo = solve_eps_fractional(shape, kClassical, 1);
    for (double x : {0.2, 0.35, 0.5, 0.65, 0.8}) {
        const double lhs = central_diff(
            [&](double t) {
                return t * (1.0 - ws.q * std::pow(t, ws.alpha)) * rho_weight(ws, t);
            },
            x);
        const double rhs = lo.nu.tau_f_at(x) * rho_weight(ws, x);
        CHECK(lhs == Catch::Approx(rhs).epsilon(1e-6).margin(1e-8));
    }
}

TEST_CASE("prefactor satisfies its defining logarithmic derivative") {
    const auto ws = classical_spec(2);
    const auto shape = DimensionlessParams::make(0.0, 25.0, 0.0, 1.0);
    const auto lo = solve_eps_fractional(shape, kClassical, 2);
    for (double x : {0.3, 0.6}) {
        const double dphi = central_diff([&](double t) { return phi_factor(ws, t); }, x);
        const double sigma = x * (1.0 - ws.q * std::pow(x, ws.alpha));
        const double rhs = lo.nu.pi_f_at(x) / sigma * phi_factor(ws, x);
        CHECK(dphi == Catch::Approx(rhs).epsilon(1e-6).margin(1e-8));
    }
}

TEST_CASE("assembled function vanishes at both ends of the physical domain") {
    const auto ws = classical_spec(0);
    const double beta1 = 0.7692308;
    CHECK(radial_R(ws, beta1, 0.0) == 0.0);  // q = 1: deformation factor hits zero
    double prev = std::fabs(radial_R(ws, beta1, 10.0));
    for (double r : {15.0, 20.0}) {
        const double cur = std::fabs(radial_R(ws, beta1, r));
        CHECK(cur < prev);
        prev = cur;
    }
    CHECK(prev < 1e-30);
}

TEST_CASE("jacobi factor changes sign n times inside the support") {
    for (int n = 0; n <= 3; ++n) {
        const auto ws = classical_spec(n);
        const JacobiParams jp(n, ws.jacobi_a, ws.jacobi_b);
        int flips = 0;
        double last = 0.0;
        for (int i = 1; i < 1000; ++i) {
            const double x = ws.x_support * static_cast<double>(i) / 1000.0;
            const double v = jacobi_eval(jp, 1.0 - 2.0 * ws.q * std::pow(x, ws.alpha));
            if (last != 0.0 && v * last < 0.0) ++flips;
            last = v;
        }
        CHECK(flips == n);
    }
}

TEST_CASE("r-space evaluation requires the classical order") {
    const auto shape = DimensionlessParams::make(0.0, 25.0, 0.0, 1.0);
    const auto lo = solve_eps_fractional(shape, FractionalOrder::make(0.8, 1.0), 0);
    REQUIRE(lo.feasible);
    const auto ws = build_spec(lo.nu, 0);
    CHECK_THROWS_AS(radial_R(ws, 0.7692308, 1.0), std::domain_error);
    CHECK_THROWS_AS(norm_integral(ws, 0.7692308), std::domain_error);
    CHECK(std::isfinite(radial_R_x(ws, 0.4)));  // transformed-variable path stays open
}

TEST_CASE("normalization produces a unit square integral") {
    for (int n = 0; n <= 2; ++n) {
        const auto levels = enumerate_levels(kDeepWell, kClassical, 3);
        REQUIRE(static_cast<int>(levels.size()) > n);
        const auto shape = dimensionless(kDeepWell);
        const auto lo = solve_eps_fractional(shape, kClassical, n);
        const auto ws = build_spec(lo.nu, n);
        const auto wn = normalize(ws, kDeepWell.beta1);
        CHECK(wn.norm_const > 0.0);
        CHECK(norm_integral(wn, kDeepWell.beta1) == Catch::Approx(1.0).epsilon(1e-6));
    }
}

TEST_CASE("square integral scales quadratically with the stored constant") {
    const auto shape = dimensionless(kDeepWell);
    const auto lo = solve_eps_fractional(shape, kClassical, 0);
    auto ws = build_spec(lo.nu, 0);
    const double base = norm_integral(ws, kDeepWell.beta1);
    ws.norm_const = 2.0;
    CHECK(norm_integral(ws, kDeepWell.beta1) == Catch::Approx(4.0 * base).epsilon(1e-12));
}

TEST_CASE("norm integral is insensitive to the far cutoff") {
    const auto shape = dimensionless(kDeepWell);
    const auto lo = solve_eps_fractional(shape, kClassical, 0);
    const auto ws = normalize(build_spec(lo.nu, 0), kDeepWell.beta1);
    const double i15 = norm_integral(ws, kDeepWell.beta1, 15.0);
    const double i20 = norm_integral(ws, kDeepWell.beta1, 20.0);
    CHECK(std::fabs(i20 - i15) < 1e-8);
}

TEST_CASE("floor-pinned level is flagged non-normalizable") {
    const auto shape = DimensionlessParams::make(0.0, 25.0, 0.0, 1.0);
    const auto lo = solve_eps_fractional(shape, kClassical, 4);
    REQUIRE(lo.feasible);
    REQUIRE(lo.boundary);
    const auto ws = build_spec(lo.nu, 4);
    CHECK(ws.phi_x_exp == Catch::Approx(0.0).margin(1e-9));
    CHECK_THROWS_AS(norm_integral(ws, 0.7692308), std::runtime_error);
    CHECK_THROWS_AS(norm_constant(ws, 0.7692308), std::runtime_error);
}

TEST_CASE("quadrature argument validation for the norm") {
    const auto ws = classical_spec(0);
    CHECK_THROWS_AS(norm_integral(ws, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(norm_integral(ws, -1.0), std::invalid_argument);
}

TEST_CASE("jacobi family of a spec is orthogonal under its weight") {
    const auto ws = classical_spec(1);
    const double i00 = orthogonality_integral(ws, 0, 0);
    const double i11 = orthogonality_integral(ws, 1, 1);
    const double i01 = orthogonality_integral(ws, 0, 1);
    REQUIRE(i00 > 0.0);
    REQUIRE(i11 > 0.0);
    CHECK(std::fabs(i01) / std::sqrt(i00 * i11) < 1e-6);
}
