#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "besselsub/pde_verify.hpp"

using namespace besselsub;
using Catch::Approx;
using Row = std::vector<double>;

namespace {
Row nodes(double lo, double hi, double h)
{
    Row r;
    for (double x = lo; x <= hi + 1e-12; x += h) r.push_back(x);
    return r;
}
} // namespace

TEST_CASE("manufactured solution q = r^2 t: composed stencil equals the hand value")
{
    const double h = 0.1, t = 1.3; // large enough that eps/h^4 rounding stays under 1e-10
    const Row r = nodes(0.5, 2.0, h);
    for (double gamma : {1.0, 2.0}) {
        Row q(r.size());
        for (std::size_t i = 0; i < r.size(); ++i) q[i] = r[i] * r[i] * t;
        Row first, second;
        pde::apply_inner_bessel(q, r, h, gamma, first);
        pde::apply_adjoint_bessel(first, r, h, gamma, second);
        // analytic: B'(r^2 t) = (2 - 6(g-1) + (g-1)(2g-1)) t =: c t, then
        // A(c t) = (g-1) c t / r^2
        const double c = 2.0 - 6.0 * (gamma - 1.0) + (gamma - 1.0) * (2.0 * gamma - 1.0);
        for (std::size_t i = 2; i + 2 < r.size(); ++i)
            CHECK(second[i] == Approx((gamma - 1.0) * c * t / (r[i] * r[i])).margin(1e-10));
        // swapped order differs for gamma != 1: B'(A(r^2 t)) has a different coefficient
        if (gamma != 1.0) {
            pde::apply_adjoint_bessel(q, r, h, gamma, first);
            pde::apply_inner_bessel(first, r, h, gamma, second);
            const double a = 2.0 - (gamma - 1.0); // A(r^2 t) = a t
            const double swapped = (gamma - 1.0) * (2.0 * gamma - 1.0) * a; // B'(a t) r^2 coefficient
            CHECK(std::abs(swapped - (gamma - 1.0) * c) > 0.5);
        }
    }
}

TEST_CASE("manufactured solution q = r^3 on the J_R operator at gamma = 1")
{
    const double h = 0.02;
    const Row r = nodes(0.5, 2.0, h);
    Row q(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) q[i] = r[i] * r[i] * r[i];
    // -(1/2)[r q''' + 2(2-gamma) q''] at gamma = 1: hand value -(1/2)(6r + 12r) = -9r
    for (std::size_t i = 2; i + 2 < r.size(); ++i) {
        const double d3 = (-q[i - 2] + 2.0 * q[i - 1] - 2.0 * q[i + 1] + q[i + 2]) / (2.0 * h * h * h);
        const double d2 = (q[i + 1] - 2.0 * q[i] + q[i - 1]) / (h * h);
        const double op = -0.5 * (r[i] * d3 + 2.0 * d2);
        CHECK(op == Approx(-9.0 * r[i]).margin(1e-10));
    }
}

TEST_CASE("manufactured solution p = eta t on the hyperbolic drift operator")
{
    const double h = 0.05, t = 0.7, c = 2.0;
    const Row eta = nodes(0.5, 2.0, h);
    Row p(eta.size());
    for (std::size_t i = 0; i < eta.size(); ++i) p[i] = eta[i] * t;
    Row out;
    pde::apply_hyperbolic(p, eta, h, c, out);
    for (std::size_t i = 1; i + 1 < eta.size(); ++i) {
        const double s = std::sinh(eta[i]);
        const double hand = -c * (t / std::tanh(eta[i]) - eta[i] * t / (s * s));
        CHECK(out[i] == Approx(hand).margin(1e-10));
    }
}

TEST_CASE("printed gamma = 3/2 composed and reduced displays agree as operators")
{
    // apply both (printed) forms analytically to r^a and compare symbols
    auto composed = [](double a) { // A(B_printed .) at gamma = 3/2 on r^a
        const double b = a * (a - 1.0) + 0.5 * a;         // B r^a = b r^{a-2}
        return b * ((a - 3.0) * (a - 2.0) - 0.5 * (a - 3.0)); // A(b r^{a-2})
    };
    auto reduced = [](double a) { // d^4 - (3/4) d (r^{-2} d .)
        return a * (a - 1.0) * (a - 2.0) * (a - 3.0) - 0.75 * a * (a - 3.0);
    };
    for (double a : {0.5, 1.0, 2.5, 4.0, 6.0})
        CHECK(composed(a) == Approx(reduced(a)).margin(1e-12));
}

TEST_CASE("residual refinement on light grids")
{
    pde::GridSpec jr{0.7, 1.8, 0.8, 1.2, 0.05, 0.05, 3};
    const auto rep = pde::verify_jr_pde(2.0, jr, true);
    CHECK(rep.convergence_slope == Approx(2.0).margin(0.3)); // the stated [1.7, 2.3] window
    CHECK(rep.final_max() < 1e-3);
    const auto printed = pde::verify_jr_pde(2.0, jr, false);
    CHECK(printed.final_max() > 1e-2);

    pde::GridSpec lap{0.8, 1.8, 0.8, 1.8, 0.1, 0.1, 3};
    const auto cauchy = pde::verify_laplace_type_pde(pde::LaplaceLaw::bessel_at_fpt, 1.0, lap);
    CHECK(cauchy.convergence_slope > 1.5);
    const auto fpt1 = pde::verify_iterated_fpt_pde(1, pde::GridSpec{0.7, 1.5, 0.8, 1.2, 0.05, 0.05, 3});
    CHECK(fpt1.convergence_slope > 1.5);
    // grids whose margins would cross the origin are refused
    pde::GridSpec bad{0.05, 1.0, 0.5, 1.0, 0.05, 0.05, 3};
    CHECK_THROWS_AS(pde::verify_jr_pde(2.0, bad, true), std::invalid_argument);
    CHECK(pde::iterated_fpt_laplace_ode_residual(3, 1.0) < 1e-12);
}
