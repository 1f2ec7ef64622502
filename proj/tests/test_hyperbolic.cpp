#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "besselsub/hyperbolic.hpp"

using namespace besselsub;
using Catch::Approx;

TEST_CASE("p2: normalization, conventions, Bessel-expectation form")
{
    const double mass = quad::integrate([](double e) { return e > 0 ? hyp::p2_density(e, 1.0) : 0.0; }, 0.0, 3.0).value
                        + quad::integrate_semi_infinite([](double e) { return hyp::p2_density(e, 1.0); }, 3.0).value;
    CHECK(mass == Approx(1.0).margin(1e-6));
    // whole-clock law at t equals half-clock law at 2t
    for (double e : {0.5, 1.0, 2.0})
        CHECK(hyp::p2_density(e, 1.0, hyp::Convention::whole)
              == Approx(hyp::p2_density(e, 2.0, hyp::Convention::half)).epsilon(1e-11));
    // quadrature version of the Bessel-expectation characterization:
    // p2(eta,t) = e^{-t/8}/sqrt(pi t) * E[1{R2 > eta} sinh eta / sqrt(cosh R2 - cosh eta)]
    const double eta = 1.0, t = 1.0;
    auto integrand = [&](double u) { // phi = eta + u^2 again removes the endpoint
        const double phi = eta + u * u;
        const double q2 = phi * std::exp(-phi * phi / (2.0 * t)) / t; // dim-2 Bessel density
        const double den = std::cosh(phi) - std::cosh(eta);
        if (den <= 0.0) return 2.0 * eta * std::exp(-eta * eta / (2.0 * t)) * std::sinh(eta) / (t * std::sqrt(std::sinh(eta)));
        return 2.0 * u * std::sinh(eta) * q2 / std::sqrt(den);
    };
    const double mean = quad::integrate(integrand, 0.0, 8.0).value;
    CHECK(std::exp(-t / 8.0) / std::sqrt(M_PI * t) * mean == Approx(hyp::p2_density(eta, t)).epsilon(1e-8));
}

TEST_CASE("p3: closed forms and representations")
{
    const double mass = quad::integrate([](double e) { return hyp::p3_density(e, 1.0, hyp::Convention::whole); },
                                        0.0, 60.0).value;
    CHECK(mass == Approx(1.0).margin(1e-8));
    for (double e : {0.5, 1.0, 2.0})
        for (double t : {0.5, 1.0}) {
            const double a = hyp::p3_density(e, t, hyp::Convention::half);
            CHECK(a == Approx(hyp::p3_density_bessel_form(e, t)).epsilon(1e-12));
            CHECK(a == Approx(hyp::p3_density_fpt_form(e, t)).epsilon(1e-12));
            CHECK(a == Approx(hyp::p3_density_drifted_fpt_form(e, t)).epsilon(1e-12));
        }
    // E[sinh R3 / R3] = e^{t/2} by quadrature against the Bessel-3 law
    const double m = quad::integrate([](double e) { return std::sinh(e) / e * dens::bessel_marginal(3.0, e, 1.0); },
                                     0.0, 10.0).value
                     + quad::integrate_semi_infinite([](double e) {
                           return e < 60.0 ? std::sinh(e) / e * dens::bessel_marginal(3.0, e, 1.0) : 0.0;
                       }, 10.0).value;
    CHECK(m == Approx(std::exp(0.5)).epsilon(1e-9));
}

TEST_CASE("subordinated laws: dual routes and the convention probe")
{
    CHECK(hyp::pj2_density(1.0, 1.0) == Approx(hyp::pj2_density_oracle(1.0, 1.0)).margin(1e-6));
    CHECK(hyp::pj3_density(1.0, 1.0) == Approx(hyp::pj3_density_oracle(1.0, 1.0)).margin(1e-7));
    CHECK(hyp::pj3_density(1.0, 1.0, hyp::Convention::half)
          == Approx(hyp::pj3_density_oracle(1.0, 1.0, hyp::Convention::half)).margin(1e-7));
    // the half-clock composite is the printed form read at t' = t / sqrt 2
    CHECK(hyp::pj3_density(1.0, 1.0, hyp::Convention::half)
          == Approx(hyp::pj3_density(1.0, 1.0 / std::sqrt(2.0), hyp::Convention::whole)).epsilon(1e-12));
    // masses: the printed eta^2 + 2t^2 form normalizes, the intro variant does not
    CHECK(hyp::j_law_mass([](double e) { return hyp::pj3_density(e, 1.0); }) == Approx(1.0).margin(1e-6));
    CHECK(hyp::j_law_mass([](double e) { return hyp::pj2_density(e, 1.0); }) == Approx(1.0).margin(1e-5));
    CHECK(std::abs(hyp::j_law_mass([](double e) { return hyp::pj3_density_intro_variant(e, 1.0); }) - 1.0) > 1e-2);
    // heavy eta^{-3/2} tails evaluate stably far out
    CHECK(hyp::pj2_density(1e10, 1.0) * std::pow(1e10, 1.5) == Approx(hyp::pj2_density(1e12, 1.0) * std::pow(1e12, 1.5)).epsilon(1e-6));
}

TEST_CASE("K2 recursion leaves the J2 integrand unchanged")
{
    // K2(x) vs K0(x) + (2/x) K1(x) at a J2-relevant argument
    const double x = 0.5 * std::hypot(1.5, 1.0);
    CHECK(sf::bessel_k(2.0, x) == Approx(sf::bessel_k(0.0, x) + 2.0 / x * sf::bessel_k(1.0, x)).epsilon(1e-13));
}
