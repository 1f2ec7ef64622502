#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "besselsub/densities.hpp"
#include "besselsub/mellin_fox.hpp"

using namespace besselsub;
using Catch::Approx;

TEST_CASE("mellin kernel gamma ratios")
{
    // iterated-Bessel spec at real eta, gamma = 2:
    // Gamma(eta/2 + 1/2) Gamma(eta/4 + 3/4) / Gamma(1)^2
    const auto spec2 = fox::iterated_bessel_fox_spec(2.0);
    for (double eta : {0.5, 1.0, 2.0, 3.5}) {
        const double expect = std::tgamma(0.5 * eta + 0.5) * std::tgamma(0.25 * eta + 0.75);
        CHECK(fox::mellin_kernel(spec2, {eta, 0.0}).real() == Approx(expect).epsilon(1e-12));
    }
    // trivial identity spec: m=1, p=q=1, b=0, beta=1, a=1, alpha=0 at eta=1
    fox::FoxHSpec triv;
    triv.m = 1;
    triv.n = 0;
    triv.p = 1;
    triv.q = 1;
    triv.upper = {{1.0, 0.0}};
    triv.lower = {{0.0, 1.0}};
    CHECK(fox::mellin_kernel(triv, {1.0, 0.0}).real() == Approx(1.0).epsilon(1e-13));
    // gamma = 1 spec at eta = 2: Gamma(1) Gamma(3/4) / Gamma(1/2)^2
    const auto spec1 = fox::iterated_bessel_fox_spec(1.0);
    CHECK(fox::mellin_kernel(spec1, {2.0, 0.0}).real()
          == Approx(std::tgamma(0.75) / (std::tgamma(0.5) * std::tgamma(0.5))).epsilon(1e-12));
    // pole proximity must be refused
    CHECK_THROWS_AS(fox::mellin_kernel(spec1, {0.0, 0.0}), fox::pole_error);
}

TEST_CASE("fox_h agrees with the double-integral density")
{
    // scale (2^3 t)^{1/4} = 1 at t = 1/8: H(r) itself is the density there
    const auto spec = fox::iterated_bessel_fox_spec(2.0);
    const fox::ContourSpec c;
    CHECK(fox::fox_h(spec, c, 1.0) == Approx(dens::iterated_bessel_density_quadrature(2.0, 1.0, 0.125)).epsilon(1e-9));
    // shift property H(x) = x^{-1} H[shifted](x)
    CHECK(fox::fox_h(spec.shifted(1.0), c, 0.7) / 0.7 == Approx(fox::fox_h(spec, c, 0.7)).epsilon(1e-10));
    // fox-route density integrates to one
    const double mass = quad::integrate([&](double r) {
                            return r > 0 ? dens::iterated_bessel_density_fox(3.0, r, 1.0) : 0.0;
                        }, 0.0, 3.0).value
                        + quad::integrate_semi_infinite([&](double r) {
                              return dens::iterated_bessel_density_fox(3.0, r, 1.0);
                          }, 3.0).value;
    CHECK(mass == Approx(1.0).margin(1e-6));
    fox::ContourSpec bad;
    bad.node_count = 62;
    CHECK_THROWS_AS(fox::fox_h(spec, bad, 1.0), std::invalid_argument);
}

TEST_CASE("pointwise fox vs quadrature on a parameter slice")
{
    for (double g : {1.0, 5.5})
        for (double r : {0.5, 2.0}) {
            const double a = dens::iterated_bessel_density_fox(g, r, 0.25);
            const double b = dens::iterated_bessel_density_quadrature(g, r, 0.25);
            CHECK(a == Approx(b).margin(1e-6));
        }
}

TEST_CASE("mellin_of_density")
{
    const double g = 2.0, t = 1.0;
    auto pdf = [&](double r) { return dens::iterated_bessel_density_quadrature(g, r, t); };
    const double scale = std::pow(8.0 * t, 0.25);
    CHECK(fox::mellin_of_density(pdf, 1.0, 1.0 - g, INFINITY, scale) == Approx(1.0).margin(1e-7));
    CHECK(fox::mellin_of_density(pdf, 2.0, 1.0 - g, INFINITY, scale)
          == Approx(std::pow(8.0, 0.25) * std::tgamma(1.5) * std::tgamma(1.25)).epsilon(1e-7));
    // R^gamma(T_t) law at eta = 3/2 equals the mu = 1/2 moment
    auto baf = [](double r) { return dens::bessel_at_fpt_density(2.0, r, 1.0); };
    CHECK(fox::mellin_of_density(baf, 1.5, -1.0, 2.0, 1.0)
          == Approx(std::tgamma(1.25) * std::tgamma(0.25) / std::sqrt(M_PI)).epsilon(1e-7));
    CHECK_THROWS_AS(fox::mellin_of_density(baf, 2.5, -1.0, 2.0, 1.0), std::domain_error);
}

TEST_CASE("contour refinement stability")
{
    const auto spec = fox::iterated_bessel_fox_spec(2.0);
    fox::ContourSpec c1, c2;
    c2.node_count = 2 * c1.node_count;
    CHECK(std::abs(fox::fox_h(spec, c1, 0.8) - fox::fox_h(spec, c2, 0.8)) < 1e-8);
}
