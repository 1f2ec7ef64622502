#pragma once

#include <cmath>
#include <stdexcept>

#include "besselsub/densities.hpp"
#include "besselsub/quadrature.hpp"
#include "besselsub/special.hpp"

// Hyperbolic-distance laws of Brownian motion on the Poincare half-spaces
// H2+ and H3+ and their first-passage subordinations.
//
// Two time conventions coexist in the literature: the generator with the
// factor 1/2 (our canonical clock, Convention::half) and the one without
// (Convention::whole); whole(eta, t) = half(eta, 2t). The subordinated laws
// keep the clock of the marginal they are built from: p_J2 subordinates the
// half-clock p2, while the eta^2 + 2t^2 closed form of p_J3 subordinates the
// whole-clock p3. The half-clock J3 composite (which satisfies the dim-3
// Laplace-type equation with no extra time rescaling) is exposed alongside.
//
// The J laws inherit the first-passage time's eta^{-3/2} tail, so all
// evaluators here are written in factored form that stays finite for
// arbitrarily large eta (no bare sinh/cosh of large arguments).

namespace besselsub::hyp {

enum class Convention { half, whole };

namespace detail {

// (cosh(eta + u2) - cosh(eta)) e^{-eta}, stable for all eta and small u2
inline double cosh_gap_scaled(double eta, double u2)
{
    return 0.5 * (std::expm1(u2) + std::exp(-2.0 * eta) * std::expm1(-u2));
}

} // namespace detail

// dim-2 distance density p2(eta, t): sinh(eta) e^{-t/8} / sqrt(pi t^3) *
// int_eta^inf phi e^{-phi^2/2t} / sqrt(cosh phi - cosh eta) dphi.
// The inverse-square-root endpoint is removed by phi = eta + u^2 and the
// sinh/cosh growth cancelled analytically.
inline double p2_density(double eta, double t, Convention conv = Convention::half,
                         const quad::QuadratureConfig& cfg = {})
{
    if (conv == Convention::whole) return p2_density(eta, 2.0 * t, Convention::half, cfg);
    if (!(eta > 0.0) || !(t > 0.0)) throw std::domain_error("p2_density: eta, t > 0 required");
    const double half_mass = 0.5 * (1.0 - std::exp(-2.0 * eta)); // sinh(eta) e^{-eta}
    // sinh(eta)/sqrt(den) = half_mass * e^{eta/2} / sqrt(den e^{-eta}),
    // so the integrand carries e^{eta/2 - phi^2/2t} (bounded by e^{t/8})
    auto f = [&](double u) -> double {
        const double u2 = u * u;
        const double phi = eta + u2;
        const double ex = 0.5 * eta - phi * phi / (2.0 * t);
        if (ex < -745.0) return 0.0;
        const double D = detail::cosh_gap_scaled(eta, u2);
        if (D <= 0.0) { // u -> 0 limit
            return 2.0 * eta * std::exp(0.5 * eta - eta * eta / (2.0 * t))
                   / std::sqrt(0.5 * (1.0 - std::exp(-2.0 * eta)));
        }
        return 2.0 * u * phi * std::exp(ex) / std::sqrt(D);
    };
    const double u_hi = std::sqrt(std::max(45.0 * std::sqrt(t) + 5.0, 2.0 * eta));
    const double integral = quad::integrate(f, 0.0, u_hi, cfg).value;
    return half_mass * std::exp(-t / 8.0) / std::sqrt(M_PI * t * t * t) * integral;
}

// dim-3 distance density. Convention::whole is the e^{-t} eta e^{-eta^2/4t}
// display; Convention::half the Bessel-rescaled one.
inline double p3_density(double eta, double t, Convention conv = Convention::half)
{
    if (!(eta >= 0.0) || !(t > 0.0)) throw std::domain_error("p3_density: eta >= 0, t > 0 required");
    if (conv == Convention::half) return p3_density(eta, 0.5 * t, Convention::whole);
    if (eta == 0.0) return 0.0;
    const double ex = eta - t - eta * eta / (4.0 * t); // sinh(eta) ~ e^eta/2 folded in
    if (ex < -700.0) return 0.0;
    return 0.5 * (1.0 - std::exp(-2.0 * eta)) * eta * std::exp(ex) / (2.0 * std::sqrt(M_PI * t * t * t));
}

// half-clock rescaled form p3 = (sinh eta / eta) e^{-t/2} q3(eta, t)
inline double p3_density_bessel_form(double eta, double t)
{
    if (!(eta > 0.0)) return 0.0;
    if (eta > 700.0) return 0.0; // Gaussian factor vanishes far earlier
    return std::sinh(eta) / eta * std::exp(-0.5 * t) * dens::bessel_marginal(3.0, eta, t);
}

// half-clock first-passage form p3 = 2 sinh(eta) e^{-t/2} * Levy(t; level eta)
inline double p3_density_fpt_form(double eta, double t)
{
    if (!(eta > 0.0) || eta > 700.0) return 0.0;
    return 2.0 * std::sinh(eta) * std::exp(-0.5 * t) * dens::levy_fpt_density(eta, t);
}

// half-clock drifted-FPT form p3 = 2 sinh(eta) e^{-eta} * Pr{T^1_eta in dt}/dt
inline double p3_density_drifted_fpt_form(double eta, double t)
{
    if (!(eta > 0.0)) return 0.0;
    return (1.0 - std::exp(-2.0 * eta)) * dens::drifted_fpt_density(eta, 1.0, t);
}

// ---- J2 = B2^hp(T_t) ------------------------------------------------------
// (t sinh eta / (sqrt(8) pi)) int_eta^inf phi K2(sqrt(phi^2+t^2)/2)
//                                / ((phi^2+t^2) sqrt(cosh phi - cosh eta)) dphi

inline double pj2_density(double eta, double t, const quad::QuadratureConfig& cfg = {})
{
    if (!(eta > 0.0) || !(t > 0.0)) throw std::domain_error("pj2_density: eta, t > 0 required");
    const double half_mass = 0.5 * (1.0 - std::exp(-2.0 * eta)); // sinh(eta) e^{-eta}
    // the integral scales like eta^{-3/2} for large eta; normalize the
    // integrand to O(1) so absolute quadrature tolerances stay meaningful
    const double scale = std::pow(eta * eta + t * t, 0.75);
    auto f = [&](double u) -> double {
        const double u2 = u * u;
        const double phi = eta + u2;
        const double z = std::hypot(phi, t);
        // exp((eta - z)/2) with eta - z = -(u^2 + t^2/(phi + z)), exact
        const double ex = -0.5 * (u2 + t * t / (phi + z));
        if (ex < -740.0) return 0.0;
        const double k2s = sf::bessel_k_scaled(2.0, 0.5 * z);
        const double D = detail::cosh_gap_scaled(eta, u2);
        if (D <= 0.0) { // u -> 0 limit
            const double z0 = std::hypot(eta, t);
            return scale * 2.0 * eta * sf::bessel_k_scaled(2.0, 0.5 * z0)
                   * std::exp(-0.5 * t * t / (eta + z0))
                   / (z0 * z0 * std::sqrt(0.5 * (1.0 - std::exp(-2.0 * eta))));
        }
        return scale * 2.0 * u * phi * k2s * std::exp(ex) / ((phi * phi + t * t) * std::sqrt(D));
    };
    // the folded exponent carries e^{-u^2/2}, so the support ends near u ~ 40
    const double integral = quad::integrate(f, 0.0, 42.0, cfg).value / scale;
    return t * half_mass / (std::sqrt(8.0) * M_PI) * integral;
}

// subordination oracle: int_0^inf p2(eta, s) Levy(t; s) ds  (half clock)
inline double pj2_density_oracle(double eta, double t,
                                 const quad::QuadratureConfig& outer_cfg = quad::QuadratureConfig(1e-8, 1e-11),
                                 const quad::QuadratureConfig& inner_cfg = quad::QuadratureConfig(1e-10, 1e-13))
{
    auto f = [&](double s) { return p2_density(eta, s, Convention::half, inner_cfg) * dens::levy_fpt_density(t, s); };
    const double split = std::max(eta * eta + t * t, 0.5);
    return quad::integrate(f, 0.0, split, outer_cfg).value
           + quad::integrate_semi_infinite(f, split, outer_cfg).value;
}

// ---- J3 laws ----------------------------------------------------------------

namespace detail {
// c * eta * t * sinh(eta) * K2(z) / den in the factored form
// c * eta * t * (1 - e^{-2 eta})/2 * exp(eta - z) * K2s(z) / den
inline double pj3_core(double c, double eta, double t, double z, double den)
{
    const double ex = eta - z; // <= 0 since z >= eta
    if (ex < -700.0) return 0.0;
    return c * eta * t * 0.5 * (1.0 - std::exp(-2.0 * eta)) * std::exp(ex)
           * sf::bessel_k_scaled(2.0, z) / den;
}
} // namespace detail

// printed closed form (whole-clock p3 subordinated by the FPT law):
// (2 sqrt2 / pi) eta t sinh(eta) K2(sqrt(eta^2+2t^2)) / (eta^2 + 2t^2).
// Convention::half gives the half-clock composite
// (2/pi) eta t sinh(eta) K2(sqrt(eta^2+t^2)) / (eta^2 + t^2), which equals
// the printed form at t' = t/sqrt(2).
inline double pj3_density(double eta, double t, Convention conv = Convention::whole)
{
    if (!(eta >= 0.0) || !(t > 0.0)) throw std::domain_error("pj3_density: eta >= 0, t > 0 required");
    if (eta == 0.0) return 0.0;
    if (conv == Convention::half) {
        const double z = std::hypot(eta, t);
        return detail::pj3_core(2.0 / M_PI, eta, t, z, z * z);
    }
    const double z = std::hypot(eta, std::sqrt(2.0) * t);
    return detail::pj3_core(2.0 * std::sqrt(2.0) / M_PI, eta, t, z, z * z);
}

// the introduction's variant with the eta^2 + t^2 denominator; kept as the
// normalization-probe candidate only
inline double pj3_density_intro_variant(double eta, double t)
{
    if (!(eta > 0.0)) return 0.0;
    const double z = std::hypot(eta, std::sqrt(2.0) * t);
    return detail::pj3_core(2.0 * std::sqrt(2.0) / M_PI, eta, t, z, eta * eta + t * t);
}

// subordination oracle int_0^inf p3(eta, s) Levy(t; s) ds in either clock
inline double pj3_density_oracle(double eta, double t, Convention conv = Convention::whole,
                                 const quad::QuadratureConfig& cfg = {})
{
    auto f = [&](double s) { return p3_density(eta, s, conv) * dens::levy_fpt_density(t, s); };
    const double split = std::max(eta * eta + t * t, 0.5);
    return quad::integrate(f, 0.0, split, cfg).value + quad::integrate_semi_infinite(f, split, cfg).value;
}

// total mass of a J-type law with an eta^{-3/2} tail, head + mapped tail
template <class F>
inline double j_law_mass(F&& pdf, double head_cut = 50.0,
                         const quad::QuadratureConfig& cfg = {})
{
    return quad::integrate(pdf, 0.0, head_cut, cfg).value
           + quad::integrate_algebraic_tail(pdf, head_cut, cfg).value;
}

} // namespace besselsub::hyp
