#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

#include "besselsub/mellin_fox.hpp"
#include "besselsub/quadrature.hpp"
#include "besselsub/special.hpp"

// Closed-form density/CDF/moment evaluators for the Euclidean-side laws,
// each paired with an independent quadrature oracle built from its
// subordination (time-change) representation.
//
// Boundary convention at the origin for laws carrying a factor r^{gamma-1}:
// the evaluator returns 0 for gamma > 1, the finite limit for gamma = 1 and
// +inf for gamma < 1 (the law is genuinely unbounded there); CDFs stay finite.

namespace besselsub::dens {

inline constexpr double kInv2Pi = 0.15915494309189533576888;

// ---- building blocks ----------------------------------------------------

// zero-start Bessel marginal p(r,t) = 2 r^{g-1} e^{-r^2/2t} / ((2t)^{g/2} G(g/2))
inline double bessel_marginal(double gamma, double r, double t)
{
    if (!(gamma > 0.0) || !(t > 0.0)) throw std::domain_error("bessel_marginal: gamma, t > 0 required");
    if (r < 0.0) return 0.0;
    if (r == 0.0) {
        if (gamma > 1.0) return 0.0;
        if (gamma == 1.0) return 2.0 / std::sqrt(2.0 * M_PI * t);
        return std::numeric_limits<double>::infinity();
    }
    const double lp = std::log(2.0) + (gamma - 1.0) * std::log(r) - r * r / (2.0 * t)
                      - 0.5 * gamma * std::log(2.0 * t) - std::lgamma(0.5 * gamma);
    return std::exp(lp);
}

// transition law from x >= 0; x = 0 reduces to the marginal above
inline double bessel_transition(double gamma, double x, double r, double t)
{
    if (!(gamma > 0.0) || !(t > 0.0) || x < 0.0) throw std::domain_error("bessel_transition: bad arguments");
    if (x == 0.0) return bessel_marginal(gamma, r, t);
    if (r < 0.0) return 0.0;
    if (r == 0.0) return (gamma > 2.0) ? 0.0 : bessel_transition(gamma, x, 1e-300, t);
    const double nu = 0.5 * gamma - 1.0;
    const double z = x * r / t;
    // scaled product: I_nu(z) e^{-(x^2+r^2)/2t} = [e^{-z} I_nu(z)] e^{-(x-r)^2/2t}
    const double d = x - r;
    return (r / t) * std::pow(r / x, nu) * std::exp(-d * d / (2.0 * t)) * sf::bessel_i_scaled(nu, z);
}

// first-passage (Levy) density of T_level in the value variable s
inline double levy_fpt_density(double level, double s)
{
    if (!(level > 0.0)) throw std::domain_error("levy_fpt_density: level > 0 required");
    if (!(s > 0.0)) return 0.0;
    return level * std::exp(-level * level / (2.0 * s)) / std::sqrt(2.0 * M_PI * s * s * s);
}

inline double levy_fpt_cdf(double level, double s)
{
    if (!(s > 0.0)) return 0.0;
    return std::erfc(level / std::sqrt(2.0 * s));
}

// drifted first-passage density of T^mu_beta (inverse Gaussian for mu > 0)
inline double drifted_fpt_density(double beta, double mu, double s)
{
    if (!(beta > 0.0) || mu < 0.0) throw std::invalid_argument("drifted_fpt_density: beta > 0, mu >= 0 required");
    if (!(s > 0.0)) return 0.0;
    const double d = beta - mu * s;
    return beta * std::exp(-d * d / (2.0 * s)) / std::sqrt(2.0 * M_PI * s * s * s);
}

inline double drifted_fpt_cdf(double beta, double mu, double s)
{
    if (!(beta > 0.0) || mu < 0.0) throw std::invalid_argument("drifted_fpt_cdf: beta > 0, mu >= 0 required");
    if (!(s > 0.0)) return 0.0;
    if (mu == 0.0) return levy_fpt_cdf(beta, s);
    const double rs = std::sqrt(s);
    return sf::normal_cdf((mu * s - beta) / rs) + std::exp(2.0 * mu * beta) * sf::normal_cdf(-(mu * s + beta) / rs);
}

// law of (R^gamma(t))^2, the clock of J_R
inline double squared_bessel_clock_density(double gamma, double s, double t)
{
    if (!(s > 0.0)) return 0.0;
    const double lp = (0.5 * gamma - 1.0) * std::log(s) - s / (2.0 * t)
                      - 0.5 * gamma * std::log(2.0 * t) - std::lgamma(0.5 * gamma);
    return std::exp(lp);
}

// ---- iterated Bessel I_R(t) = R1(R2(t)) ---------------------------------

inline double iterated_bessel_density_quadrature(double gamma, double r, double t,
                                                 const quad::QuadratureConfig& cfg = {})
{
    if (!(gamma > 0.0) || !(t > 0.0)) throw std::domain_error("iterated_bessel_density: gamma, t > 0 required");
    if (r < 0.0) return 0.0;
    if (r == 0.0) {
        if (gamma > 1.0) return 0.0;
        if (gamma < 1.0) return std::numeric_limits<double>::infinity();
    }
    auto f = [&](double s) { return bessel_marginal(gamma, r, s) * bessel_marginal(gamma, s, t); };
    const double split = std::max(std::cbrt(0.5 * r * r * t), 1e-3 * std::sqrt(t));
    return quad::integrate(f, 0.0, split, cfg).value + quad::integrate_semi_infinite(f, split, cfg).value;
}

inline double iterated_bessel_density_fox(double gamma, double r, double t,
                                          const fox::ContourSpec& contour = {})
{
    if (!(r > 0.0)) throw std::domain_error("iterated_bessel_density_fox: r > 0 required");
    const double a = std::pow(8.0 * t, 0.25);
    return fox::fox_h(fox::iterated_bessel_fox_spec(gamma), contour, r / a) / a;
}

enum class IbMethod { quadrature, fox };

inline double iterated_bessel_density(double gamma, double r, double t,
                                      IbMethod method = IbMethod::quadrature)
{
    return method == IbMethod::fox ? iterated_bessel_density_fox(gamma, r, t)
                                   : iterated_bessel_density_quadrature(gamma, r, t);
}

// Mellin transform (2^3 t)^{(eta-1)/4} G(eta/2 + g/2 - 1/2) G(eta/4 + g/2 - 1/4) / G^2(g/2)
inline double iterated_bessel_mellin(double gamma, double eta, double t)
{
    if (!(eta > 1.0 - gamma)) throw std::domain_error("iterated_bessel_mellin: eta outside the strip");
    return std::pow(8.0 * t, 0.25 * (eta - 1.0))
           * std::exp(std::lgamma(0.5 * eta + 0.5 * gamma - 0.5) + std::lgamma(0.25 * eta + 0.5 * gamma - 0.25)
                      - 2.0 * std::lgamma(0.5 * gamma));
}

// integer moments E I_R(t)^m = 2^{m/2} (2t)^{m/4} G((m+g)/2) G(m/4+g/2) / G^2(g/2)
inline double iterated_bessel_moment(double gamma, double m, double t)
{
    return std::pow(2.0, 0.5 * m) * std::pow(2.0 * t, 0.25 * m)
           * std::exp(std::lgamma(0.5 * (m + gamma)) + std::lgamma(0.25 * m + 0.5 * gamma)
                      - 2.0 * std::lgamma(0.5 * gamma));
}

// ---- J_R(t) = R1(|R2(t)|^2) ----------------------------------------------

inline double jr_density(double gamma, double r, double t)
{
    if (!(gamma > 0.0) || !(t > 0.0)) throw std::domain_error("jr_density: gamma, t > 0 required");
    if (r < 0.0) return 0.0;
    if (r == 0.0) return (gamma > 1.0) ? 0.0 : std::numeric_limits<double>::infinity();
    const double lc = 2.0 * std::log(2.0) + (gamma - 1.0) * std::log(r)
                      - 0.5 * gamma * std::log(4.0 * t) - 2.0 * std::lgamma(0.5 * gamma);
    return std::exp(lc) * sf::bessel_k(0.0, r / std::sqrt(t));
}

inline double jr_density_oracle(double gamma, double r, double t, const quad::QuadratureConfig& cfg = {})
{
    auto f = [&](double s) { return bessel_marginal(gamma, r, s) * squared_bessel_clock_density(gamma, s, t); };
    const double split = std::max(r * std::sqrt(t), 1e-6);
    return quad::integrate(f, 0.0, split, cfg).value + quad::integrate_semi_infinite(f, split, cfg).value;
}

// ---- R^gamma(T_t) ---------------------------------------------------------

inline double bessel_at_fpt_density(double gamma, double r, double t)
{
    if (!(gamma > 0.0) || !(t > 0.0)) throw std::domain_error("bessel_at_fpt_density: gamma, t > 0 required");
    if (r < 0.0) return 0.0;
    if (r == 0.0) {
        if (gamma > 1.0) return 0.0;
        if (gamma < 1.0) return std::numeric_limits<double>::infinity();
    }
    const double lc = std::log(2.0 * t) + std::lgamma(0.5 * (gamma + 1.0)) - 0.5 * std::log(M_PI)
                      - std::lgamma(0.5 * gamma);
    const double core = (gamma == 1.0 && r == 0.0)
                            ? -0.5 * (gamma + 1.0) * std::log(t * t)
                            : (gamma - 1.0) * std::log(r) - 0.5 * (gamma + 1.0) * std::log(r * r + t * t);
    return std::exp(lc + core);
}

inline double bessel_at_fpt_cdf(double gamma, double r, double t)
{
    if (r <= 0.0) return 0.0;
    return sf::beta_inc(0.5 * gamma, 0.5, r * r / (r * r + t * t));
}

// closed tail forms produced by the recursion for gamma = 2, 3, 4;
// the gamma = 3 first term is r/(2(t^2+r^2)): the antiderivative of
// y^2/(y^2+t^2)^2 is -y/(2(y^2+t^2)) + arctan(y/t)/(2t), and the unhalved
// variant exceeds 1 at intermediate r
inline double bessel_at_fpt_tail_closed(int gamma, double r, double t)
{
    const double s2 = t * t + r * r;
    switch (gamma) {
        case 2: return t / std::sqrt(s2);
        case 3: return 4.0 * t / M_PI * (r / (2.0 * s2) + (0.5 / t) * (0.5 * M_PI - std::atan(r / t)));
        case 4: return t / std::sqrt(s2) + t * r * r / (2.0 * std::pow(s2, 1.5));
        default: throw std::domain_error("bessel_at_fpt_tail_closed: closed form only for gamma in {2,3,4}");
    }
}

// mu-moments, 0 < mu < 1
inline double bessel_at_fpt_mu_moment(double gamma, double mu, double t)
{
    if (!(mu > 0.0) || !(mu < 1.0)) throw std::domain_error("bessel_at_fpt_mu_moment: requires 0 < mu < 1");
    return std::exp(std::lgamma(0.5 * (gamma + mu)) + std::lgamma(0.5 * (1.0 - mu))
                    - 0.5 * std::log(M_PI) - std::lgamma(0.5 * gamma))
           * std::pow(t, mu);
}

inline double bessel_at_fpt_oracle(double gamma, double r, double t, const quad::QuadratureConfig& cfg = {})
{
    auto f = [&](double s) { return bessel_marginal(gamma, r, s) * levy_fpt_density(t, s); };
    const double split = std::max(0.5 * (r * r + t * t), 1e-6);
    return quad::integrate(f, 0.0, split, cfg).value + quad::integrate_semi_infinite(f, split, cfg).value;
}

// ---- hat R = 1 / (1 + R^gamma(T_t)) on (0,1) ------------------------------
//
// The pushforward of the R^gamma(T_t) law under w = 1/(1+r); equals the
// Cauchy-kernel power form with prefactor 2 t^{(1-gamma)/2} / sqrt(pi).

inline double hat_r_density(double gamma, double w, double t)
{
    if (!(w > 0.0) || !(w < 1.0)) throw std::domain_error("hat_r_density: requires 0 < w < 1");
    const double A = t / (1.0 + t * t);
    const double B = 1.0 / (1.0 + t * t);
    const double kern = A / ((w - B) * (w - B) + A * A);
    return 2.0 * std::pow(t, 0.5 * (1.0 - gamma)) / std::sqrt(M_PI)
           * std::exp(std::lgamma(0.5 * (gamma + 1.0)) - std::lgamma(0.5 * gamma))
           * std::pow(1.0 - w, gamma - 1.0) * std::pow(kern, 0.5 * (gamma + 1.0));
}

inline double hat_r_cdf(double gamma, double w, double t)
{
    if (w <= 0.0) return 0.0;
    if (w >= 1.0) return 1.0;
    return 1.0 - bessel_at_fpt_cdf(gamma, (1.0 - w) / w, t);
}

// ---- beta / arcsin law of t^3 / (t^2 + R^2) -------------------------------

inline double beta_arcsin_density(double gamma, double r, double t)
{
    if (!(r > 0.0) || !(r < t)) throw std::domain_error("beta_arcsin_density: requires 0 < r < t");
    return 1.0 / (t * sf::beta_fn(0.5 * gamma, 0.5)) * std::pow(r / t, -0.5)
           * std::pow(1.0 - r / t, 0.5 * gamma - 1.0);
}

inline double beta_arcsin_cdf(double gamma, double r, double t)
{
    if (r <= 0.0) return 0.0;
    if (r >= t) return 1.0;
    return sf::beta_inc(0.5, 0.5 * gamma, r / t);
}

// ---- 1 / R^gamma(T_t) ------------------------------------------------------

inline double inverse_bessel_at_fpt_density(double gamma, double r, double t)
{
    if (r < 0.0) return 0.0; // finite limit at r = 0, e.g. the folded-Cauchy value 2/pi
    return 2.0 * t / std::sqrt(M_PI) * std::exp(std::lgamma(0.5 * (gamma + 1.0)) - std::lgamma(0.5 * gamma))
           * std::pow(1.0 + r * r * t * t, -0.5 * (gamma + 1.0));
}

inline double inverse_bessel_at_fpt_cdf(double gamma, double r, double t)
{
    if (r <= 0.0) return 0.0;
    const double u = r * r * t * t / (1.0 + r * r * t * t);
    return sf::beta_inc(0.5, 0.5 * gamma, u);
}

// folded Student t with n degrees of freedom (the gamma = n, t = 1/sqrt(n) case)
inline double folded_student_density(int n, double r)
{
    return 2.0 / std::sqrt(M_PI * n) * std::exp(std::lgamma(0.5 * (n + 1.0)) - std::lgamma(0.5 * n))
           * std::pow(1.0 + r * r / n, -0.5 * (n + 1.0));
}

// ---- inverted composition T_{R^gamma(t)} ----------------------------------

inline double inverted_composition_density(double gamma, double x, double t)
{
    if (!(gamma > 0.0) || !(t > 0.0)) throw std::domain_error("inverted_composition_density: gamma, t > 0 required");
    if (x < 0.0) return 0.0;
    if (x == 0.0) {
        if (gamma > 2.0) return 0.0;
        if (gamma < 2.0) return std::numeric_limits<double>::infinity();
    }
    return std::exp(std::lgamma(0.5 * (gamma + 1.0)) - std::lgamma(0.5 * gamma)) / std::sqrt(M_PI)
           * std::sqrt(t) * std::pow(x, 0.5 * gamma - 1.0) * std::pow(x + t, -0.5 * (gamma + 1.0));
}

inline double inverted_composition_cdf(double gamma, double x, double t)
{
    if (x <= 0.0) return 0.0;
    return sf::beta_inc(0.5 * gamma, 0.5, x / (x + t));
}

// ---- Lamperti ratio of one-sided stable laws -------------------------------

inline double stable_ratio_density(double nu, double w)
{
    if (!(nu > 0.0) || !(nu < 1.0)) throw std::domain_error("stable_ratio_density: requires 0 < nu < 1");
    if (!(w > 0.0)) return (nu < 1.0 && w == 0.0) ? std::numeric_limits<double>::infinity() : 0.0;
    const double wn = std::pow(w, nu);
    return std::sin(M_PI * nu) / M_PI * std::pow(w, nu - 1.0)
           / (1.0 + wn * wn + 2.0 * wn * std::cos(M_PI * nu));
}

inline double stable_ratio_cdf(double nu, double w)
{
    if (w <= 0.0) return 0.0;
    const double c = std::cos(M_PI * nu), s = std::sin(M_PI * nu);
    return (std::atan((std::pow(w, nu) + c) / s) - std::atan(c / s)) / (M_PI * nu);
}

// Mellin transform sin(pi eta) / (nu sin(pi (1-eta)/nu)) on (1-nu, 1+nu)
inline double stable_ratio_mellin_closed(double nu, double eta)
{
    return std::sin(M_PI * eta) / (nu * std::sin(M_PI * (1.0 - eta) / nu));
}

// quadrature route for the Mellin transform: z = w^nu and z -> 1/z fold the
// endpoint spike and the slow tail onto [0,1] with bounded integrands
inline double stable_ratio_mellin_quadrature(double nu, double eta, const quad::QuadratureConfig& cfg = {})
{
    if (!(eta > 1.0 - nu) || !(eta < 1.0 + nu))
        throw std::domain_error("stable_ratio_mellin_quadrature: eta outside (1-nu, 1+nu)");
    const double a = (eta - 1.0) / nu; // |a| < 1
    const double c = std::cos(M_PI * nu);
    auto piece = [&](double expo) {
        return quad::integrate([&](double z) { return z <= 0.0 ? 0.0 : std::pow(z, expo) / (1.0 + z * z + 2.0 * z * c); },
                               0.0, 1.0, cfg).value;
    };
    return std::sin(M_PI * nu) / (M_PI * nu) * (piece(a) + piece(-a));
}

// ---- drifted composition R^gamma(T^mu_t) -----------------------------------

inline double drifted_composite_density(double gamma, double mu, double r, double t)
{
    if (mu < 0.0) throw std::invalid_argument("drifted_composite_density: mu < 0 defines a defective law");
    if (mu == 0.0) return bessel_at_fpt_density(gamma, r, t);
    if (r < 0.0) return 0.0;
    if (r == 0.0) {
        if (gamma > 1.0) return 0.0;
        if (gamma < 1.0) return std::numeric_limits<double>::infinity();
    }
    const double s2 = r * r + t * t;
    const double rpow = (gamma == 1.0) ? 0.0 : (gamma - 1.0) * std::log(r);
    const double lc = std::log(4.0 * t) + t * mu + rpow
                      - 0.5 * gamma * std::log(2.0) - std::lgamma(0.5 * gamma) - 0.5 * std::log(2.0 * M_PI)
                      + 0.25 * (gamma + 1.0) * std::log(mu * mu / s2);
    return std::exp(lc) * sf::bessel_k(0.5 * (gamma + 1.0), std::abs(mu) * std::sqrt(s2));
}

inline double drifted_composite_oracle(double gamma, double mu, double r, double t,
                                       const quad::QuadratureConfig& cfg = {})
{
    auto f = [&](double s) { return bessel_marginal(gamma, r, s) * drifted_fpt_density(t, mu, s); };
    const double split = std::max(std::sqrt(r * r + t * t) / std::max(mu, 0.3), 1e-6);
    return quad::integrate(f, 0.0, split, cfg).value + quad::integrate_semi_infinite(f, split, cfg).value;
}

// ---- iterated Brownian first-passage times ---------------------------------

inline double iterated_fpt_laplace(int n, double lambda, double t)
{
    if (n < 1) throw std::domain_error("iterated_fpt_laplace: n >= 1 required");
    const double e = 1.0 / std::pow(2.0, n); // 2^{-n}
    return std::exp(-t * std::pow(lambda, e) * std::pow(2.0, 1.0 - e));
}

// n = 2: int Levy(s -> x) Levy(t -> s) ds collapses under s = sqrt(x) w^2 to
//   (t x^{-5/4} / pi) int_0^inf exp(-w^8/2 ... ) dw  -- concretely
//   f2(x,t) = (t / (pi x^{5/4})) int_0^inf exp(-w^4/2 - t^2/(2 sqrt(x) w^2)) dw,
// a single analytic-integrand quadrature that stays conditioned for any x
// (the law is a stable-1/4 subordinator with an x^{-5/4} tail).
inline double iterated_fpt_density(int n, double x, double t, const quad::QuadratureConfig& cfg = {})
{
    if (!(x > 0.0)) return 0.0;
    if (n == 1) return levy_fpt_density(t, x);
    if (n != 2)
        throw std::invalid_argument("iterated_fpt_density: direct quadrature only for n <= 2 (use the Laplace transform or the sampler)");
    const double c = t * t / (2.0 * std::sqrt(x));
    auto f = [&](double w) -> double {
        if (w <= 0.0) return 0.0;
        const double e = -0.5 * w * w * w * w - c / (w * w);
        return (e < -745.0) ? 0.0 : std::exp(e);
    };
    const double split = std::max(1.0, std::pow(c, 1.0 / 6.0)); // integrand peak scale
    const double I = quad::integrate(f, 0.0, split, cfg).value + quad::integrate_semi_infinite(f, split, cfg).value;
    return t * std::pow(x, -1.25) * I / M_PI;
}

// ---- Cauchy and Cauchy-at-stable-time ---------------------------------------

inline double cauchy_density(double x, double t)
{
    return t / (M_PI * (t * t + x * x));
}

inline double cauchy_cdf(double x, double t) { return 0.5 + std::atan(x / t) / M_PI; }

// symmetric stable density (1/pi) int_0^inf cos(beta x) e^{-t beta^nu} d beta.
// Oscillatory quadrature for moderate |x|; for x^nu >> t the convergent
// inverse-power series (1/pi) sum (-1)^{k+1} G(k nu + 1) sin(k pi nu / 2)
// t^k / (k! x^{k nu + 1}) takes over (plain quadrature loses the tail to
// cancellation).
inline double cauchy_at_stable_density(double nu, double x, double t,
                                       const quad::QuadratureConfig& cfg = {})
{
    if (!(nu > 0.0) || nu > 1.0) throw std::domain_error("cauchy_at_stable_density: requires 0 < nu <= 1");
    if (nu == 1.0) return cauchy_density(x, t);
    x = std::abs(x);
    if (std::pow(x, nu) > 4.0 * t && x > 1.0) {
        double sum = 0.0;
        double lx = std::log(x), lt = std::log(t);
        for (int k = 1; k <= 400; ++k) {
            const double lterm = std::lgamma(k * nu + 1.0) - std::lgamma(k + 1.0) + k * lt
                                 - (k * nu + 1.0) * lx;
            const double term = ((k % 2) ? 1.0 : -1.0) * std::sin(0.5 * M_PI * k * nu) * std::exp(lterm);
            sum += term;
            if (std::abs(term) < 1e-18 * std::max(std::abs(sum), 1e-300) && k > 3) break;
        }
        return std::max(sum / M_PI, 0.0);
    }
    auto w = [&](double b) -> double {
        const double e = -t * std::pow(b, nu);
        return (e < -745.0) ? 0.0 : std::exp(e);
    };
    return quad::cosine_transform(w, x, std::pow(t, -1.0 / nu), cfg);
}

// ---- scalar identities -------------------------------------------------------

// residual of int_{-1/t}^{t} (t-y)^{gamma-1} (1+y^2)^{-(gamma+1)/2} dy
//           - (1+t^2)^{(gamma-1)/2} * B(gamma/2, 1/2) / 2.
// The closed side follows from the w = (1+y t)/(1+t^2) change of variables in
// the unit-mass integral of the hat-R law; it reduces to B(gamma/2,1/2)/2 at
// gamma = 1 and to sqrt(1+t^2) * B(1,1/2)/2 at gamma = 2 (checked against
// the elementary antiderivative).
inline double identity_integral_check(double gamma, double t, const quad::QuadratureConfig& cfg = {})
{
    if (!(gamma > 0.0) || !(t > 0.0)) throw std::domain_error("identity_integral_check: gamma, t > 0 required");
    double lhs;
    if (gamma >= 1.0) {
        auto f = [&](double y) { return std::pow(t - y, gamma - 1.0) * std::pow(1.0 + y * y, -0.5 * (gamma + 1.0)); };
        lhs = quad::integrate(f, -1.0 / t, t, cfg).value;
    } else {
        // v = (t-y)^gamma removes the endpoint singularity
        auto f = [&](double v) {
            const double y = t - std::pow(v, 1.0 / gamma);
            return std::pow(1.0 + y * y, -0.5 * (gamma + 1.0)) / gamma;
        };
        lhs = quad::integrate(f, 0.0, std::pow(t + 1.0 / t, gamma), cfg).value;
    }
    const double rhs = std::pow(1.0 + t * t, 0.5 * (gamma - 1.0)) * 0.5 * sf::beta_fn(0.5 * gamma, 0.5);
    return lhs - rhs;
}

// int_0^inf e^{-lambda^{1/nu} t x} w_nu(x) dx with w_nu the Lamperti density;
// substitution z = x^nu analytically removes the x^{nu-1} endpoint spike
inline double lamperti_laplace_integral(double nu, double lambda, double t,
                                        const quad::QuadratureConfig& cfg = {})
{
    const double rate = std::pow(lambda, 1.0 / nu) * t;
    const double c = std::cos(M_PI * nu), s = std::sin(M_PI * nu);
    auto f = [&](double z) -> double {
        if (z <= 0.0) return 0.0;
        const double e = -rate * std::pow(z, 1.0 / nu);
        if (e < -745.0) return 0.0;
        return s / (M_PI * nu) * std::exp(e) / (1.0 + z * z + 2.0 * z * c);
    };
    return quad::integrate(f, 0.0, 1.0, cfg).value + quad::integrate_semi_infinite(f, 1.0, cfg).value;
}

// Pr{T_t <= t} by quadrature of the slow-down integral
inline double fpt_slowdown_probability(double t, const quad::QuadratureConfig& cfg = {})
{
    auto f = [&](double x) { return levy_fpt_density(t, x); };
    return quad::integrate(f, 0.0, t, cfg).value;
}

} // namespace besselsub::dens
