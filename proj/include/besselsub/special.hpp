#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

#include "besselsub/quadrature.hpp"

// Self-contained special-function kernel: gamma family, modified Bessel
// I_nu/K_nu, Mittag-Leffler E_{1,nu}, and the master integral
//   int_0^inf x^{nu-1} exp(-beta x^p - gamma x^{-p}) dx
//     = (2/p) (gamma/beta)^{nu/2p} K_{nu/p}(2 sqrt(gamma beta))
// evaluated both by adaptive quadrature and by the closed form, the pair
// acting as this module's internal consistency oracle.

namespace besselsub::sf {

inline constexpr double kEulerGamma = 0.57721566490153286060651209;

struct BesselOrder {
    double nu = 0.0;
    explicit BesselOrder(double v) : nu(v)
    {
        if (!std::isfinite(v)) throw std::invalid_argument("BesselOrder: order must be finite");
    }
};

namespace detail {

// Taylor coefficients of 1/Gamma(z) = sum c_k z^k (A&S 6.1.34).
inline constexpr double kInvGammaCoef[26] = {
    1.00000000000000000000e+00,  5.77215664901532860607e-01,
    -6.55878071520253881077e-01, -4.20026350340952355290e-02,
    1.66538611382291489502e-01,  -4.21977345555443367482e-02,
    -9.62197152787697356211e-03, 7.21894324666309954240e-03,
    -1.16516759185906511211e-03, -2.15241674114950972816e-04,
    1.28050282388116186153e-04,  -2.01348547807882386557e-05,
    -1.25049348214267065735e-06, 1.13302723198169588237e-06,
    -2.05633841697760710345e-07, 6.11609510448141581786e-09,
    5.00200764446922293006e-09,  -1.18127457048702014459e-09,
    1.04342671169110051049e-10,  7.78226343990507125405e-12,
    -3.69680561864220570819e-12, 5.10037028745447597902e-13,
    -2.05832605356650678322e-14, -5.34812253942301798237e-15,
    1.22677862823826079016e-15,  -1.18125930169745876951e-16};

// gam1 = [1/Gamma(1-mu) - 1/Gamma(1+mu)] / (2 mu), gam2 = the even average.
// Both are smooth through mu = 0; with 1/Gamma(1+mu) = sum c_k mu^{k-1} the
// odd/even split removes the cancellation exactly.
inline void temme_gammas(double mu, double& gam1, double& gam2, double& one_over_gamma_1p, double& one_over_gamma_1m)
{
    double mu2 = mu * mu;
    double g1 = 0.0, g2 = 0.0, p = 1.0;
    for (int k = 0; 2 * k + 1 < 26; ++k) {
        g2 += kInvGammaCoef[2 * k] * p;         // c1 + c3 mu^2 + ...
        g1 += kInvGammaCoef[2 * k + 1] * p;     // c2 + c4 mu^2 + ...
        p *= mu2;
    }
    gam1 = -g1;
    gam2 = g2;
    one_over_gamma_1p = gam2 - mu * gam1;
    one_over_gamma_1m = gam2 + mu * gam1;
}

// Temme's series for K_mu(x), K_{mu+1}(x); requires |mu| <= 1/2 and x <= 2.
inline void bessel_k_temme(double x, double mu, double& kmu, double& kmu1)
{
    constexpr double eps = std::numeric_limits<double>::epsilon();
    const double x2 = 0.5 * x;
    const double pimu = M_PI * mu;
    const double fact = (std::abs(pimu) < 1e-14) ? 1.0 : pimu / std::sin(pimu);
    double d = -std::log(x2);
    double e = mu * d;
    const double fact2 = (std::abs(e) < 1e-14) ? 1.0 : std::sinh(e) / e;
    double gam1, gam2, gampl, gammi;
    temme_gammas(mu, gam1, gam2, gampl, gammi);
    double ff = fact * (gam1 * std::cosh(e) + gam2 * fact2 * d);
    double sum = ff;
    e = std::exp(e);
    double p = 0.5 * e / gampl;
    double q = 0.5 / (e * gammi);
    double c = 1.0;
    d = x2 * x2;
    double sum1 = p;
    const double mu2 = mu * mu;
    for (int i = 1; i <= 500; ++i) {
        ff = (i * ff + p + q) / (i * i - mu2);
        c *= d / i;
        p /= (i - mu);
        q /= (i + mu);
        const double del = c * ff;
        sum += del;
        const double del1 = c * (p - i * ff);
        sum1 += del1;
        if (std::abs(del) < std::abs(sum) * eps) break;
    }
    kmu = sum;
    kmu1 = sum1 * (2.0 / x);
}

// Steed/Thompson-Barnett CF2 for K_mu(x), K_{mu+1}(x); |mu| <= 1/2, x > 2.
// With scaled = true returns e^x K instead of K.
inline void bessel_k_cf2(double x, double mu, double& kmu, double& kmu1, bool scaled = false)
{
    constexpr double eps = std::numeric_limits<double>::epsilon();
    const double mu2 = mu * mu;
    double b = 2.0 * (1.0 + x);
    double d = 1.0 / b;
    double h = d, delh = d;
    double q1 = 0.0, q2 = 1.0;
    const double a1 = 0.25 - mu2;
    double q = a1, c = a1, a = -a1;
    double s = 1.0 + q * delh;
    for (int i = 2; i <= 10000; ++i) {
        a -= 2 * (i - 1);
        c = -a * c / i;
        const double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const double dels = q * delh;
        s += dels;
        if (std::abs(dels / s) < eps) break;
    }
    h = a1 * h;
    kmu = std::sqrt(M_PI / (2.0 * x)) * (scaled ? 1.0 : std::exp(-x)) / s;
    kmu1 = kmu * (mu + x + 0.5 - h) / x;
}

} // namespace detail

namespace detail {
inline double bessel_k_impl(double nu, double x, bool scaled)
{
    if (!(x > 0.0)) throw std::domain_error("bessel_k: requires x > 0");
    nu = std::abs(nu);
    const int nl = static_cast<int>(nu + 0.5);
    const double mu = nu - nl; // in [-1/2, 1/2]
    double kmu, kmu1;
    if (x <= 2.0) {
        bessel_k_temme(x, mu, kmu, kmu1);
        if (scaled) {
            const double ex = std::exp(x); // x <= 2, no overflow
            kmu *= ex;
            kmu1 *= ex;
        }
    } else {
        bessel_k_cf2(x, mu, kmu, kmu1, scaled);
    }
    double km = kmu, kp = kmu1;
    for (int i = 1; i <= nl; ++i) {
        const double knext = km + (2.0 * (mu + i) / x) * kp;
        km = kp;
        kp = knext;
        if (!std::isfinite(kp)) throw std::range_error("bessel_k: overflow in recurrence");
    }
    return km; // K_{mu + nl} = K_nu
}
} // namespace detail

// Modified Bessel function of the second kind, real order (K_{-nu} = K_nu).
inline double bessel_k(double nu, double x) { return detail::bessel_k_impl(nu, x, false); }

inline double bessel_k(BesselOrder nu, double x) { return bessel_k(nu.nu, x); }

// e^{x} K_nu(x); finite for arbitrarily large x
inline double bessel_k_scaled(double nu, double x) { return detail::bessel_k_impl(nu, x, true); }

// Modified Bessel function of the first kind, order nu > -1, x >= 0.
// Power series for moderate argument, Hankel asymptotic expansion beyond;
// the two branches overlap smoothly at the switch point.
inline double bessel_i(double nu, double x)
{
    if (!(x >= 0.0)) throw std::domain_error("bessel_i: requires x >= 0");
    if (!(nu > -1.0)) throw std::domain_error("bessel_i: requires nu > -1");
    const double kSwitch = std::max(25.0, 2.0 * nu * nu); // asymptotic tail needs x >> nu^2
    if (x == 0.0) {
        if (nu == 0.0) return 1.0;
        return (nu > 0.0) ? 0.0 : std::numeric_limits<double>::infinity();
    }
    if (x > 700.0) throw std::range_error("bessel_i: argument overflows double range");
    if (x <= kSwitch) {
        const double q = 0.25 * x * x;
        double term = std::exp(nu * std::log(0.5 * x) - std::lgamma(nu + 1.0));
        double sum = term;
        for (int k = 1; k <= 2000; ++k) {
            term *= q / (k * (nu + k));
            sum += term;
            if (term < sum * std::numeric_limits<double>::epsilon()) break;
        }
        return sum;
    }
    // I_nu(x) ~ e^x / sqrt(2 pi x) * sum_k (-1)^k a_k(nu) / x^k
    const double mu4 = 4.0 * nu * nu;
    double term = 1.0, sum = 1.0, prev = std::numeric_limits<double>::infinity();
    for (int k = 1; k <= 40; ++k) {
        const double odd = 2.0 * k - 1.0;
        term *= -(mu4 - odd * odd) / (8.0 * k * x);
        if (std::abs(term) >= prev) break; // divergent tail of the asymptotic series
        sum += term;
        prev = std::abs(term);
        if (std::abs(term) < std::abs(sum) * 1e-17) break;
    }
    return std::exp(x) / std::sqrt(2.0 * M_PI * x) * sum;
}

inline double bessel_i(BesselOrder nu, double x) { return bessel_i(nu.nu, x); }

// e^{-x} I_nu(x); stays finite for arbitrarily large x
inline double bessel_i_scaled(double nu, double x)
{
    if (x <= 700.0) return bessel_i(nu, x) * std::exp(-x);
    const double mu4 = 4.0 * nu * nu;
    double term = 1.0, sum = 1.0, prev = std::numeric_limits<double>::infinity();
    for (int k = 1; k <= 40; ++k) {
        const double odd = 2.0 * k - 1.0;
        term *= -(mu4 - odd * odd) / (8.0 * k * x);
        if (std::abs(term) >= prev) break;
        sum += term;
        prev = std::abs(term);
        if (std::abs(term) < std::abs(sum) * 1e-17) break;
    }
    return sum / std::sqrt(2.0 * M_PI * x);
}

// Regularized lower incomplete gamma P(a, x).
inline double gamma_p(double a, double x)
{
    if (!(a > 0.0) || x < 0.0) throw std::domain_error("gamma_p: requires a > 0, x >= 0");
    if (x == 0.0) return 0.0;
    constexpr double eps = std::numeric_limits<double>::epsilon();
    if (x < a + 1.0) {
        double ap = a, sum = 1.0 / a, del = sum;
        for (int n = 0; n < 500; ++n) {
            ap += 1.0;
            del *= x / ap;
            sum += del;
            if (std::abs(del) < std::abs(sum) * eps) break;
        }
        return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
    // continued fraction for Q(a,x)
    double b = x + 1.0 - a, c = 1e308, d = 1.0 / b, h = d;
    for (int i = 1; i < 500; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < 1e-300) d = 1e-300;
        c = b + an / c;
        if (std::abs(c) < 1e-300) c = 1e-300;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < eps) break;
    }
    return 1.0 - std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

namespace detail {
inline double betacf(double a, double b, double x)
{
    constexpr double eps = std::numeric_limits<double>::epsilon();
    const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
    double c = 1.0, d = 1.0 - qab * x / qap;
    if (std::abs(d) < 1e-300) d = 1e-300;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= 500; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < 1e-300) d = 1e-300;
        c = 1.0 + aa / c;
        if (std::abs(c) < 1e-300) c = 1e-300;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < 1e-300) d = 1e-300;
        c = 1.0 + aa / c;
        if (std::abs(c) < 1e-300) c = 1e-300;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < eps) break;
    }
    return h;
}
} // namespace detail

// Regularized incomplete beta I_x(a, b).
inline double beta_inc(double a, double b, double x)
{
    if (!(a > 0.0) || !(b > 0.0)) throw std::domain_error("beta_inc: requires a, b > 0");
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double bt = std::exp(std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b)
                               + a * std::log(x) + b * std::log1p(-x));
    if (x < (a + 1.0) / (a + b + 2.0))
        return bt * detail::betacf(a, b, x) / a;
    return 1.0 - bt * detail::betacf(b, a, 1.0 - x) / b;
}

inline double beta_fn(double a, double b)
{
    return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
}

inline double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

// Two-parameter Mittag-Leffler E_{alpha,beta}(x) = sum_k x^k / Gamma(alpha k + beta),
// for nonpositive arguments (where the alternating series is well conditioned
// at the moderate |x| this toolkit needs).
inline double mittag_leffler(double alpha, double beta, double x)
{
    if (!(alpha > 0.0) || !(beta > 0.0)) throw std::domain_error("mittag_leffler: requires alpha, beta > 0");
    if (x > 0.0) throw std::domain_error("mittag_leffler: implemented for nonpositive argument");
    double sum = 0.0;
    for (int k = 0; k <= 600; ++k) {
        const double term = ((k % 2) ? -1.0 : 1.0) * std::exp(k * std::log(std::max(-x, 1e-300)) - std::lgamma(alpha * k + beta));
        if (x == 0.0) return 1.0 / std::tgamma(beta);
        sum += term;
        if (k > -x && std::abs(term) < 1e-18 * std::max(1.0, std::abs(sum))) break;
    }
    return sum;
}

// the (1, nu) parameter slot: sum_k x^k / Gamma(k + nu)
inline double mittag_leffler_e1nu(double nu, double x) { return mittag_leffler(1.0, nu, x); }

// Master integral int_0^inf x^{nu-1} exp(-beta x^p - gamma x^{-p}) dx.
// Quadrature route, peak-normalized in log space so that the huge dynamic
// range of the integrand over wide parameter grids stays representable.
inline double master_integral_quadrature(double nu, double p, double beta, double gamma,
                                         const quad::QuadratureConfig& cfg = {})
{
    if (!(nu > 0.0 && p > 0.0 && beta > 0.0 && gamma > 0.0))
        throw std::domain_error("master_integral: all parameters must be positive");
    // substitute u = x^p: (1/p) int_0^inf u^{nu/p - 1} exp(-beta u - gamma/u) du,
    // which has exponential decay at both ends on O(1) scales for any p
    const double a = nu / p;
    auto logf = [&](double u) { return (a - 1.0) * std::log(u) - beta * u - gamma / u; };
    // the log-integrand peaks at the positive root of beta u^2 + (1-a) u - gamma = 0
    const double s = std::sqrt((1.0 - a) * (1.0 - a) + 4.0 * beta * gamma);
    const double upk = (a >= 1.0) ? ((a - 1.0) + s) / (2.0 * beta)
                                  : 2.0 * gamma / ((1.0 - a) + s);
    const double hmax = logf(upk);
    auto f = [&](double x) -> double {
        if (x <= 0.0) return 0.0;
        const double e = logf(x) - hmax;
        return (e < -745.0) ? 0.0 : std::exp(e);
    };
    const double left = quad::integrate(f, 0.0, upk, cfg).value;
    const double right = quad::integrate_semi_infinite(f, upk, cfg).value;
    return std::exp(hmax) * (left + right) / p;
}

inline double master_integral_closed_form(double nu, double p, double beta, double gamma)
{
    if (!(nu > 0.0 && p > 0.0 && beta > 0.0 && gamma > 0.0))
        throw std::domain_error("master_integral: all parameters must be positive");
    return 2.0 / p * std::pow(gamma / beta, 0.5 * nu / p) * bessel_k(nu / p, 2.0 * std::sqrt(gamma * beta));
}

// Returns the quadrature value; throws if the two routes disagree beyond
// 10x the quadrature tolerance (this pair is the module's internal oracle).
inline double master_integral(double nu, double p, double beta, double gamma,
                              const quad::QuadratureConfig& cfg = {})
{
    const double q = master_integral_quadrature(nu, p, beta, gamma, cfg);
    const double c = master_integral_closed_form(nu, p, beta, gamma);
    if (std::abs(q - c) > 10.0 * cfg.rel_tol * std::abs(c))
        throw quad::quad_error("master_integral: quadrature and closed form disagree", std::abs(q - c), q);
    return q;
}

} // namespace besselsub::sf
