#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "besselsub/quadrature.hpp"

// Numerical Mellin transform engine and Fox H-function evaluation by
// Mellin-Barnes contour integration, specialized to the parameter
// configurations arising from the iterated-Bessel density.

namespace besselsub::fox {

using complex = std::complex<double>;

class pole_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct FoxHSpec {
    int m = 0, n = 0, p = 0, q = 0;
    std::vector<std::pair<double, double>> upper; // (a_i, alpha_i), size p
    std::vector<std::pair<double, double>> lower; // (b_j, beta_j),  size q

    void validate() const
    {
        if (static_cast<int>(upper.size()) != p || static_cast<int>(lower.size()) != q)
            throw std::invalid_argument("FoxHSpec: parameter list lengths must match p and q");
        if (m > q || n > p || m < 0 || n < 0)
            throw std::invalid_argument("FoxHSpec: requires 0 <= m <= q and 0 <= n <= p");
        for (const auto& [a, alpha] : upper)
            if (alpha < 0.0) throw std::invalid_argument("FoxHSpec: weights alpha_i must be >= 0");
        for (const auto& [b, beta] : lower)
            if (beta < 0.0) throw std::invalid_argument("FoxHSpec: weights beta_j must be >= 0");
    }

    // H(x) = x^{-c} H[shifted](x) with all parameters advanced by c * weight
    FoxHSpec shifted(double c) const
    {
        FoxHSpec s = *this;
        for (auto& [a, alpha] : s.upper) a += c * alpha;
        for (auto& [b, beta] : s.lower) b += c * beta;
        return s;
    }
};

struct ContourSpec {
    double theta = 1.0;       // vertical line abscissa
    double half_length = 40.0;
    int node_count = 2048;    // even

    void validate() const
    {
        if (node_count < 64 || node_count % 2 != 0)
            throw std::invalid_argument("ContourSpec: node_count must be even and >= 64");
        if (!(half_length > 0.0)) throw std::invalid_argument("ContourSpec: half_length must be positive");
    }
};

// log Gamma for complex argument (Lanczos g=7, ~1e-13 relative).
inline complex lgamma_complex(complex z)
{
    static constexpr double kLanczos[9] = {
        0.99999999999980993,  676.5203681218851,   -1259.1392167224028,
        771.32342877765313,   -176.61502916214059, 12.507343278686905,
        -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
    if (z.real() < 0.5) {
        // reflection; the exp of any 2*pi*i log-branch offset is 1
        return std::log(M_PI / std::sin(M_PI * z)) - lgamma_complex(1.0 - z);
    }
    z -= 1.0;
    complex x = kLanczos[0];
    for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + static_cast<double>(i));
    const complex t = z + 7.5;
    return 0.918938533204672741780329736406 // log sqrt(2 pi)
           + (z + 0.5) * std::log(t) - t + std::log(x);
}

namespace detail {
inline void check_pole(complex arg)
{
    // Gamma poles sit at the nonpositive integers
    if (arg.real() > 0.5) return;
    const double nearest = std::round(arg.real());
    if (nearest > 0.0) return;
    if (std::abs(arg - complex(nearest, 0.0)) < 1e-8)
        throw pole_error("mellin_kernel: evaluation point within 1e-8 of a gamma pole");
}
} // namespace detail

// Gamma-factor ratio M^{m,n}_{p,q}(eta). Zero-weight parameters contribute
// constant gamma factors.
inline complex mellin_kernel(const FoxHSpec& spec, complex eta)
{
    spec.validate();
    complex lg = 0.0;
    for (int j = 0; j < spec.m; ++j) {
        const complex arg = spec.lower[j].first + eta * spec.lower[j].second;
        detail::check_pole(arg);
        lg += lgamma_complex(arg);
    }
    for (int i = 0; i < spec.n; ++i) {
        const complex arg = 1.0 - spec.upper[i].first - eta * spec.upper[i].second;
        detail::check_pole(arg);
        lg += lgamma_complex(arg);
    }
    for (int j = spec.m; j < spec.q; ++j)
        lg -= lgamma_complex(1.0 - spec.lower[j].first - eta * spec.lower[j].second);
    for (int i = spec.n; i < spec.p; ++i)
        lg -= lgamma_complex(spec.upper[i].first + eta * spec.upper[i].second);
    return std::exp(lg);
}

// H^{m,n}_{p,q}(x) = (1/2 pi i) int M(eta) x^{-eta} d eta along the vertical
// line Re eta = theta, by trapezoidal sum over the truncated contour. The
// gamma factors decay super-exponentially along the line, so the plain
// trapezoid converges geometrically in the node spacing.
inline double fox_h(const FoxHSpec& spec, const ContourSpec& contour, double x)
{
    spec.validate();
    contour.validate();
    if (!(x > 0.0)) throw std::domain_error("fox_h: requires x > 0");
    const double L = contour.half_length;
    const int N = contour.node_count;
    const double dy = 2.0 * L / N;
    const double lx = std::log(x);
    complex sum = 0.0;
    double tail = 0.0;
    for (int k = 0; k <= N; ++k) {
        const double y = -L + k * dy;
        const complex eta(contour.theta, y);
        const complex f = mellin_kernel(spec, eta) * std::exp(-eta * lx);
        const double w = (k == 0 || k == N) ? 0.5 : 1.0;
        sum += w * f;
        if (k == 0 || k == N) tail = std::max(tail, std::abs(f));
    }
    // e^{-c|y|}-type decay: bound the truncated tail by |f(L)| / local rate
    double rate = 0.0;
    {
        const complex fL = mellin_kernel(spec, complex(contour.theta, L)) * std::exp(-complex(contour.theta, L) * lx);
        const complex fL1 = mellin_kernel(spec, complex(contour.theta, L - dy)) * std::exp(-complex(contour.theta, L - dy) * lx);
        if (std::abs(fL) > 0.0 && std::abs(fL1) > std::abs(fL))
            rate = std::log(std::abs(fL1) / std::abs(fL)) / dy;
    }
    const double trunc_est = (rate > 0.0) ? tail / rate : tail * L;
    const complex integral = sum * (dy / (2.0 * M_PI)); // (1/2 pi i) * i dy * sum
    const double re = integral.real(), im = integral.imag();
    if (trunc_est > 1e-8 * std::max(1.0, std::abs(re)))
        throw quad::quad_error("fox_h: contour truncation error above tolerance", trunc_est, re);
    if (std::abs(im) > 1e-8 * std::max(std::abs(re), 1e-30) && std::abs(im) > 1e-14)
        throw quad::quad_error("fox_h: contour sum failed the conjugate-symmetry check", std::abs(im), re);
    return re;
}

// Fox spec of the iterated-Bessel law: q(r,t) = a^{-1} H(r/a), a = (2^3 t)^{1/4}.
inline FoxHSpec iterated_bessel_fox_spec(double gamma)
{
    FoxHSpec s;
    s.m = 2;
    s.n = 0;
    s.p = 2;
    s.q = 2;
    s.upper = {{gamma / 2.0, 0.0}, {gamma / 2.0, 0.0}};
    s.lower = {{gamma / 2.0 - 0.5, 0.5}, {gamma / 2.0 - 0.25, 0.25}};
    return s;
}

// Mellin transform int_0^inf r^{eta-1} f(r) dr of a scalar density by
// quadrature, split at a scale point to help the adaptive rule.
template <class F>
inline double mellin_of_density(F&& f, double eta, double strip_lo, double strip_hi,
                                double scale = 1.0, const quad::QuadratureConfig& cfg = {})
{
    if (!(eta > strip_lo) || !(eta < strip_hi))
        throw std::domain_error("mellin_of_density: eta outside the convergence strip");
    auto g = [&](double r) -> double {
        if (r <= 0.0) return 0.0;
        const double v = f(r);
        return (v == 0.0) ? 0.0 : std::pow(r, eta - 1.0) * v;
    };
    const double split = std::max(scale, 1e-8);
    return quad::integrate(g, 0.0, split, cfg).value + quad::integrate_semi_infinite(g, split, cfg).value;
}

} // namespace besselsub::fox
