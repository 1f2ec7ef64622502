#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "besselsub/quadrature.hpp"

// DensityFn: a validated scalar density/CDF with declared support and Mellin
// convergence strip. TabulatedDistribution backs laws without analytic CDFs:
// mass-equidistributed CDF table with monotone cubic (Fritsch-Carlson)
// interpolation, extended until the tail mass is below 1e-9, usable both as
// a CDF evaluator and as an inverse-CDF sampler.

namespace besselsub::dens {

struct Interval {
    double lo = 0.0;
    double hi = std::numeric_limits<double>::infinity();
};

namespace detail {

// Fritsch-Carlson slopes for a monotone cubic Hermite interpolant.
inline std::vector<double> pchip_slopes(const std::vector<double>& x, const std::vector<double>& y)
{
    const std::size_t n = x.size();
    std::vector<double> d(n, 0.0), delta(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) delta[i] = (y[i + 1] - y[i]) / (x[i + 1] - x[i]);
    d[0] = delta[0];
    d[n - 1] = delta[n - 2];
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (delta[i - 1] * delta[i] <= 0.0) {
            d[i] = 0.0;
        } else {
            const double w1 = 2.0 * (x[i + 1] - x[i]) + (x[i] - x[i - 1]);
            const double w2 = (x[i + 1] - x[i]) + 2.0 * (x[i] - x[i - 1]);
            d[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
        }
    }
    // clamp endpoint slopes to preserve monotonicity
    auto clamp_end = [](double& di, double del) {
        if (del == 0.0) di = 0.0;
        else if (di * del < 0.0) di = 0.0;
        else if (std::abs(di) > 3.0 * std::abs(del)) di = 3.0 * del;
    };
    clamp_end(d[0], delta[0]);
    clamp_end(d[n - 1], delta[n - 2]);
    return d;
}

inline double hermite_eval(double x0, double x1, double y0, double y1, double d0, double d1, double x)
{
    const double h = x1 - x0;
    const double s = (x - x0) / h;
    const double s2 = s * s, s3 = s2 * s;
    return y0 * (2 * s3 - 3 * s2 + 1) + h * d0 * (s3 - 2 * s2 + s)
           + y1 * (-2 * s3 + 3 * s2) + h * d1 * (s3 - s2);
}

} // namespace detail

class TabulatedDistribution {
public:
    // Builds the CDF table of pdf over (support.lo, hi_bound]. If the support
    // is unbounded the grid is extended geometrically until the accumulated
    // tail panel mass drops below tail_tol.
    template <class F>
    TabulatedDistribution(F&& pdf, Interval support, double initial_scale,
                          double tail_tol = 1e-9, int nodes = 800,
                          const quad::QuadratureConfig& cfg = quad::QuadratureConfig(1e-10, 1e-13))
    {
        build(std::function<double(double)>(pdf), support, initial_scale, tail_tol, nodes, cfg);
    }

    double cdf(double x) const
    {
        if (x <= x_.front()) return 0.0;
        if (x >= x_.back()) return 1.0;
        const std::size_t i = bracket(x_, x);
        const double c = detail::hermite_eval(x_[i], x_[i + 1], c_[i], c_[i + 1], d_[i], d_[i + 1], x);
        return std::min(1.0, std::max(0.0, c));
    }

    // inverse CDF by bracketed bisection on the monotone interpolant
    double quantile(double u) const
    {
        if (!(u >= 0.0) || !(u <= 1.0)) throw std::domain_error("TabulatedDistribution::quantile: u outside [0,1]");
        if (u <= c_.front()) return x_.front();
        if (u >= c_.back()) return x_.back();
        std::size_t i = bracket(c_, u);
        double lo = x_[i], hi = x_[i + 1];
        for (int it = 0; it < 80; ++it) {
            const double mid = 0.5 * (lo + hi);
            const double cm = detail::hermite_eval(x_[i], x_[i + 1], c_[i], c_[i + 1], d_[i], d_[i + 1], mid);
            (cm < u ? lo : hi) = mid;
            if (hi - lo < 1e-14 * (1.0 + std::abs(lo))) break;
        }
        return 0.5 * (lo + hi);
    }

    double total_mass() const { return mass_; }
    double grid_max() const { return x_.back(); }

private:
    static std::size_t bracket(const std::vector<double>& v, double x)
    {
        auto it = std::upper_bound(v.begin(), v.end(), x);
        std::size_t i = static_cast<std::size_t>(it - v.begin());
        if (i == 0) return 0;
        if (i >= v.size()) return v.size() - 2;
        return i - 1;
    }

    void build(const std::function<double(double)>& pdf, Interval support, double scale,
               double tail_tol, int nodes, const quad::QuadratureConfig& cfg)
    {
        const double lo = support.lo;
        const bool bounded = std::isfinite(support.hi);
        // pass 1: coarse geometric knots, accumulate panel masses
        std::vector<double> kx, kc;
        kx.push_back(lo);
        kc.push_back(0.0);
        double mass = 0.0;
        double x0 = lo;
        double step = std::max(scale, 1e-12) / 64.0;
        const double hi_cap = bounded ? support.hi : std::numeric_limits<double>::infinity();
        auto f = [&](double x) {
            const double v = pdf(x);
            return std::isfinite(v) ? v : 0.0; // integrable endpoint spikes enter via panel quadrature
        };
        double peak_panel = 0.0;
        for (int k = 0; k < 20000; ++k) {
            const double x1 = std::min(x0 + step, hi_cap);
            if (!std::isfinite(x1) || x1 <= x0) break;
            const double panel = quad::integrate(f, x0, x1, cfg).value;
            mass += panel;
            peak_panel = std::max(peak_panel, panel);
            kx.push_back(x1);
            kc.push_back(mass);
            x0 = x1;
            if (bounded && x1 >= support.hi) break;
            // stop once panels are far past the bulk and negligible
            if (panel < tail_tol * std::max(mass, 1e-300) && panel < 1e-3 * peak_panel) break;
            step *= 1.25;
        }
        if (!(mass > 0.0)) throw quad::quad_error("TabulatedDistribution: zero mass on grid", 0.0, 0.0);
        mass_ = mass;
        // pass 2: re-grid at mass quantiles for uniform CDF resolution, keeping
        // the pass-1 geometric knots so no panel spans more than a step ratio
        std::vector<double> qx;
        qx.reserve(nodes + kx.size());
        qx.push_back(kx.front());
        std::size_t seg = 0;
        for (int j = 1; j < nodes; ++j) {
            const double target = mass * j / nodes;
            while (seg + 1 < kc.size() && kc[seg + 1] < target) ++seg;
            const double c0 = kc[seg], c1 = kc[seg + 1];
            const double w = (c1 > c0) ? (target - c0) / (c1 - c0) : 0.5;
            qx.push_back(kx[seg] + w * (kx[seg + 1] - kx[seg]));
        }
        qx.push_back(kx.back());
        qx.insert(qx.end(), kx.begin(), kx.end());
        std::sort(qx.begin(), qx.end());
        qx.erase(std::unique(qx.begin(), qx.end()), qx.end());
        // exact panel integrals between the quantile knots
        x_ = qx;
        c_.assign(x_.size(), 0.0);
        double acc = 0.0;
        for (std::size_t i = 0; i + 1 < x_.size(); ++i) {
            acc += quad::integrate(f, x_[i], x_[i + 1], cfg).value;
            c_[i + 1] = acc;
        }
        // normalize the table to its own mass so cdf spans [0,1]
        mass_ = acc;
        for (auto& c : c_) c /= acc;
        for (std::size_t i = 1; i < c_.size(); ++i) c_[i] = std::max(c_[i], c_[i - 1]); // clamp quadrature noise
        d_ = detail::pchip_slopes(x_, c_);
    }

    std::vector<double> x_, c_, d_;
    double mass_ = 0.0;
};

struct DensityFn {
    std::string law;
    Interval support;
    std::function<double(double)> pdf;
    std::function<double(double)> cdf;
    // Mellin convergence strip (eta bounds); defaults to (0, 1+) only
    double strip_lo = 0.0;
    double strip_hi = 1.0 + 1e-9;
    // supremum of finite moment orders (inf when all moments exist)
    double max_moment_order = std::numeric_limits<double>::infinity();
    // mass tolerance used at construction-time validation
    double mass_tol = 1e-6;
    double checked_mass = std::numeric_limits<double>::quiet_NaN();

    double operator()(double x) const { return pdf(x); }
};

// Construction-time normalization check shared by the density factories.
inline void check_mass(DensityFn& f, double mass)
{
    f.checked_mass = mass;
    if (std::abs(mass - 1.0) > f.mass_tol)
        throw quad::quad_error("DensityFn(" + f.law + "): mass deviates from 1 beyond tolerance",
                               std::abs(mass - 1.0), mass);
}

} // namespace besselsub::dens
