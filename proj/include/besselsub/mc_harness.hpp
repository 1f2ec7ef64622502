#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "besselsub/distributions.hpp"
#include "besselsub/samplers.hpp"

// Statistical comparison engine: Kolmogorov-Smirnov tests against numeric or
// analytic CDFs, two-sample identity checks, and moment estimation with
// error bars. All acceptance thresholds are evaluated under fixed seeds so
// the suite is deterministic.

namespace besselsub::mc {

struct KsResult {
    double statistic = 0.0;
    double p_value = 1.0;
    std::size_t n = 0;
    std::string reference;
};

struct MomentEstimate {
    double order = 0.0;
    double estimate = 0.0;
    double std_error = 0.0;
    std::size_t n = 0;
};

// Kolmogorov distribution Q(lambda) = 2 sum (-1)^{k-1} e^{-2 k^2 lambda^2},
// truncated when terms drop below 1e-12.
inline double kolmogorov_q(double lambda)
{
    if (lambda < 0.05) return 1.0;
    double sum = 0.0;
    double sign = 1.0;
    for (int k = 1; k <= 200; ++k) {
        const double term = std::exp(-2.0 * k * k * lambda * lambda);
        sum += sign * term;
        if (term < 1e-12) break;
        sign = -sign;
    }
    return std::min(1.0, std::max(0.0, 2.0 * sum));
}

namespace detail {
inline double ks_p_value(double d, double n_eff)
{
    const double rn = std::sqrt(n_eff);
    return kolmogorov_q((rn + 0.12 + 0.11 / rn) * d); // standard finite-n scaling
}

inline std::vector<double> sorted_checked(const std::vector<double>& v)
{
    std::vector<double> s = v;
    for (double x : s)
        if (std::isnan(x)) throw std::invalid_argument("ks test: NaN in sample values");
    std::sort(s.begin(), s.end());
    return s;
}
} // namespace detail

inline KsResult ks_one_sample(const std::vector<double>& values,
                              const std::function<double(double)>& cdf,
                              const std::string& reference = "")
{
    if (values.size() < 100) throw std::invalid_argument("ks_one_sample: n >= 100 required");
    const auto s = detail::sorted_checked(values);
    const double n = static_cast<double>(s.size());
    double d = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const double f = cdf(s[i]);
        if (std::isnan(f)) throw std::invalid_argument("ks_one_sample: CDF returned NaN");
        d = std::max(d, std::max((i + 1) / n - f, f - i / n));
    }
    return {d, detail::ks_p_value(d, n), s.size(), reference};
}

inline KsResult ks_one_sample(const sim::SampleBatch& batch, const dens::DensityFn& law)
{
    return ks_one_sample(batch.values, law.cdf, law.law);
}

inline KsResult ks_two_sample(const std::vector<double>& a, const std::vector<double>& b)
{
    if (a.size() < 100 || b.size() < 100) throw std::invalid_argument("ks_two_sample: n >= 100 required");
    const auto sa = detail::sorted_checked(a);
    const auto sb = detail::sorted_checked(b);
    const double na = static_cast<double>(sa.size()), nb = static_cast<double>(sb.size());
    double d = 0.0;
    std::size_t i = 0, j = 0;
    while (i < sa.size() && j < sb.size()) {
        const double x = std::min(sa[i], sb[j]);
        while (i < sa.size() && sa[i] <= x) ++i;
        while (j < sb.size() && sb[j] <= x) ++j;
        d = std::max(d, std::abs(i / na - j / nb));
    }
    const double n_eff = na * nb / (na + nb);
    return {d, detail::ks_p_value(d, n_eff), sa.size() + sb.size(), "two-sample"};
}

inline KsResult ks_two_sample(const sim::SampleBatch& a, const sim::SampleBatch& b)
{
    return ks_two_sample(a.values, b.values);
}

// supremum of finite moment orders for each process law (tail index)
inline double max_moment_order(const sim::ProcessSpec& spec)
{
    using sim::ProcessKind;
    switch (spec.kind) {
        case ProcessKind::IteratedFPT:
            return std::pow(2.0, -spec.depth); // stable-2^{-n} subordinator
        case ProcessKind::FPT:
        case ProcessKind::InverseCompositionTR:
            return 0.5; // s^{-3/2} tails
        case ProcessKind::StableSubordinator:
        case ProcessKind::StableRatio:
        case ProcessKind::CauchyAtStable:
            return spec.nu;
        case ProcessKind::Cauchy:
            return 1.0;
        case ProcessKind::BesselAtFPT:
            return 1.0; // r^{-2} tail for every gamma
        case ProcessKind::DriftedFPT:
        case ProcessKind::BesselAtDriftedFPT:
            return spec.mu > 0.0 ? INFINITY : (spec.kind == ProcessKind::DriftedFPT ? 0.5 : 1.0);
        case ProcessKind::HypH2AtFPT:
        case ProcessKind::HypH3AtFPT:
            return 0.5; // eta^{-3/2} tails inherited from the clock
        default:
            return INFINITY; // Gaussian-type tails
    }
}

// sample mean of x^order with plain standard error; refused when the law's
// own moment of that order diverges
inline MomentEstimate moment_estimate(const sim::SampleBatch& batch, double order)
{
    const double bound = max_moment_order(batch.spec);
    if (order >= bound)
        throw std::domain_error("moment_estimate: the law has no finite moment of this order (tail bound "
                                + std::to_string(bound) + ")");
    const double n = static_cast<double>(batch.count());
    if (n < 2) throw std::invalid_argument("moment_estimate: need at least two samples");
    double mean = 0.0;
    for (double x : batch.values) mean += std::pow(std::abs(x), order);
    mean /= n;
    double var = 0.0;
    for (double x : batch.values) {
        const double d = std::pow(std::abs(x), order) - mean;
        var += d * d;
    }
    var /= (n - 1.0);
    return {order, mean, std::sqrt(var / n), batch.count()};
}

// mean of f(x) over the batch with its standard error (for Laplace-transform
// and bounded-functional identities)
inline MomentEstimate functional_estimate(const std::vector<double>& values,
                                          const std::function<double(double)>& f)
{
    const double n = static_cast<double>(values.size());
    double mean = 0.0;
    for (double x : values) mean += f(x);
    mean /= n;
    double var = 0.0;
    for (double x : values) {
        const double d = f(x) - mean;
        var += d * d;
    }
    var /= (n - 1.0);
    return {0.0, mean, std::sqrt(var / n), values.size()};
}

} // namespace besselsub::mc
