#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

// Adaptive Gauss-Kronrod quadrature on finite panels, with a rational map
// for semi-infinite domains and an alternating-series accelerated rule for
// oscillatory cosine transforms.

namespace besselsub::quad {

struct QuadratureConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    int max_subdivisions = 2000;
    // integrand magnitude (relative to the running peak) below which
    // semi-infinite tails are treated as exhausted
    double truncation_threshold = 1e-300;

    QuadratureConfig() = default;
    QuadratureConfig(double rel, double abs, int maxsub = 2000)
        : rel_tol(rel), abs_tol(abs), max_subdivisions(maxsub)
    {
        if (!(rel_tol > 0.0) || !(abs_tol > 0.0) || max_subdivisions < 16)
            throw std::invalid_argument("QuadratureConfig: rel_tol > 0, abs_tol > 0, max_subdivisions >= 16 required");
    }
};

class quad_error : public std::runtime_error {
public:
    quad_error(const std::string& what, double estimate_, double value_)
        : std::runtime_error(what), estimate(estimate_), value(value_) {}
    double estimate; // achieved absolute error estimate
    double value;    // best value so far
};

struct QuadResult {
    double value = 0.0;
    double error = 0.0;
    std::size_t evaluations = 0;
};

namespace detail {

// 15-point Kronrod nodes with embedded 7-point Gauss rule (QUADPACK dqk15).
inline constexpr double kGK15Nodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

inline constexpr double kGK15WeightsK[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

inline constexpr double kGK15WeightsG[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

template <class F>
inline void gk15_panel(F&& f, double a, double b, double& value, double& err)
{
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fc = f(c);
    double resk = fc * kGK15WeightsK[7];
    double resg = fc * kGK15WeightsG[3];
    for (int j = 0; j < 7; ++j) {
        const double x = h * kGK15Nodes[j];
        const double f1 = f(c - x);
        const double f2 = f(c + x);
        resk += kGK15WeightsK[j] * (f1 + f2);
        if (j % 2 == 1) resg += kGK15WeightsG[j / 2] * (f1 + f2);
    }
    value = resk * h;
    err = std::abs((resk - resg) * h);
    if (!std::isfinite(err)) err = std::abs(value);
}

struct Segment {
    double a, b, value, error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

} // namespace detail

// Globally adaptive integration of f over the finite interval [a, b].
template <class F>
inline QuadResult integrate(F&& f, double a, double b, const QuadratureConfig& cfg = {})
{
    QuadResult out;
    if (a == b) return out;
    std::vector<detail::Segment> heap;
    double v, e;
    detail::gk15_panel(f, a, b, v, e);
    out.evaluations = 15;
    heap.push_back({a, b, v, e});
    double total = v, toterr = e;
    int splits = 0;
    while (toterr > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total)) && splits < cfg.max_subdivisions) {
        std::pop_heap(heap.begin(), heap.end());
        detail::Segment worst = heap.back();
        heap.pop_back();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) { // interval exhausted at machine resolution
            heap.push_back(worst);
            std::push_heap(heap.begin(), heap.end());
            break;
        }
        double v1, e1, v2, e2;
        detail::gk15_panel(f, worst.a, mid, v1, e1);
        detail::gk15_panel(f, mid, worst.b, v2, e2);
        out.evaluations += 30;
        total += v1 + v2 - worst.value;
        toterr += e1 + e2 - worst.error;
        heap.push_back({worst.a, mid, v1, e1});
        std::push_heap(heap.begin(), heap.end());
        heap.push_back({mid, worst.b, v2, e2});
        std::push_heap(heap.begin(), heap.end());
        ++splits;
    }
    // recompute accumulated sums to shed cancellation noise
    total = 0.0;
    toterr = 0.0;
    for (const auto& s : heap) { total += s.value; toterr += s.error; }
    out.value = total;
    out.error = toterr;
    if (toterr > std::max(cfg.abs_tol, 10.0 * cfg.rel_tol * std::abs(total)) && splits >= cfg.max_subdivisions)
        throw quad_error("integrate: adaptive quadrature did not converge", toterr, total);
    return out;
}

// Integration over [a, inf) via x = a + u/(1-u). The integrand must decay;
// evaluations that underflow to zero short-circuit the Jacobian blow-up.
template <class F>
inline QuadResult integrate_semi_infinite(F&& f, double a, const QuadratureConfig& cfg = {})
{
    auto g = [&](double u) -> double {
        const double om = 1.0 - u;
        if (om <= 0.0) return 0.0;
        const double x = a + u / om;
        if (!std::isfinite(x)) return 0.0;
        const double fx = f(x);
        if (fx == 0.0) return 0.0;
        return fx / (om * om);
    };
    return integrate(g, 0.0, 1.0, cfg);
}

// Tail integral int_M^inf f for densities decaying like x^{-3/2}: the map
// x = 1/v^2 turns the algebraic tail into a bounded integrand on (0, M^{-1/2}].
template <class F>
inline QuadResult integrate_algebraic_tail(F&& f, double M, const QuadratureConfig& cfg = {})
{
    auto g = [&](double v) -> double {
        if (v <= 0.0) return 0.0;
        const double x = 1.0 / (v * v);
        return f(x) * 2.0 / (v * v * v);
    };
    return integrate(g, 0.0, 1.0 / std::sqrt(M), cfg);
}

namespace detail {
// adaptive integration of [0, hi] in geometric segments anchored at `scale`,
// so a bulk much narrower than the interval is never missed by the first rule
template <class G>
inline double integrate_segmented(G&& g, double hi, double scale, const QuadratureConfig& cfg)
{
    double total = 0.0, lo = 0.0;
    double edge = std::min(scale, hi);
    for (int k = 0; k < 600 && lo < hi; ++k) {
        total += integrate(g, lo, edge, cfg).value;
        lo = edge;
        edge = std::min(4.0 * edge, hi);
    }
    return total;
}
} // namespace detail

// Cosine transform (1/pi) * int_0^inf cos(x*b) w(b) db for a smooth, decaying,
// nonnegative weight w with characteristic scale `decay_scale`. Integrates
// between consecutive zeros of the cosine and accelerates the alternating
// partial sums with an Euler averaging table; the head up to the first zero
// is integrated in geometric segments so the bulk cannot hide between nodes.
template <class F>
inline double cosine_transform(F&& w, double x, double decay_scale, const QuadratureConfig& cfg = {})
{
    x = std::abs(x);
    // support extent: double from the scale until the weight underflows
    double extent = std::max(decay_scale, 1e-300);
    for (int k = 0; k < 1000 && w(extent) > 0.0 && extent < 1e290; ++k) extent *= 2.0;
    auto g = [&](double b) { return std::cos(x * b) * w(b); };
    if (x == 0.0 || x * extent < 0.5 * M_PI) {
        // no sign change inside the support: direct segmented integral
        return detail::integrate_segmented(g, extent, decay_scale, cfg) / M_PI;
    }
    const double half_period = M_PI / x;
    const double first_zero = 0.5 * M_PI / x;
    double total = detail::integrate_segmented(g, first_zero, std::min(decay_scale, first_zero), cfg);
    // alternating panel sums, Euler-accelerated
    constexpr int kMaxPanels = 400;
    std::vector<double> row;
    row.reserve(64);
    double best = 0.0;
    double prev_best = std::numeric_limits<double>::infinity();
    int stall = 0;
    for (int k = 0; k < kMaxPanels; ++k) {
        const double lo = first_zero + k * half_period;
        const double hi = lo + half_period;
        const double panel = integrate(g, lo, hi, cfg).value;
        row.push_back(panel);
        // Euler averaging table over the partial sums of the panel series
        std::vector<double> t(row.size());
        double acc = 0.0;
        for (std::size_t j = 0; j < row.size(); ++j) { acc += row[j]; t[j] = acc; }
        for (std::size_t lvl = 1; lvl < t.size(); ++lvl)
            for (std::size_t j = 0; j + lvl < t.size(); ++j)
                t[j] = 0.5 * (t[j] + t[j + 1]);
        best = t[0];
        if (std::abs(best - prev_best) < std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total + best))) {
            if (++stall >= 2) break;
        } else {
            stall = 0;
        }
        prev_best = best;
        if (k == kMaxPanels - 1)
            throw quad_error("cosine_transform: alternating series did not settle",
                             std::abs(best - prev_best), (total + best) / M_PI);
    }
    return (total + best) / M_PI;
}

} // namespace besselsub::quad
