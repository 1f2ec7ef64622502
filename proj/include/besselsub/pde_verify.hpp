#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "besselsub/densities.hpp"
#include "besselsub/hyperbolic.hpp"

// Finite-difference residual verification that each closed-form/quadrature
// density satisfies its governing equation, with grid-refinement convergence
// reporting.
//
// All stencils are centered and 2nd-order accurate (the 4th t-derivative for
// the twice-iterated first-passage law uses the 4th-order 7-point stencil so
// the overall residual still refines at order ~2). Drift terms d/dx (c(x) q)
// are discretized in product-rule-expanded form c(x) Dq + c'(x) q with the
// coefficients sampled analytically; the operator factor order in composed
// operators is preserved by applying the factors in sequence.

namespace besselsub::pde {

struct GridSpec {
    double r_min = 0.5, r_max = 2.0;
    double t_min = 0.75, t_max = 1.25;
    double h_r = 0.05, h_t = 0.05;
    int refinement_levels = 3;

    void validate() const
    {
        if (!(r_min > 0.0)) throw std::invalid_argument("GridSpec: r_min > 0 required (operators carry 1/r)");
        if (!(r_max > r_min) || !(t_max > t_min)) throw std::invalid_argument("GridSpec: empty domain");
        if (refinement_levels < 2) throw std::invalid_argument("GridSpec: at least 2 refinement levels");
        if (!(h_r > 0.0) || !(h_t > 0.0)) throw std::invalid_argument("GridSpec: positive steps required");
    }
};

struct LevelNorms {
    double h = 0.0;
    double max_norm = 0.0;
    double l2_norm = 0.0;
};

struct ResidualReport {
    std::string law_id;
    std::string equation_id;
    std::vector<LevelNorms> levels;
    std::vector<double> residual_grid; // finest level, row-major over (t, r)
    double convergence_slope = 0.0;
    double slope_fit_residual = 0.0;

    double final_max() const { return levels.empty() ? NAN : levels.back().max_norm; }
};

namespace detail {

using Row = std::vector<double>;

// centered stencils on uniform rows; callers keep results away from the ends
inline double d1(const Row& v, std::size_t i, double h) { return (v[i + 1] - v[i - 1]) / (2.0 * h); }
inline double d2(const Row& v, std::size_t i, double h) { return (v[i + 1] - 2.0 * v[i] + v[i - 1]) / (h * h); }
inline double d3(const Row& v, std::size_t i, double h)
{
    return (-v[i - 2] + 2.0 * v[i - 1] - 2.0 * v[i + 1] + v[i + 2]) / (2.0 * h * h * h);
}
// 4th-order-accurate 7-point 4th derivative
inline double d4_7pt(const Row& v, std::size_t i, double h)
{
    return (-v[i - 3] / 6.0 + 2.0 * v[i - 2] - 6.5 * v[i - 1] + 28.0 / 3.0 * v[i]
            - 6.5 * v[i + 1] + 2.0 * v[i + 2] - v[i + 3] / 6.0) / (h * h * h * h);
}

inline void fit_slope(const std::vector<LevelNorms>& lv, double& slope, double& fit_res)
{
    const std::size_t n = lv.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& l : lv) {
        const double x = std::log(l.h), y = std::log(std::max(l.max_norm, 1e-300));
        sx += x; sy += y; sxx += x * x; sxy += x * y;
    }
    slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    const double icpt = (sy - slope * sx) / n;
    fit_res = 0.0;
    for (const auto& l : lv)
        fit_res = std::max(fit_res, std::abs(std::log(std::max(l.max_norm, 1e-300)) - (icpt + slope * std::log(l.h))));
}

} // namespace detail

// second-order radial operators on a row sampled at nodes r
// adjoint generator: A v = v'' - (g-1) (v/r)' = v'' - (g-1)(v'/r - v/r^2)
inline void apply_adjoint_bessel(const detail::Row& v, const detail::Row& r, double h, double gamma,
                                 detail::Row& out)
{
    out.assign(v.size(), 0.0);
    for (std::size_t i = 1; i + 1 < v.size(); ++i)
        out[i] = detail::d2(v, i, h)
                 - (gamma - 1.0) * (detail::d1(v, i, h) / r[i] - v[i] / (r[i] * r[i]));
}

// Inner factor of the composed iterated-Bessel operator. The published
// display carries B v = v'' + (g-1) v'/r + (g-1)(3-2g) v/r^2, but its proof
// flips a sign in the second integration by parts (the adjoint of
// -(g-1) d/ds (1/s .) contributes +(g-1)/s d/ds, not minus). Carrying the
// sign through gives B v = v'' - 3(g-1) v'/r + (g-1)(2g-1) v/r^2, and only
// this variant makes the composed residual refine to zero (slope ~2 at
// gamma in {1.5, 2, 3}; both agree at gamma = 1). The suite runs both and
// records the verdict.
enum class InnerVariant { derived, printed };

inline void apply_inner_bessel(const detail::Row& v, const detail::Row& r, double h, double gamma,
                               detail::Row& out, InnerVariant variant = InnerVariant::derived)
{
    const double c1 = (variant == InnerVariant::derived) ? -3.0 * (gamma - 1.0) : (gamma - 1.0);
    const double c0 = (variant == InnerVariant::derived) ? (gamma - 1.0) * (2.0 * gamma - 1.0)
                                                         : (gamma - 1.0) * (3.0 - 2.0 * gamma);
    out.assign(v.size(), 0.0);
    for (std::size_t i = 1; i + 1 < v.size(); ++i)
        out[i] = detail::d2(v, i, h) + c1 * detail::d1(v, i, h) / r[i] + c0 * v[i] / (r[i] * r[i]);
}

// hyperbolic drift operator: v'' - c (coth(e) v)' = v'' - c (coth(e) v' - v/sinh^2 e)
inline void apply_hyperbolic(const detail::Row& v, const detail::Row& eta, double h, double c,
                             detail::Row& out)
{
    out.assign(v.size(), 0.0);
    for (std::size_t i = 1; i + 1 < v.size(); ++i) {
        const double s = std::sinh(eta[i]);
        out[i] = detail::d2(v, i, h)
                 - c * (detail::d1(v, i, h) / std::tanh(eta[i]) - v[i] / (s * s));
    }
}

namespace detail {

struct Tensor {
    std::vector<double> r, t;       // node coordinates
    std::vector<Row> q;             // q[it][ir]
};

inline Tensor evaluate_grid(const std::function<double(double, double)>& f,
                            const GridSpec& g, double h_r, double h_t,
                            int margin_r, int margin_t)
{
    Tensor T;
    const int nr = static_cast<int>(std::lround((g.r_max - g.r_min) / h_r));
    const int nt = static_cast<int>(std::lround((g.t_max - g.t_min) / h_t));
    for (int i = -margin_r; i <= nr + margin_r; ++i) T.r.push_back(g.r_min + i * h_r);
    for (int j = -margin_t; j <= nt + margin_t; ++j) T.t.push_back(g.t_min + j * h_t);
    if (T.r.front() <= 0.0)
        throw std::invalid_argument("pde grid: stencil margin crosses r = 0; enlarge r_min or shrink h_r");
    T.q.resize(T.t.size());
    for (std::size_t j = 0; j < T.t.size(); ++j) {
        T.q[j].resize(T.r.size());
        for (std::size_t i = 0; i < T.r.size(); ++i) T.q[j][i] = f(T.r[i], T.t[j]);
    }
    return T;
}

// Shared refinement driver: `residual(T, h_r, h_t, out_grid)` fills the
// residual on the interior and returns nothing; norms taken over out_grid.
template <class ResidualFn>
inline ResidualReport run_refinement(const std::string& law, const std::string& eq,
                                     const std::function<double(double, double)>& f,
                                     const GridSpec& g, int margin_r, int margin_t,
                                     ResidualFn&& residual)
{
    g.validate();
    ResidualReport rep;
    rep.law_id = law;
    rep.equation_id = eq;
    for (int lvl = 0; lvl < g.refinement_levels; ++lvl) {
        const double hr = g.h_r / (1 << lvl);
        const double ht = g.h_t / (1 << lvl);
        Tensor T = evaluate_grid(f, g, hr, ht, margin_r, margin_t);
        std::vector<double> res;
        residual(T, hr, ht, res);
        LevelNorms n;
        n.h = hr;
        double l2 = 0.0;
        for (double v : res) {
            n.max_norm = std::max(n.max_norm, std::abs(v));
            l2 += v * v;
        }
        n.l2_norm = std::sqrt(l2 / std::max<std::size_t>(res.size(), 1));
        rep.levels.push_back(n);
        if (lvl == g.refinement_levels - 1) rep.residual_grid = std::move(res);
    }
    detail::fit_slope(rep.levels, rep.convergence_slope, rep.slope_fit_residual);
    return rep;
}

} // namespace detail

// dq/dt = (1/8) A(B q) for the iterated-Bessel law (gamma > 1, and the pure
// 4th-order gamma = 1 form away from the origin). swapped_order = true
// assembles B(A q) instead -- the negative control that must fail.
inline ResidualReport verify_iterated_bessel_pde(double gamma, const GridSpec& g,
                                                 bool swapped_order = false,
                                                 InnerVariant variant = InnerVariant::derived,
                                                 const quad::QuadratureConfig& cfg = quad::QuadratureConfig(1e-12, 1e-14))
{
    auto f = [&](double r, double t) { return dens::iterated_bessel_density_quadrature(gamma, r, t, cfg); };
    std::string eq = (variant == InnerVariant::derived) ? "eqUDD2-derived" : "eqUDD2-as-printed";
    if (swapped_order) eq += "-swapped-control";
    return detail::run_refinement(
        "iterated_bessel", eq, f, g, 2, 1,
        [&](const detail::Tensor& T, double hr, double ht, std::vector<double>& out) {
            detail::Row first, second;
            out.clear();
            for (std::size_t j = 1; j + 1 < T.t.size(); ++j) {
                if (swapped_order) {
                    apply_adjoint_bessel(T.q[j], T.r, hr, gamma, first);
                    apply_inner_bessel(first, T.r, hr, gamma, second, variant);
                } else {
                    apply_inner_bessel(T.q[j], T.r, hr, gamma, first, variant);
                    apply_adjoint_bessel(first, T.r, hr, gamma, second);
                }
                for (std::size_t i = 2; i + 2 < T.r.size(); ++i) {
                    const double dqdt = (T.q[j + 1][i] - T.q[j - 1][i]) / (2.0 * ht);
                    out.push_back(dqdt - second[i] / 8.0);
                }
            }
        });
}

// third-order J_R equation; include_zeroth_term selects the display carrying
// the -(g-1)^2 q / r^2 term (both variants are run by the suite and the
// converging one reported)
inline ResidualReport verify_jr_pde(double gamma, const GridSpec& g, bool include_zeroth_term = true,
                                    const quad::QuadratureConfig& cfg = quad::QuadratureConfig(1e-12, 1e-14))
{
    (void)cfg; // jr is closed-form; kept for signature symmetry
    auto f = [&](double r, double t) { return dens::jr_density(gamma, r, t); };
    const double gm = (gamma - 1.0) * (gamma - 1.0);
    return detail::run_refinement(
        "jr", include_zeroth_term ? "eqBB2-with-zeroth-term" : "eqBB2-as-printed", f, g, 2, 1,
        [&](const detail::Tensor& T, double hr, double ht, std::vector<double>& out) {
            out.clear();
            for (std::size_t j = 1; j + 1 < T.t.size(); ++j) {
                const detail::Row& v = T.q[j];
                for (std::size_t i = 2; i + 2 < T.r.size(); ++i) {
                    const double dqdt = (T.q[j + 1][i] - T.q[j - 1][i]) / (2.0 * ht);
                    double op = T.r[i] * detail::d3(v, i, hr)
                                + 2.0 * (2.0 - gamma) * detail::d2(v, i, hr)
                                + gm * detail::d1(v, i, hr) / T.r[i];
                    if (include_zeroth_term) op -= gm * v[i] / (T.r[i] * T.r[i]);
                    out.push_back(dqdt + 0.5 * op);
                }
            }
        });
}

enum class LaplaceLaw { bessel_at_fpt, hypJ2, hypJ3 };

// -d^2q/dt^2 = (adjoint space operator) q for the first-passage compositions;
// hypJ3 is verified on the half-clock composite, which satisfies the stated
// c = 2 equation with no extra time rescaling.
inline ResidualReport verify_laplace_type_pde(LaplaceLaw law, double gamma, const GridSpec& g,
                                              const quad::QuadratureConfig& cfg = quad::QuadratureConfig(1e-12, 1e-14))
{
    std::function<double(double, double)> f;
    std::string id, eq;
    double drift = 0.0;
    switch (law) {
        case LaplaceLaw::bessel_at_fpt:
            f = [=](double r, double t) { return dens::bessel_at_fpt_density(gamma, r, t); };
            id = "bessel_at_fpt";
            eq = "eqTt";
            break;
        case LaplaceLaw::hypJ2:
            f = [=](double e, double t) { return hyp::pj2_density(e, t, cfg); };
            id = "hypJ2";
            eq = "hypJ2-laplace";
            drift = 1.0;
            break;
        case LaplaceLaw::hypJ3:
            f = [=](double e, double t) { return hyp::pj3_density(e, t, hyp::Convention::half); };
            id = "hypJ3";
            eq = "hypJ3-laplace";
            drift = 2.0;
            break;
    }
    return detail::run_refinement(
        id, eq, f, g, 1, 1,
        [&, drift](const detail::Tensor& T, double hr, double ht, std::vector<double>& out) {
            detail::Row op;
            out.clear();
            for (std::size_t j = 1; j + 1 < T.t.size(); ++j) {
                if (law == LaplaceLaw::bessel_at_fpt)
                    apply_adjoint_bessel(T.q[j], T.r, hr, gamma, op);
                else
                    apply_hyperbolic(T.q[j], T.r, hr, drift, op);
                for (std::size_t i = 1; i + 1 < T.r.size(); ++i) {
                    const double d2t = (T.q[j + 1][i] - 2.0 * T.q[j][i] + T.q[j - 1][i]) / (ht * ht);
                    out.push_back(d2t + op[i]);
                }
            }
        });
}

// drifted first-passage density: d2q/dbeta2 - 2 mu dq/dbeta = 2 dq/dt
// (grid r-axis plays the level variable beta)
inline ResidualReport verify_drifted_fpt_pde(double mu, const GridSpec& g)
{
    auto f = [=](double beta, double t) { return dens::drifted_fpt_density(beta, mu, t); };
    return detail::run_refinement(
        "drifted_fpt", "pde-FPTmu", f, g, 1, 1,
        [&](const detail::Tensor& T, double hr, double ht, std::vector<double>& out) {
            out.clear();
            for (std::size_t j = 1; j + 1 < T.t.size(); ++j) {
                for (std::size_t i = 1; i + 1 < T.r.size(); ++i) {
                    const double d2b = (T.q[j][i + 1] - 2.0 * T.q[j][i] + T.q[j][i - 1]) / (hr * hr);
                    const double d1b = (T.q[j][i + 1] - T.q[j][i - 1]) / (2.0 * hr);
                    const double d1t = (T.q[j + 1][i] - T.q[j - 1][i]) / (2.0 * ht);
                    out.push_back(d2b - 2.0 * mu * d1b - 2.0 * d1t);
                }
            }
        });
}

// drifted composition: (2 mu d/dt - d^2/dt^2) q = A q
inline ResidualReport verify_drifted_composite_pde(double gamma, double mu, const GridSpec& g)
{
    auto f = [=](double r, double t) { return dens::drifted_composite_density(gamma, mu, r, t); };
    return detail::run_refinement(
        "drifted_composite", "pdeWWE", f, g, 1, 1,
        [&](const detail::Tensor& T, double hr, double ht, std::vector<double>& out) {
            detail::Row op;
            out.clear();
            for (std::size_t j = 1; j + 1 < T.t.size(); ++j) {
                apply_adjoint_bessel(T.q[j], T.r, hr, gamma, op);
                for (std::size_t i = 1; i + 1 < T.r.size(); ++i) {
                    const double d2t = (T.q[j + 1][i] - 2.0 * T.q[j][i] + T.q[j - 1][i]) / (ht * ht);
                    const double d1t = (T.q[j + 1][i] - T.q[j - 1][i]) / (2.0 * ht);
                    out.push_back(2.0 * mu * d1t - d2t - op[i]);
                }
            }
        });
}

// iterated first-passage: d^{2^n} f / dt^{2^n} = 2^{2^n - 1} df/dx, n <= 2
inline ResidualReport verify_iterated_fpt_pde(int n, const GridSpec& g,
                                              const quad::QuadratureConfig& cfg = quad::QuadratureConfig(1e-12, 1e-14))
{
    if (n != 1 && n != 2)
        throw std::invalid_argument("verify_iterated_fpt_pde: densities available for n in {1,2}");
    auto f = [=](double x, double t) { return dens::iterated_fpt_density(n, x, t, cfg); };
    const int mt = (n == 1) ? 1 : 3;
    return detail::run_refinement(
        "iterated_fpt", n == 1 ? "eqf" : "pertaineq-n2", f, g, 1, mt,
        [&](const detail::Tensor& T, double hr, double ht, std::vector<double>& out) {
            out.clear();
            for (std::size_t j = mt; j + mt < T.t.size(); ++j) {
                for (std::size_t i = 1; i + 1 < T.r.size(); ++i) {
                    const double d1x = (T.q[j][i + 1] - T.q[j][i - 1]) / (2.0 * hr);
                    double dt;
                    if (n == 1) {
                        dt = (T.q[j + 1][i] - 2.0 * T.q[j][i] + T.q[j - 1][i]) / (ht * ht);
                        out.push_back(dt - 2.0 * d1x);
                    } else {
                        const double h4 = ht * ht * ht * ht;
                        dt = (-T.q[j - 3][i] / 6.0 + 2.0 * T.q[j - 2][i] - 6.5 * T.q[j - 1][i]
                              + 28.0 / 3.0 * T.q[j][i] - 6.5 * T.q[j + 1][i] + 2.0 * T.q[j + 2][i]
                              - T.q[j + 3][i] / 6.0) / h4;
                        out.push_back(dt - 8.0 * d1x);
                    }
                }
            }
        });
}

// Laplace-domain ODE d^{2^n} L / dt^{2^n} = 2^{2^n - 1} lambda L on
// L = exp(-t lambda^{2^-n} 2^{1 - 2^-n}): every d/dt multiplies by -c, so the
// check is |c^{2^n} - 2^{2^n-1} lambda| built by nested multiplication.
inline double iterated_fpt_laplace_ode_residual(int n, double lambda)
{
    const double e = std::pow(2.0, -n);
    const double c = std::pow(lambda, e) * std::pow(2.0, 1.0 - e);
    double prod = 1.0;
    const long reps = 1L << n;
    for (long i = 0; i < reps; ++i) prod *= c;
    const double target = std::pow(2.0, static_cast<double>(reps - 1)) * lambda;
    return std::abs(prod - target) / target;
}

// forward equation of the dim-2 distance law: dp/dt = (1/2)[p'' - (coth e p)'],
// and the dim-3 whole-clock analogue dp/dt = p'' - 2 (coth e p)'
inline ResidualReport verify_p2_forward_pde(int dim, const GridSpec& g,
                                            const quad::QuadratureConfig& cfg = quad::QuadratureConfig(1e-12, 1e-14))
{
    const bool two = (dim == 2);
    std::function<double(double, double)> f;
    if (two)
        f = [=](double e, double t) { return hyp::p2_density(e, t, hyp::Convention::half, cfg); };
    else
        f = [=](double e, double t) { return hyp::p3_density(e, t, hyp::Convention::whole); };
    return detail::run_refinement(
        two ? "hyp2" : "hyp3", two ? "distPp2" : "p3-forward", f, g, 1, 1,
        [&](const detail::Tensor& T, double hr, double ht, std::vector<double>& out) {
            detail::Row op;
            out.clear();
            const double c = two ? 1.0 : 2.0;
            const double scale = two ? 0.5 : 1.0;
            for (std::size_t j = 1; j + 1 < T.t.size(); ++j) {
                apply_hyperbolic(T.q[j], T.r, hr, c, op);
                for (std::size_t i = 1; i + 1 < T.r.size(); ++i) {
                    const double d1t = (T.q[j + 1][i] - T.q[j - 1][i]) / (2.0 * ht);
                    out.push_back(d1t - scale * op[i]);
                }
            }
        });
}

} // namespace besselsub::pde
