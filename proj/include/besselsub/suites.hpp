#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "besselsub/laws.hpp"
#include "besselsub/mc_harness.hpp"
#include "besselsub/pde_verify.hpp"
#include "besselsub/report.hpp"

// Verification suites behind `verify --suite ...` and the acceptance runner.
// Every record carries the anchor of the identity it exercises; MC checks run
// under seeds derived deterministically from the suite seed.

namespace besselsub::vfy {

inline constexpr std::uint64_t kDefaultSeed = 20240607u;

namespace detail {

inline double law_mass(const std::string& law, const laws::LawParams& p)
{
    const auto f = laws::make_density(law, p);
    auto pdf = [&](double x) {
        const double v = f.pdf(x);
        return std::isfinite(v) ? v : 0.0;
    };
    const quad::QuadratureConfig cfg(1e-9, 1e-12);
    if (law == "hypJ2" || law == "hypJ3") return hyp::j_law_mass(pdf, 50.0, cfg);
    if (law == "cauchy" || law == "cauchy_at_stable") {
        auto half = [&](double x) { return pdf(std::abs(x)); };
        return 2.0 * (quad::integrate(half, 0.0, 20.0, cfg).value
                      + quad::integrate_algebraic_tail(half, 20.0, cfg).value);
    }
    if (law == "fpt" || law == "iterated_fpt" || law == "t_r_gamma") {
        const double split = p.t * p.t + 1.0;
        return quad::integrate(pdf, 0.0, split, cfg).value
               + quad::integrate_algebraic_tail(pdf, split, cfg).value;
    }
    if (std::isfinite(f.support.hi))
        return quad::integrate(pdf, f.support.lo, f.support.hi, cfg).value;
    const double split = 1.0 + p.t;
    return quad::integrate(pdf, 0.0, split, cfg).value + quad::integrate_semi_infinite(pdf, split, cfg).value;
}

inline std::uint64_t check_seed(std::uint64_t suite_seed, int k) { return suite_seed * 1000003u + k; }

} // namespace detail

// ---- criterion 1: normalization ------------------------------------------

inline VerificationReport run_normalization(std::uint64_t seed = kDefaultSeed)
{
    VerificationReport rep;
    rep.suite = "normalization";
    rep.seed = seed;
    struct Case { const char* law; laws::LawParams p; double tol; const char* anchor; };
    laws::LawParams d; // defaults gamma=2, t=1
    std::vector<Case> cases;
    {
        laws::LawParams p = d;
        cases.push_back({"bessel", p, 1e-6, "dist:k"});
        p.x0 = 1.0;
        cases.push_back({"bessel_transition", p, 1e-6, "dist:besG"});
        cases.push_back({"iterated_bessel", d, 1e-5, "dist:exrendsthe"});
        p = d; p.gamma = 1.0;
        cases.push_back({"jr", p, 1e-6, "dist:g"});
        cases.push_back({"fpt", d, 1e-6, "slow-down integral"});
        p = d; p.mu = 1.0;
        cases.push_back({"drifted_fpt", p, 1e-6, "lem:MAX(i)"});
        p = d; p.n = 2;
        cases.push_back({"iterated_fpt", p, 1e-5, "qawE"});
        cases.push_back({"bessel_at_fpt", d, 1e-6, "dist:coincides"});
        p = d; p.mu = 1.0;
        cases.push_back({"drifted_composite", p, 1e-6, "dist:RTmu"});
        p = d; p.gamma = 2.5; p.t = 0.7;
        cases.push_back({"t_r_gamma", p, 1e-6, "dist:DDD"});
        p = d; p.gamma = 3.0; p.t = 2.0;
        cases.push_back({"hat_r", p, 1e-6, "distr:qwA"});
        cases.push_back({"beta_arcsin", p, 1e-6, "dist:ppeQ"});
        cases.push_back({"inv_bessel_at_fpt", d, 1e-6, "dist:S"});
        p = d; p.nu = 0.5;
        cases.push_back({"stable_ratio", p, 1e-6, "eqBella"});
        cases.push_back({"cauchy", d, 1e-6, "C(t) law"});
        p = d; p.nu = 0.5;
        cases.push_back({"cauchy_at_stable", p, 1e-5, "Z(t)=C(S_nu(t))"});
        cases.push_back({"hyp2", d, 1e-5, "dist:BH2"});
        cases.push_back({"hyp3", d, 1e-6, "sIIIo"});
        cases.push_back({"hypJ2", d, 1e-5, "dist:J2"});
        cases.push_back({"hypJ3", d, 1e-6, "dist:J3"});
    }
    for (const auto& c : cases)
        rep.add_abs("norm." + std::string(c.law), c.anchor, detail::law_mass(c.law, c.p), 1.0, c.tol);
    // extra time points for the J3 law, as the theorem states them
    for (double t : {0.5, 2.0}) {
        laws::LawParams p = d;
        p.t = t;
        rep.add_abs("norm.hypJ3.t" + std::to_string(t).substr(0, 3), "dist:J3",
                    detail::law_mass("hypJ3", p), 1.0, 1e-6);
    }
    return rep;
}

// ---- criteria 2, 3, 6, 9(routes), 10(limit), 11: oracle agreements --------

inline VerificationReport run_oracles(std::uint64_t seed = kDefaultSeed)
{
    VerificationReport rep;
    rep.suite = "oracles";
    rep.seed = seed;

    { // master integral: quadrature vs closed form on the 81-point log grid
        double worst = 0.0;
        const double grid[3] = {0.1, 1.0, 10.0};
        for (double nu : grid)
            for (double p : grid)
                for (double b : grid)
                    for (double g : grid) {
                        const double q = sf::master_integral_quadrature(nu, p, b, g);
                        const double c = sf::master_integral_closed_form(nu, p, b, g);
                        worst = std::max(worst, std::abs(q - c) / c);
                    }
        rep.add_at_most("mi.grid81", "formula:K", worst, 1e-8, "worst relative gap over the 3^4 grid");
    }
    { // K recursion and Wronskian invariants
        double worst = 0.0;
        for (double nu : {1.0, 1.5, 2.0})
            for (double x = 0.1; x <= 20.0; x *= 1.6) {
                const double lhs = sf::bessel_k(nu + 1.0, x) - sf::bessel_k(nu - 1.0, x)
                                   - 2.0 * nu / x * sf::bessel_k(nu, x);
                worst = std::max(worst, std::abs(lhs) / sf::bessel_k(nu + 1.0, x));
            }
        rep.add_at_most("k.recursion", "K-recursion", worst, 1e-10);
        worst = 0.0;
        for (double nu : {0.0, 0.5, 1.3, 2.0})
            for (double x = 0.5; x <= 10.0; x *= 1.5) {
                const double w = sf::bessel_i(nu, x) * sf::bessel_k(nu + 1.0, x)
                                 + sf::bessel_i(nu + 1.0, x) * sf::bessel_k(nu, x);
                worst = std::max(worst, std::abs(w * x - 1.0));
            }
        rep.add_at_most("k.wronskian", "I-K Wronskian", worst, 1e-10);
    }
    { // Fox-H route vs double-integral route at the 60-point grid
        double worst = 0.0;
        for (double g : {1.0, 2.0, 3.0, 5.5})
            for (double t : {0.25, 1.0, 4.0})
                for (double r : {0.1, 0.5, 1.0, 2.0, 5.0}) {
                    const double a = dens::iterated_bessel_density_fox(g, r, t);
                    const double b = dens::iterated_bessel_density_quadrature(g, r, t);
                    worst = std::max(worst, std::abs(a - b));
                }
        rep.add_at_most("fox.grid60", "asdfgh", worst, 1e-6, "max |fox - quadrature| over 60 (gamma,t,r)");
    }
    { // contour refinement: doubling node count moves fox_h by < 1e-8
        fox::ContourSpec c1;
        fox::ContourSpec c2;
        c2.node_count = 2 * c1.node_count;
        double worst = 0.0;
        for (double g : {1.0, 3.0})
            for (double x : {0.3, 1.0, 2.5}) {
                const auto spec = fox::iterated_bessel_fox_spec(g);
                worst = std::max(worst, std::abs(fox::fox_h(spec, c1, x) - fox::fox_h(spec, c2, x)));
            }
        rep.add_at_most("fox.refine", "mellinHfox", worst, 1e-8);
    }
    { // Fox shift property
        const auto spec = fox::iterated_bessel_fox_spec(2.0);
        const fox::ContourSpec c;
        const double x = 0.7;
        const double lhs = fox::fox_h(spec.shifted(1.0), c, x) / x;
        const double rhs = fox::fox_h(spec, c, x);
        rep.add_abs("fox.shift", "propH2", lhs, rhs, 1e-10);
    }
    { // Mellin transform of the iterated-Bessel law vs its closed form
        const double g = 2.0, t = 1.0;
        for (double eta : {1.0, 1.5, 2.0, 3.0}) {
            auto pdf = [&](double r) { return dens::iterated_bessel_density_quadrature(g, r, t); };
            const double num = fox::mellin_of_density(pdf, eta, 1.0 - g, INFINITY, std::pow(8.0 * t, 0.25),
                                                      quad::QuadratureConfig(1e-10, 1e-13));
            rep.add_rel("mellin.ib.eta" + std::to_string(eta).substr(0, 3), "mellJJ", num,
                        dens::iterated_bessel_mellin(g, eta, t), 1e-7);
        }
        auto baf = [&](double r) { return dens::bessel_at_fpt_density(2.0, r, 1.0); };
        const double m = fox::mellin_of_density(baf, 1.5, -1.0, 2.0, 1.0, quad::QuadratureConfig(1e-10, 1e-13));
        rep.add_rel("mellin.baf.eta1.5", "mu-moments", m, dens::bessel_at_fpt_mu_moment(2.0, 0.5, 1.0), 1e-7);
        const double sr = dens::stable_ratio_mellin_quadrature(0.5, 1.2, quad::QuadratureConfig(1e-11, 1e-14));
        rep.add_rel("mellin.stable_ratio.eta1.2", "eqBella-mellin", sr,
                    dens::stable_ratio_mellin_closed(0.5, 1.2), 1e-7);
    }
    { // subordination dual routes
        rep.add_abs("dual.jr", "dist:g", dens::jr_density(2.0, 1.0, 1.0), dens::jr_density_oracle(2.0, 1.0, 1.0), 1e-7);
        rep.add_abs("dual.baf", "dist:coincides", dens::bessel_at_fpt_density(2.0, 1.0, 1.0),
                    dens::bessel_at_fpt_oracle(2.0, 1.0, 1.0), 1e-7);
        rep.add_abs("dual.drift", "eRt", dens::drifted_composite_density(3.0, 0.5, 1.0, 1.0),
                    dens::drifted_composite_oracle(3.0, 0.5, 1.0, 1.0), 1e-7);
        double worst2 = 0.0, worst3 = 0.0;
        for (double e : {0.25, 0.5, 1.0, 2.0, 4.0}) {
            worst2 = std::max(worst2, std::abs(hyp::pj2_density(e, 1.0) - hyp::pj2_density_oracle(e, 1.0)));
            worst3 = std::max(worst3, std::abs(hyp::pj3_density(e, 1.0) - hyp::pj3_density_oracle(e, 1.0)));
        }
        rep.add_at_most("dual.pj2", "dist:J2", worst2, 1e-6, "5 eta points, closed vs subordination");
        rep.add_at_most("dual.pj3", "dist:J3", worst3, 1e-7, "5 eta points, closed vs subordination");
    }
    { // K2 = K0 + (2/x) K1 leaves p_J2 unchanged
        const double x = 0.5 * std::hypot(1.5, 1.0);
        const double gap = sf::bessel_k(2.0, x) - sf::bessel_k(0.0, x) - 2.0 / x * sf::bessel_k(1.0, x);
        rep.add_at_most("dual.k2split", "K-recursion", std::abs(gap), 1e-14, "recursion at a J2 integrand argument");
    }
    { // J3 denominator convention probe (heqd vs dist:J3): the unit-mass form wins
        const double mass_printed = hyp::j_law_mass([](double e) { return hyp::pj3_density(e, 1.0); });
        const double mass_intro = hyp::j_law_mass([](double e) { return hyp::pj3_density_intro_variant(e, 1.0); });
        rep.add_abs("probe.j3.mass", "dist:J3", mass_printed, 1.0, 1e-6,
                    "eta^2+2t^2 denominator normalizes; adopted");
        rep.add_must_exceed("probe.j3.intro-variant", "heqd", std::abs(mass_intro - 1.0), 1e-3,
                            "eta^2+t^2 denominator fails normalization; rejected");
    }
    { // criterion 6: exact special-case reductions at 1e-10
        double worst = 0.0;
        for (double r = 0.1; r <= 5.0; r += 0.35)
            worst = std::max(worst, std::abs(dens::bessel_at_fpt_density(1.0, r, 1.3)
                                             - 2.0 * 1.3 / (M_PI * (1.3 * 1.3 + r * r))));
        rep.add_at_most("reduce.cauchy", "coincides with a folded Cauchy", worst, 1e-10);
        worst = 0.0;
        for (int n : {1, 2, 3, 5})
            for (double r = 0.1; r <= 4.0; r += 0.3)
                worst = std::max(worst, std::abs(dens::inverse_bessel_at_fpt_density(n, r, 1.0 / std::sqrt(n))
                                                 - dens::folded_student_density(n, r)));
        rep.add_at_most("reduce.student", "dist:St", worst, 1e-10);
        worst = 0.0;
        for (double r = 0.05; r < 1.0; r += 0.08)
            worst = std::max(worst, std::abs(dens::beta_arcsin_density(1.0, r, 1.0)
                                             - 1.0 / (M_PI * std::sqrt(r * (1.0 - r)))));
        rep.add_at_most("reduce.arcsin", "arcsin law", worst, 1e-10);
        for (int g : {2, 3, 4}) {
            worst = 0.0;
            for (double r = 0.2; r <= 4.0; r += 0.3)
                for (double t : {0.7, 1.0, 1.6})
                    worst = std::max(worst, std::abs(dens::bessel_at_fpt_tail_closed(g, r, t)
                                                     - (1.0 - dens::bessel_at_fpt_cdf(g, r, t))));
            rep.add_at_most("reduce.tail.g" + std::to_string(g), "rtfv special cases", worst, 1e-10);
        }
    }
    { // criterion 10 part 3: mu -> 0 limit of the drifted composite
        const double lim = dens::drifted_composite_density(2.0, 1e-8, 1.0, 1.0);
        rep.add_abs("drift.mu0limit", "K_nu small-argument asymptotic", lim,
                    dens::bessel_at_fpt_density(2.0, 1.0, 1.0), 1e-5);
    }
    { // criterion 11: Mittag-Leffler relation and the by-product integral identity
        for (double nu : {0.3, 0.5, 0.7})
            for (double t : {0.5, 1.0}) {
                const double q = dens::lamperti_laplace_integral(nu, 1.0, t);
                const double e = sf::mittag_leffler(nu, 1.0, -std::pow(t, nu));
                rep.add_abs("ml.nu" + std::to_string(nu).substr(0, 3) + ".t" + std::to_string(t).substr(0, 3),
                            "Mittag-Leffler relation", q, e, 1e-6);
            }
        const double pairs[6][2] = {{1.0, 1.0}, {2.0, 1.0}, {3.0, 0.5}, {1.5, 2.0}, {2.5, 0.7}, {4.0, 1.3}};
        for (const auto& gt : pairs)
            rep.add_at_most("ident.integral.g" + std::to_string(gt[0]).substr(0, 3) + ".t"
                                + std::to_string(gt[1]).substr(0, 3),
                            "by-product integral identity", std::abs(dens::identity_integral_check(gt[0], gt[1])),
                            1e-8);
    }
    { // normalization restated in transform space: Mellin at eta = 1 is 1
        for (const char* law : {"bessel_at_fpt", "stable_ratio", "t_r_gamma"}) {
            laws::LawParams p;
            p.nu = 0.5;
            const auto f = laws::make_density(law, p);
            const double m = fox::mellin_of_density(f.pdf, 1.0, f.strip_lo, f.strip_hi, 1.0,
                                                    quad::QuadratureConfig(1e-9, 1e-12));
            rep.add_abs(std::string("mellin.unit.") + law, "normalization via Mellin", m, 1.0, 1e-6);
        }
    }
    return rep;
}

// ---- criterion 7: PDE residual suite --------------------------------------

inline VerificationReport run_pde(std::uint64_t seed = kDefaultSeed)
{
    VerificationReport rep;
    rep.suite = "pde";
    rep.seed = seed;
    auto record = [&](const pde::ResidualReport& r, double final_tol = 1e-3) {
        rep.add_at_least("pde." + r.law_id + "." + r.equation_id + ".slope", r.equation_id,
                         r.convergence_slope, 1.5,
                         "levels " + std::to_string(r.levels.size()));
        rep.add_at_most("pde." + r.law_id + "." + r.equation_id + ".final", r.equation_id,
                        r.final_max(), final_tol);
    };

    // iterated Bessel: derived variant converges; printed variant and swapped
    // factor order are recorded negative probes
    pde::GridSpec ib{0.6, 2.2, 0.8, 1.2, 0.08, 0.08, 4};
    const auto ib_ok = pde::verify_iterated_bessel_pde(2.0, ib);
    record(ib_ok);
    {
        pde::GridSpec ctrl = ib;
        ctrl.refinement_levels = 3;
        const auto swapped = pde::verify_iterated_bessel_pde(2.0, ctrl, true);
        rep.add_must_exceed("pde.iterated_bessel.swapped-control", "eqUDD2", swapped.final_max(),
                            std::max(100.0 * ib_ok.final_max(), 1e-2),
                            "factor order is load-bearing: swapped assembly must not converge");
        const auto printed = pde::verify_iterated_bessel_pde(2.0, ctrl, false, pde::InnerVariant::printed);
        rep.add_must_exceed("pde.iterated_bessel.printed-probe", "eqUDD2", printed.final_max(), 1e-2,
                            "published inner factor (sign slip in the by-parts step) does not annihilate the density");
        pde::GridSpec g1 = ib;
        g1.refinement_levels = 3;
        record(pde::verify_iterated_bessel_pde(1.0, g1)); // gamma = 1: the IBM fourth-order form
    }
    // J_R third-order equation, both displays
    pde::GridSpec jr{0.6, 2.2, 0.8, 1.2, 0.05, 0.05, 3};
    record(pde::verify_jr_pde(2.0, jr, true));
    {
        const auto printed = pde::verify_jr_pde(2.0, jr, false);
        rep.add_must_exceed("pde.jr.printed-probe", "eqBB2", printed.final_max(), 1e-2,
                            "display without the zeroth-order term does not converge; the other display carries it");
    }
    // Laplace-type equations
    pde::GridSpec lap{0.75, 2.0, 0.75, 2.0, 0.1, 0.1, 6};
    record(pde::verify_laplace_type_pde(pde::LaplaceLaw::bessel_at_fpt, 1.0, lap)); // Cauchy harmonicity
    record(pde::verify_laplace_type_pde(pde::LaplaceLaw::bessel_at_fpt, 2.0, lap));
    pde::GridSpec hj{0.75, 2.0, 0.75, 2.0, 0.1, 0.1, 5};
    record(pde::verify_laplace_type_pde(pde::LaplaceLaw::hypJ2, 0.0, hj));
    record(pde::verify_laplace_type_pde(pde::LaplaceLaw::hypJ3, 0.0, lap));
    // drifted equations
    record(pde::verify_drifted_fpt_pde(1.0, lap));
    record(pde::verify_drifted_composite_pde(2.0, 0.5, lap));
    // iterated first-passage
    pde::GridSpec ifpt{0.7, 1.6, 0.7, 1.3, 0.05, 0.05, 3};
    record(pde::verify_iterated_fpt_pde(1, ifpt));
    record(pde::verify_iterated_fpt_pde(2, ifpt));
    for (int n = 1; n <= 4; ++n)
        rep.add_at_most("pde.lode.n" + std::to_string(n), "eqLpde",
                        pde::iterated_fpt_laplace_ode_residual(n, 1.0), 1e-9,
                        "Laplace-domain ODE by nested differentiation");
    // forward equations of the hyperbolic distance laws
    pde::GridSpec fwd{0.5, 2.0, 0.5, 2.0, 0.1, 0.1, 4};
    record(pde::verify_p2_forward_pde(2, fwd));
    record(pde::verify_p2_forward_pde(3, fwd));
    return rep;
}

// ---- criteria 5, 8, 9(MC), 10(MC): distributional identities ---------------

inline VerificationReport run_identities(std::uint64_t seed = kDefaultSeed)
{
    using sim::ProcessKind;
    VerificationReport rep;
    rep.suite = "identities";
    rep.seed = seed;
    int k = 0;
    auto next_seed = [&]() { return detail::check_seed(seed, ++k); };
    constexpr std::size_t N = 100000;

    { // sqrt(T_{R^g(t^2)}) =d R^g(T_t) at gamma = 2, t = 1
        sim::ProcessSpec tr;
        tr.kind = ProcessKind::InverseCompositionTR;
        tr.gamma = 2.0;
        tr.t = 1.0; // t^2 with t = 1
        auto a = sim::sample_batch(tr, next_seed(), N);
        for (auto& v : a.values) v = std::sqrt(v);
        sim::ProcessSpec baf;
        baf.kind = ProcessKind::BesselAtFPT;
        baf.gamma = 2.0;
        baf.t = 1.0;
        const auto b = sim::sample_batch(baf, next_seed(), N);
        rep.add_at_least("ks.wrty", "wrty", mc::ks_two_sample(a.values, b.values).p_value, 0.01,
                         "two-sample KS, N=1e5");
    }
    { // T_{R^1(t)} =d (C(sqrt t))^2 at t = 1
        sim::ProcessSpec tr;
        tr.kind = ProcessKind::InverseCompositionTR;
        tr.gamma = 1.0;
        tr.t = 1.0;
        const auto a = sim::sample_batch(tr, next_seed(), N);
        sim::ProcessSpec c;
        c.kind = ProcessKind::Cauchy;
        c.t = 1.0;
        auto b = sim::sample_batch(c, next_seed(), N);
        for (auto& v : b.values) v = v * v;
        rep.add_at_least("ks.qzc", "dist:qzc", mc::ks_two_sample(a.values, b.values).p_value, 0.01,
                         "two-sample KS, N=1e5");
    }
    { // stable ratio vs the Lamperti law, and its nu = 1/2 FPT-ratio face
        for (double nu : {0.3, 0.5, 0.7}) {
            sim::ProcessSpec s;
            s.kind = ProcessKind::StableRatio;
            s.nu = nu;
            const auto batch = sim::sample_batch(s, next_seed(), N);
            const auto ks = mc::ks_one_sample(batch.values,
                                              [nu](double w) { return dens::stable_ratio_cdf(nu, w); }, "eqBella");
            rep.add_at_least("ks.lamperti.nu" + std::to_string(nu).substr(0, 3), "eqBella", ks.p_value, 0.01);
        }
        // nu = 1/2 ratio of two FPT draws matches (1/pi) w^{-1/2}/(w+1)
        sim::Rng rng(next_seed());
        std::vector<double> ratio(N);
        for (auto& v : ratio) v = sim::sample_fpt(1.0, rng) / sim::sample_fpt(1.0, rng);
        const auto ks = mc::ks_one_sample(ratio, [](double w) { return dens::inverted_composition_cdf(1.0, w, 1.0); },
                                          "T1/T2");
        rep.add_at_least("ks.fpt-ratio", "coincides with the ratio of two independent first-passage times",
                         ks.p_value, 0.01);
    }
    { // S_{1/2}(t) =d T_{t/sqrt 2}
        sim::ProcessSpec s;
        s.kind = ProcessKind::StableSubordinator;
        s.nu = 0.5;
        s.t = 1.0;
        const auto a = sim::sample_batch(s, next_seed(), N);
        sim::ProcessSpec f;
        f.kind = ProcessKind::FPT;
        f.t = 1.0 / std::sqrt(2.0);
        const auto b = sim::sample_batch(f, next_seed(), N);
        rep.add_at_least("ks.s12_fpt", "lap:tSub", mc::ks_two_sample(a.values, b.values).p_value, 0.01);
    }
    { // criterion 8: iterated FPT Laplace transforms
        for (int n : {1, 2, 3})
            for (double lam : {0.5, 1.0, 2.0}) {
                sim::ProcessSpec s;
                s.kind = ProcessKind::IteratedFPT;
                s.depth = n;
                s.t = 1.0;
                const auto batch = sim::sample_batch(s, next_seed(), N);
                const auto est = mc::functional_estimate(batch.values,
                                                         [lam](double x) { return std::exp(-lam * x); });
                const double ref = dens::iterated_fpt_laplace(n, lam, 1.0);
                rep.add_abs("lap.ifpt.n" + std::to_string(n) + ".l" + std::to_string(lam).substr(0, 3), "qqqL",
                            est.estimate, ref, 3.0 * est.std_error, "MC mean of e^{-lambda I}, 3 sigma");
            }
    }
    { // criterion 10: drifted FPT lemma consequences
        sim::ProcessSpec s;
        s.kind = ProcessKind::DriftedFPT;
        s.mu = 2.0;
        s.t = 1.0; // beta = 1
        const auto batch = sim::sample_batch(s, next_seed(), 1000000);
        const auto est = mc::functional_estimate(batch.values, [](double x) { return x; });
        rep.add_abs("mom.mv", "mV", est.estimate, 1.0 / 2.0, 3.0 * est.std_error, "E T^mu_beta = beta/mu");
        sim::ProcessSpec s2 = s;
        s2.mu = 1.0;
        const auto b2 = sim::sample_batch(s2, next_seed(), N);
        const auto lap = mc::functional_estimate(b2.values, [](double x) { return std::exp(-x); });
        rep.add_abs("lap.rtg", "rTg", lap.estimate,
                    std::exp(1.0 * 1.0 - 1.0 * std::sqrt(2.0 * 1.0 + 1.0)), 3.0 * lap.std_error,
                    "E e^{-lambda T} vs e^{beta mu - beta sqrt(2 lambda + mu^2)}");
        sim::ProcessSpec s0 = s;
        s0.mu = 0.0;
        const auto a0 = sim::sample_batch(s0, next_seed(), N);
        sim::ProcessSpec f0;
        f0.kind = ProcessKind::FPT;
        f0.t = 1.0;
        const auto b0 = sim::sample_batch(f0, next_seed(), N);
        rep.add_at_least("ks.drift0", "lem:MAX(i) drift-free limit",
                         mc::ks_two_sample(a0.values, b0.values).p_value, 0.01);
    }
    { // criterion 9: E[sinh R3(t) / R3(t)] = e^{t/2}
        for (double t : {0.5, 1.0}) {
            sim::ProcessSpec s;
            s.kind = ProcessKind::BesselAtT;
            s.gamma = 3.0;
            s.t = t;
            const auto batch = sim::sample_batch(s, next_seed(), N);
            const auto est = mc::functional_estimate(batch.values,
                                                     [](double x) { return x > 0 ? std::sinh(x) / x : 1.0; });
            rep.add_abs("mc.qazl.t" + std::to_string(t).substr(0, 3), "qazL", est.estimate, std::exp(0.5 * t),
                        3.0 * est.std_error);
        }
    }
    { // FPT slow-down probability and its t-derivative
        sim::ProcessSpec f;
        f.kind = ProcessKind::FPT;
        f.t = 1.0;
        const auto batch = sim::sample_batch(f, next_seed(), 1000000);
        double below = 0.0;
        for (double v : batch.values) below += (v <= 1.0);
        const double phat = below / batch.count();
        const double pref = dens::fpt_slowdown_probability(1.0);
        rep.add_abs("mc.slowdown", "slow-down integral", phat, pref,
                    3.0 * std::sqrt(pref * (1.0 - pref) / batch.count()), "MC frequency vs quadrature");
        double worst = 0.0;
        for (double t : {0.5, 1.0, 2.0}) {
            const double h = 1e-4;
            const double d = (dens::fpt_slowdown_probability(t + h) - dens::fpt_slowdown_probability(t - h)) / (2.0 * h);
            worst = std::max(worst, std::abs(d + std::exp(-0.5 * t) / std::sqrt(2.0 * M_PI * t)));
        }
        rep.add_at_most("quad.slowdown-derivative", "which decreases for all t", worst, 1e-6,
                        "central difference of the quadrature; the closed rate carries 1/sqrt(2 pi t)");
        // Brownian scaling T_{2t} =d 4 T_t
        sim::ProcessSpec f2;
        f2.kind = ProcessKind::FPT;
        f2.t = 2.0;
        auto a = sim::sample_batch(f, next_seed(), N);
        for (auto& v : a.values) v *= 4.0;
        const auto b = sim::sample_batch(f2, next_seed(), N);
        rep.add_at_least("ks.fpt-scaling", "Brownian scaling", mc::ks_two_sample(a.values, b.values).p_value, 0.01);
    }
    { // twice-iterated FPT samples against the qawE density
        sim::ProcessSpec s;
        s.kind = ProcessKind::IteratedFPT;
        s.depth = 2;
        s.t = 1.0;
        const auto batch = sim::sample_batch(s, next_seed(), N);
        laws::LawParams p;
        p.n = 2;
        const auto law = laws::make_density("iterated_fpt", p);
        rep.add_at_least("ks.ifpt2", "qawE", mc::ks_one_sample(batch, law).p_value, 0.01);
        // IBM connection: qawE(x,t) = (t/x) int phi_x(s) phi_s(t) ds
        auto prod_gauss = quad::integrate_semi_infinite(
            [](double s) {
                return std::exp(-s * s / 2.0) / std::sqrt(2.0 * M_PI)
                       * std::exp(-1.0 / (2.0 * s)) / std::sqrt(2.0 * M_PI * s);
            },
            0.0, quad::QuadratureConfig(1e-11, 1e-14)).value;
        rep.add_abs("quad.ibm-connection", "IBM connection remark", dens::iterated_fpt_density(2, 1.0, 1.0),
                    prod_gauss, 1e-8, "product-Gaussian quadrature at (x,t)=(1,1)");
    }
    { // Z(t) = C(S_nu(t)) sampler against the Fourier density
        sim::ProcessSpec s;
        s.kind = ProcessKind::CauchyAtStable;
        s.nu = 0.6;
        s.t = 1.0;
        const auto batch = sim::sample_batch(s, next_seed(), N);
        laws::LawParams p;
        p.nu = 0.6;
        const auto law = laws::make_density("cauchy_at_stable", p);
        rep.add_at_least("ks.cauchy_at_stable", "Z(t)=C(S_nu(t))", mc::ks_one_sample(batch, law).p_value, 0.01);
        double skew = 0.0, m2 = 0.0; // symmetry: clipped third moment vanishes
        for (double v : batch.values) {
            const double c = std::clamp(v, -50.0, 50.0);
            skew += c * c * c;
            m2 += c * c;
        }
        skew /= batch.count();
        m2 /= batch.count();
        rep.add_abs("mc.cas-symmetry", "Z symmetry", skew / std::pow(m2, 1.5), 0.0,
                    3.0 * 6.0 / std::sqrt(static_cast<double>(batch.count())), "clipped skewness");
    }
    { // nu -> 1 degeneracy of the stable subordinator
        sim::ProcessSpec s;
        s.kind = ProcessKind::StableSubordinator;
        s.nu = 0.999;
        s.t = 1.0;
        auto batch = sim::sample_batch(s, next_seed(), 10000);
        std::sort(batch.values.begin(), batch.values.end());
        const double med = batch.values[batch.values.size() / 2];
        rep.add_abs("mc.stable-degenerate", "lap:tSub", med, 1.0, 0.05, "median within 5% of t at nu=0.999");
    }
    { // hyperbolic identities
        // LAA vs LAAA: whole clock at t equals half clock at 2t
        double worst = 0.0;
        for (double e : {0.5, 1.0, 2.0})
            worst = std::max(worst, std::abs(hyp::p2_density(e, 1.0, hyp::Convention::whole)
                                             - hyp::p2_density(e, 2.0, hyp::Convention::half)));
        rep.add_at_most("hyp.conventions", "LAA/LAAA change of variable", worst, 1e-10);
        // p3's three half-clock representations
        worst = 0.0;
        for (double e : {0.5, 1.0, 2.0})
            for (double t : {0.5, 1.0}) {
                const double a = hyp::p3_density(e, t, hyp::Convention::half);
                worst = std::max(worst, std::abs(a - hyp::p3_density_bessel_form(e, t)));
                worst = std::max(worst, std::abs(a - hyp::p3_density_fpt_form(e, t)));
                worst = std::max(worst, std::abs(a - hyp::p3_density_drifted_fpt_form(e, t)));
            }
        rep.add_at_most("hyp.p3-representations", "dgjk / FPT forms", worst, 1e-10);
        // Bessel-expectation form of p2: p2(eta,t) = e^{-t/8}/sqrt(pi t) *
        // E[ 1{R2(t) > eta} sinh(eta)/sqrt(cosh R2 - cosh eta) ]
        sim::ProcessSpec b2;
        b2.kind = ProcessKind::BesselAtT;
        b2.gamma = 2.0;
        b2.t = 1.0;
        const double eta = 1.0;
        const auto batch = sim::sample_batch(b2, next_seed(), 500000);
        const auto est = mc::functional_estimate(batch.values, [eta](double phi) {
            if (phi <= eta) return 0.0;
            return std::sinh(eta) / std::sqrt(std::cosh(phi) - std::cosh(eta));
        });
        const double pref = std::exp(-1.0 / 8.0) / std::sqrt(M_PI * 1.0);
        rep.add_abs("mc.p2-bessel-expectation", "where the mean is taken with respect to",
                    pref * est.estimate, hyp::p2_density(eta, 1.0), 3.0 * pref * est.std_error,
                    "prefactor e^{-t/8}/sqrt(pi t) balances the dim-2 Bessel mean");
    }
    { // beta/arcsin pushforward: t^3/(t^2 + R^2) with R = R^gamma(T_t)
        sim::ProcessSpec s;
        s.kind = ProcessKind::BesselAtFPT;
        s.gamma = 2.0;
        s.t = 1.0;
        auto batch = sim::sample_batch(s, next_seed(), N);
        for (auto& v : batch.values) v = 1.0 / (1.0 + v * v);
        const auto ks = mc::ks_one_sample(batch.values,
                                          [](double x) { return dens::beta_arcsin_cdf(2.0, x, 1.0); }, "dist:ppeQ");
        rep.add_at_least("ks.beta_arcsin", "dist:ppeQ", ks.p_value, 0.01);
    }
    return rep;
}

// ---- criterion 4: Mellin / moments ------------------------------------------

inline VerificationReport run_moments(std::uint64_t seed = kDefaultSeed)
{
    using sim::ProcessKind;
    VerificationReport rep;
    rep.suite = "moments";
    rep.seed = seed;
    int k = 0;
    auto next_seed = [&]() { return detail::check_seed(seed, 900 + ++k); };
    constexpr std::size_t N = 1000000;

    for (double g : {1.0, 2.0, 3.0})
        for (double m : {1.0, 2.0}) {
            sim::ProcessSpec s;
            s.kind = ProcessKind::IteratedBessel;
            s.gamma = g;
            s.t = 1.0;
            const auto batch = sim::sample_batch(s, next_seed(), N);
            const auto est = mc::moment_estimate(batch, m);
            rep.add_abs("mom.ir.g" + std::to_string(g).substr(0, 1) + ".m" + std::to_string(m).substr(0, 1),
                        "momentsIR", est.estimate, dens::iterated_bessel_moment(g, m, 1.0),
                        3.0 * est.std_error, "N=1e6 fixed seed");
        }
    { // mu-moments of R^gamma(T_t), mu = 1/2
        sim::ProcessSpec s;
        s.kind = ProcessKind::BesselAtFPT;
        s.gamma = 2.0;
        s.t = 1.0;
        const auto batch = sim::sample_batch(s, next_seed(), N);
        const auto est = mc::moment_estimate(batch, 0.5);
        rep.add_abs("mom.baf.mu0.5", "mu-moments", est.estimate, dens::bessel_at_fpt_mu_moment(2.0, 0.5, 1.0),
                    3.0 * est.std_error);
    }
    { // sampler sanity: half-normal mean at gamma = 1, second moment at gamma = 2
        sim::ProcessSpec s;
        s.kind = ProcessKind::BesselAtT;
        s.gamma = 1.0;
        s.t = 1.0;
        const auto batch = sim::sample_batch(s, next_seed(), N);
        const auto est = mc::moment_estimate(batch, 1.0);
        rep.add_abs("mom.bessel.halfnormal", "dist:k", est.estimate, std::sqrt(2.0 / M_PI), 3.0 * est.std_error);
        sim::ProcessSpec s2 = s;
        s2.gamma = 2.0;
        const auto b2 = sim::sample_batch(s2, next_seed(), N);
        const auto e2 = mc::moment_estimate(b2, 2.0);
        rep.add_abs("mom.bessel.m2", "dist:k", e2.estimate, 2.0, 3.0 * e2.std_error);
    }
    { // refusal of nonexistent moments
        sim::ProcessSpec s;
        s.kind = ProcessKind::BesselAtFPT;
        s.gamma = 1.0;
        s.t = 1.0;
        const auto batch = sim::sample_batch(s, next_seed(), 1000);
        bool refused = false;
        try {
            (void)mc::moment_estimate(batch, 1.0);
        } catch (const std::domain_error&) {
            refused = true;
        }
        rep.add_abs("mom.refusal", "Cauchy-tail moment nonexistence", refused ? 1.0 : 0.0, 1.0, 0.0,
                    "order-1 moment request on the folded-Cauchy tail must be refused");
    }
    return rep;
}

// single-law PDE verification behind `verify --suite pde --law ... --gamma ...`
inline VerificationReport run_pde_for_law(const std::string& law, double gamma, double mu,
                                          std::uint64_t seed = kDefaultSeed)
{
    VerificationReport rep;
    rep.suite = "pde";
    rep.seed = seed;
    auto record = [&](const pde::ResidualReport& r) {
        rep.add_at_least("pde." + r.law_id + "." + r.equation_id + ".slope", r.equation_id,
                         r.convergence_slope, 1.5,
                         "final max residual " + std::to_string(r.final_max()));
        rep.add_at_most("pde." + r.law_id + "." + r.equation_id + ".final", r.equation_id, r.final_max(), 1e-3);
    };
    if (law == "iterated_bessel") {
        record(pde::verify_iterated_bessel_pde(gamma, pde::GridSpec{0.6, 2.2, 0.8, 1.2, 0.08, 0.08, 4}));
    } else if (law == "jr") {
        record(pde::verify_jr_pde(gamma, pde::GridSpec{0.6, 2.2, 0.8, 1.2, 0.05, 0.05, 3}, true));
    } else if (law == "bessel_at_fpt") {
        record(pde::verify_laplace_type_pde(pde::LaplaceLaw::bessel_at_fpt, gamma,
                                            pde::GridSpec{0.75, 2.0, 0.75, 2.0, 0.1, 0.1, 6}));
    } else if (law == "drifted_fpt") {
        record(pde::verify_drifted_fpt_pde(mu > 0.0 ? mu : 1.0, pde::GridSpec{0.75, 2.0, 0.75, 2.0, 0.1, 0.1, 6}));
    } else if (law == "drifted_composite") {
        record(pde::verify_drifted_composite_pde(gamma, mu > 0.0 ? mu : 0.5,
                                                 pde::GridSpec{0.75, 2.0, 0.75, 2.0, 0.1, 0.1, 6}));
    } else if (law == "iterated_fpt") {
        record(pde::verify_iterated_fpt_pde(2, pde::GridSpec{0.7, 1.6, 0.7, 1.3, 0.05, 0.05, 3}));
    } else if (law == "hyp2") {
        record(pde::verify_p2_forward_pde(2, pde::GridSpec{0.5, 2.0, 0.5, 2.0, 0.1, 0.1, 4}));
    } else if (law == "hyp3") {
        record(pde::verify_p2_forward_pde(3, pde::GridSpec{0.5, 2.0, 0.5, 2.0, 0.1, 0.1, 4}));
    } else if (law == "hypJ2") {
        record(pde::verify_laplace_type_pde(pde::LaplaceLaw::hypJ2, 0.0,
                                            pde::GridSpec{0.75, 2.0, 0.75, 2.0, 0.1, 0.1, 5}));
    } else if (law == "hypJ3") {
        record(pde::verify_laplace_type_pde(pde::LaplaceLaw::hypJ3, 0.0,
                                            pde::GridSpec{0.75, 2.0, 0.75, 2.0, 0.1, 0.1, 6}));
    } else {
        throw std::invalid_argument("run_pde_for_law: no governing-equation check for law '" + law + "'");
    }
    return rep;
}

// sampler-vs-density consistency sweep: one KS record per composition that
// has both a sampler and a density
inline VerificationReport run_sampler_consistency(std::uint64_t seed = kDefaultSeed)
{
    VerificationReport rep;
    rep.suite = "sampler-consistency";
    rep.seed = seed;
    struct Case { const char* law; laws::LawParams p; std::size_t n; };
    laws::LawParams d;
    std::vector<Case> cases;
    {
        laws::LawParams p = d;
        cases.push_back({"bessel", d, 100000});
        cases.push_back({"iterated_bessel", d, 100000});
        p = d; p.gamma = 2.0;
        cases.push_back({"jr", p, 100000});
        cases.push_back({"fpt", d, 100000});
        p = d; p.mu = 1.0;
        cases.push_back({"drifted_fpt", p, 100000});
        p = d; p.n = 2;
        cases.push_back({"iterated_fpt", p, 100000});
        cases.push_back({"bessel_at_fpt", d, 100000});
        p = d; p.mu = 1.0;
        cases.push_back({"drifted_composite", p, 100000});
        cases.push_back({"t_r_gamma", d, 100000});
        p = d; p.nu = 0.5;
        cases.push_back({"stable_ratio", p, 100000});
        cases.push_back({"cauchy", d, 100000});
        p = d; p.nu = 0.6;
        cases.push_back({"cauchy_at_stable", p, 50000});
        cases.push_back({"hyp2", d, 30000});
        cases.push_back({"hyp3", d, 100000});
        cases.push_back({"hypJ2", d, 30000});
        cases.push_back({"hypJ3", d, 100000});
    }
    int k = 0;
    for (const auto& c : cases) {
        const auto spec = laws::make_process_spec(c.law, c.p);
        const auto law = laws::make_density(c.law, c.p);
        const auto batch = sim::sample_batch(*spec, detail::check_seed(seed, 620 + ++k), c.n);
        const auto ks = mc::ks_one_sample(batch, law);
        rep.add_at_least(std::string("ks.law.") + c.law, "sampler/density consistency", ks.p_value, 0.01,
                         "N=" + std::to_string(c.n));
    }
    return rep;
}

inline VerificationReport run_suite(const std::string& name, std::uint64_t seed = kDefaultSeed)
{
    if (name == "normalization") return run_normalization(seed);
    if (name == "oracles") return run_oracles(seed);
    if (name == "pde") return run_pde(seed);
    if (name == "identities") {
        auto rep = run_identities(seed);
        auto ks = run_sampler_consistency(seed);
        rep.checks.insert(rep.checks.end(), ks.checks.begin(), ks.checks.end());
        return rep;
    }
    if (name == "moments") return run_moments(seed);
    if (name == "all") {
        VerificationReport all;
        all.suite = "all";
        all.seed = seed;
        for (const char* s : {"normalization", "oracles", "pde", "identities", "moments"}) {
            auto r = run_suite(s, seed);
            all.checks.insert(all.checks.end(), r.checks.begin(), r.checks.end());
        }
        return all;
    }
    throw std::invalid_argument("run_suite: unknown suite '" + name + "'");
}

// test -> anchor coverage of the identity-bearing checks
inline std::vector<std::pair<std::string, std::string>> coverage_table()
{
    return {
        {"ks.wrty", "wrty"},
        {"ks.qzc", "dist:qzc"},
        {"ks.lamperti.nu0.5", "eqBella"},
        {"ks.fpt-ratio", "ratio of two independent first-passage times"},
        {"ks.s12_fpt", "lap:tSub"},
        {"lap.ifpt.n2.l1.", "qqqL"},
        {"mom.mv", "mV"},
        {"lap.rtg", "rTg"},
        {"mc.qazl.t1.", "qazL"},
        {"mom.ir.g2.m1", "momentsIR"},
        {"mom.baf.mu0.5", "mu-moments"},
        {"mc.slowdown", "slow-down integral"},
        {"quad.ibm-connection", "IBM connection remark"},
        {"mc.p2-bessel-expectation", "p2 Bessel-expectation form"},
        {"probe.j3.mass", "dist:J3"},
        {"mi.grid81", "formula:K"},
        {"fox.grid60", "asdfgh"},
        {"mellin.ib.eta2.0", "mellJJ"},
        {"drift.mu0limit", "K_nu asymptotic"},
    };
}

} // namespace besselsub::vfy
