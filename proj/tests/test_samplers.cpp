#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>

#include "besselsub/laws.hpp"
#include "besselsub/mc_harness.hpp"
#include "besselsub/samplers.hpp"

using namespace besselsub;
using Catch::Approx;
using sim::ProcessKind;

TEST_CASE("bit-exact reproducibility and stream independence")
{
    sim::ProcessSpec s;
    s.kind = ProcessKind::BesselAtFPT;
    s.gamma = 2.0;
    const auto a = sim::sample_batch(s, 42, 70000); // crosses a chunk boundary
    const auto b = sim::sample_batch(s, 42, 70000);
    CHECK(a.values == b.values);
    const auto c = sim::sample_batch(s, 43, 70000);
    CHECK(a.values != c.values);
    // chunked layout: a longer run extends a shorter one
    const auto d = sim::sample_batch(s, 42, 1000);
    CHECK(std::equal(d.values.begin(), d.values.end(), a.values.begin()));
}

TEST_CASE("supports and spec validation")
{
    sim::ProcessSpec bad;
    bad.kind = ProcessKind::DriftedFPT;
    bad.mu = -1.0;
    CHECK_THROWS_AS(sim::sample_batch(bad, 1, 100), std::invalid_argument);
    bad.kind = ProcessKind::StableSubordinator;
    bad.mu = 0.0;
    bad.nu = 1.2;
    CHECK_THROWS_AS(sim::sample_batch(bad, 1, 100), std::invalid_argument);
    sim::ProcessSpec cauchy;
    cauchy.kind = ProcessKind::Cauchy;
    const auto batch = sim::sample_batch(cauchy, 7, 10000);
    CHECK(std::any_of(batch.values.begin(), batch.values.end(), [](double v) { return v < 0.0; }));
}

TEST_CASE("bessel sampler moments")
{
    sim::Rng rng(11);
    // gamma = 1: half-normal with mean sqrt(2t/pi)
    double mean = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) mean += sim::sample_bessel_at(1.0, 2.0, rng);
    mean /= n;
    CHECK(mean == Approx(std::sqrt(2.0 * 2.0 / M_PI)).margin(3.0 * std::sqrt(2.0) / std::sqrt(n)));
    // gamma = 2: E R^2 = 2t
    double m2 = 0.0;
    for (int i = 0; i < n; ++i) {
        const double r = sim::sample_bessel_at(2.0, 1.0, rng);
        m2 += r * r;
    }
    m2 /= n;
    CHECK(m2 == Approx(2.0).margin(3.0 * 2.0 / std::sqrt(n)));
    // the process starts at the origin
    CHECK(sim::sample_bessel_at(2.0, 1e-12, rng) < 1e-5);
}

TEST_CASE("first passage sampler against the slow-down integral")
{
    sim::ProcessSpec f;
    f.kind = ProcessKind::FPT;
    f.t = 1.0;
    const auto batch = sim::sample_batch(f, 5, 200000);
    double below = 0.0;
    for (double v : batch.values) below += (v <= 1.0);
    const double ref = dens::fpt_slowdown_probability(1.0);
    CHECK(below / batch.count() == Approx(ref).margin(3.0 * std::sqrt(ref * (1 - ref) / batch.count())));
    // KS against the analytic CDF
    laws::LawParams p;
    const auto law = laws::make_density("fpt", p);
    CHECK(mc::ks_one_sample(batch, law).p_value > 0.01);
}

TEST_CASE("drifted first passage: mean, Laplace transform, drift-free limit")
{
    sim::Rng rng(13);
    const int n = 200000;
    double mean = 0.0, lap = 0.0;
    for (int i = 0; i < n; ++i) {
        mean += sim::sample_drifted_fpt(1.0, 2.0, rng);
        lap += std::exp(-sim::sample_drifted_fpt(1.0, 1.0, rng));
    }
    mean /= n;
    lap /= n;
    CHECK(mean == Approx(0.5).margin(0.01));
    CHECK(lap == Approx(std::exp(1.0 - std::sqrt(3.0))).margin(0.005));
    CHECK_THROWS_AS(sim::sample_drifted_fpt(1.0, -0.1, rng), std::invalid_argument);
}

TEST_CASE("stable subordinator")
{
    sim::ProcessSpec s;
    s.kind = ProcessKind::StableSubordinator;
    s.nu = 0.5;
    s.t = 1.0;
    const auto a = sim::sample_batch(s, 17, 100000);
    sim::ProcessSpec f;
    f.kind = ProcessKind::FPT;
    f.t = 1.0 / std::sqrt(2.0);
    const auto b = sim::sample_batch(f, 18, 100000);
    CHECK(mc::ks_two_sample(a, b).p_value > 0.01);
    // Laplace check at nu = 0.7
    sim::Rng rng(19);
    double lap = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) lap += std::exp(-sim::sample_stable_subordinator(0.7, 1.0, rng));
    lap /= n;
    CHECK(lap == Approx(std::exp(-1.0)).margin(0.004));
}

TEST_CASE("composition identities by two-sample KS")
{
    // sqrt(T_{R^gamma(t^2)}) =d R^gamma(T_t)
    sim::ProcessSpec tr;
    tr.kind = ProcessKind::InverseCompositionTR;
    tr.gamma = 2.0;
    tr.t = 1.0;
    auto a = sim::sample_batch(tr, 21, 100000);
    for (auto& v : a.values) v = std::sqrt(v);
    sim::ProcessSpec baf;
    baf.kind = ProcessKind::BesselAtFPT;
    baf.gamma = 2.0;
    baf.t = 1.0;
    const auto b = sim::sample_batch(baf, 22, 100000);
    CHECK(mc::ks_two_sample(a, b).p_value > 0.01);
    // IteratedFPT(2) against the quadrature density
    sim::ProcessSpec it;
    it.kind = ProcessKind::IteratedFPT;
    it.depth = 2;
    const auto c = sim::sample_batch(it, 23, 100000);
    laws::LawParams p;
    p.n = 2;
    CHECK(mc::ks_one_sample(c, laws::make_density("iterated_fpt", p)).p_value > 0.01);
    // IteratedFPT(3) Laplace transform
    sim::ProcessSpec i3 = it;
    i3.depth = 3;
    const auto d = sim::sample_batch(i3, 24, 100000);
    const auto est = mc::functional_estimate(d.values, [](double x) { return std::exp(-x); });
    CHECK(est.estimate == Approx(dens::iterated_fpt_laplace(3, 1.0, 1.0)).margin(3.0 * est.std_error));
}

TEST_CASE("compose draws the outer process at the inner time")
{
    sim::Rng rng(31);
    sim::ProcessSpec outer;
    outer.kind = ProcessKind::BesselAtT;
    outer.gamma = 2.0;
    double m2 = 0.0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        const double r = sim::compose(outer, 0.5, rng);
        m2 += r * r;
    }
    CHECK(m2 / n == Approx(2.0 * 0.5).margin(0.02)); // E R^2 = 2 * inner time
    CHECK_THROWS_AS(sim::compose(outer, -1.0, rng), std::invalid_argument);
}

TEST_CASE("hyperbolic distance samplers")
{
    // dim 3: sample mean against the quadrature mean of p3
    sim::ProcessSpec h3;
    h3.kind = ProcessKind::HypDistanceH3;
    h3.t = 1.0;
    const auto batch = sim::sample_batch(h3, 33, 100000);
    const auto est = mc::functional_estimate(batch.values, [](double x) { return x; });
    const double ref = quad::integrate([](double e) { return e * hyp::p3_density(e, 1.0); }, 0.0, 60.0).value;
    CHECK(est.estimate == Approx(ref).margin(3.0 * est.std_error));
    // dim 2: KS against the CDF tabulated from the nested quadrature
    sim::ProcessSpec h2;
    h2.kind = ProcessKind::HypDistanceH2;
    h2.t = 1.0;
    const auto b2 = sim::sample_batch(h2, 34, 20000);
    laws::LawParams p;
    CHECK(mc::ks_one_sample(b2, laws::make_density("hyp2", p)).p_value > 0.01);
    // E sinh(R3)/R3 = e^{t/2} over plain Bessel-3 draws
    sim::ProcessSpec bes;
    bes.kind = ProcessKind::BesselAtT;
    bes.gamma = 3.0;
    bes.t = 1.0;
    const auto b3 = sim::sample_batch(bes, 35, 200000);
    const auto sh = mc::functional_estimate(b3.values, [](double x) { return x > 0 ? std::sinh(x) / x : 1.0; });
    CHECK(sh.estimate == Approx(std::exp(0.5)).margin(3.0 * sh.std_error));
}
