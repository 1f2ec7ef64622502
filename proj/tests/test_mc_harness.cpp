#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "besselsub/laws.hpp"
#include "besselsub/mc_harness.hpp"

using namespace besselsub;
using Catch::Approx;
using sim::ProcessKind;

TEST_CASE("one-sample KS: calibration, consistency rate, power")
{
    // folded Cauchy via its analytic inverse CDF: r = t tan(pi u / 2)
    auto draw = [](std::uint64_t seed, std::size_t n) {
        sim::Rng rng(seed);
        std::vector<double> v(n);
        for (auto& x : v) x = std::tan(0.5 * M_PI * rng.uniform_pos());
        return v;
    };
    auto cdf1 = [](double r) { return 2.0 / M_PI * std::atan(r); };
    const auto big = draw(101, 100000);
    CHECK(mc::ks_one_sample(big, cdf1, "folded-cauchy").p_value > 0.01);
    // statistic shrinks like n^{-1/2}
    const double d1 = mc::ks_one_sample(draw(102, 10000), cdf1).statistic;
    const double d2 = mc::ks_one_sample(draw(102, 1000000), cdf1).statistic;
    const double slope = std::log(d2 / d1) / std::log(100.0);
    CHECK(slope < -0.2);
    CHECK(slope > -0.8);
    // power: gamma = 2 samples against the gamma = 3 CDF must be rejected hard
    sim::ProcessSpec s;
    s.kind = ProcessKind::BesselAtFPT;
    s.gamma = 2.0;
    const auto batch = sim::sample_batch(s, 103, 100000);
    const auto ks = mc::ks_one_sample(batch.values,
                                      [](double r) { return dens::bessel_at_fpt_cdf(3.0, r, 1.0); }, "wrong-gamma");
    CHECK(ks.p_value < 1e-6);
    // data validation
    std::vector<double> bad(200, 0.5);
    bad[7] = NAN;
    CHECK_THROWS_AS(mc::ks_one_sample(bad, cdf1), std::invalid_argument);
    CHECK_THROWS_AS(mc::ks_one_sample(std::vector<double>(50, 0.5), cdf1), std::invalid_argument);
}

TEST_CASE("two-sample KS")
{
    sim::ProcessSpec s;
    s.kind = ProcessKind::FPT;
    const auto a = sim::sample_batch(s, 7, 5000);
    const auto b = sim::sample_batch(s, 7, 5000);
    CHECK(mc::ks_two_sample(a, b).statistic == 0.0);
    const auto c = sim::sample_batch(s, 8, 5000);
    CHECK(mc::ks_two_sample(a, c).p_value > 1e-4);
}

TEST_CASE("kolmogorov distribution basics")
{
    CHECK(mc::kolmogorov_q(0.02) == Approx(1.0));
    CHECK(mc::kolmogorov_q(1.0) == Approx(0.26999967).epsilon(1e-5));
    CHECK(mc::kolmogorov_q(2.0) < 1e-3);
    CHECK(mc::kolmogorov_q(0.5) > mc::kolmogorov_q(0.8));
}

TEST_CASE("moment estimation and refusal")
{
    sim::ProcessSpec s;
    s.kind = ProcessKind::BesselAtFPT;
    s.gamma = 1.0;
    const auto batch = sim::sample_batch(s, 9, 100000);
    CHECK_THROWS_AS(mc::moment_estimate(batch, 1.0), std::domain_error); // Cauchy tail
    const auto est = mc::moment_estimate(batch, 0.5);
    CHECK(est.std_error > 0.0);
    CHECK(est.estimate == Approx(dens::bessel_at_fpt_mu_moment(1.0, 0.5, 1.0)).margin(4.0 * est.std_error));
    // iterated FPT has only 2^{-n} of a moment
    sim::ProcessSpec it;
    it.kind = ProcessKind::IteratedFPT;
    it.depth = 2;
    const auto b2 = sim::sample_batch(it, 10, 1000);
    CHECK_THROWS_AS(mc::moment_estimate(b2, 0.3), std::domain_error);
    CHECK_NOTHROW(mc::moment_estimate(b2, 0.2));
}
