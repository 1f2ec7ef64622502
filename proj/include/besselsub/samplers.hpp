#pragma once

#include <cmath>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "besselsub/distributions.hpp"
#include "besselsub/hyperbolic.hpp"
#include "besselsub/rng.hpp"

// Exact (or inverse-CDF-exact) seeded samplers for every random object in the
// toolkit, plus the composition rule that subordinates one process to another.

namespace besselsub::sim {

enum class ProcessKind {
    BesselAtT,
    IteratedBessel,
    JRSquaredClock,
    FPT,
    DriftedFPT,
    IteratedFPT,
    StableSubordinator,
    Cauchy,
    BesselAtFPT,
    BesselAtDriftedFPT,
    InverseCompositionTR,
    StableRatio,
    CauchyAtStable,
    HypDistanceH2,
    HypDistanceH3,
    HypH2AtFPT,
    HypH3AtFPT,
};

struct ProcessSpec {
    ProcessKind kind = ProcessKind::BesselAtT;
    double gamma = 2.0;  // Bessel order
    double mu = 0.0;     // drift
    double nu = 0.5;     // stable index
    int depth = 1;       // iteration depth n
    double t = 1.0;      // process time / level
    hyp::Convention convention = hyp::Convention::half;

    void validate() const
    {
        if (!(t > 0.0)) throw std::invalid_argument("ProcessSpec: t > 0 required");
        if (depth < 1) throw std::invalid_argument("ProcessSpec: depth >= 1 required");
        switch (kind) {
            case ProcessKind::BesselAtT:
            case ProcessKind::IteratedBessel:
            case ProcessKind::JRSquaredClock:
            case ProcessKind::BesselAtFPT:
            case ProcessKind::InverseCompositionTR:
                if (!(gamma > 0.0)) throw std::invalid_argument("ProcessSpec: gamma > 0 required");
                break;
            case ProcessKind::BesselAtDriftedFPT:
                if (!(gamma > 0.0)) throw std::invalid_argument("ProcessSpec: gamma > 0 required");
                [[fallthrough]];
            case ProcessKind::DriftedFPT:
                if (mu < 0.0)
                    throw std::invalid_argument("ProcessSpec: mu < 0 gives a defective first-passage law (not sampled)");
                break;
            case ProcessKind::StableSubordinator:
            case ProcessKind::StableRatio:
            case ProcessKind::CauchyAtStable:
                if (!(nu > 0.0) || !(nu < 1.0)) throw std::invalid_argument("ProcessSpec: 0 < nu < 1 required");
                break;
            default:
                break;
        }
    }

    bool real_valued() const
    {
        return kind == ProcessKind::Cauchy || kind == ProcessKind::CauchyAtStable;
    }
};

// ---- elementary samplers ---------------------------------------------------

// R^gamma(t) started at 0: R = sqrt(2 t G), G ~ Gamma(gamma/2, 1)
inline double sample_bessel_at(double gamma, double t, Rng& rng)
{
    return std::sqrt(2.0 * t * rng.gamma(0.5 * gamma));
}

// T_t = t^2 / N^2 (Levy law of the Brownian first passage through t)
inline double sample_fpt(double t, Rng& rng)
{
    double n;
    do { n = rng.normal(); } while (n == 0.0);
    return t * t / (n * n);
}

// drifted first passage T^mu_beta; inverse Gaussian for mu > 0
inline double sample_drifted_fpt(double beta, double mu, Rng& rng)
{
    if (mu < 0.0) throw std::invalid_argument("sample_drifted_fpt: mu < 0 gives a defective law");
    if (mu == 0.0) return sample_fpt(beta, rng);
    return rng.inverse_gaussian(beta / mu, beta * beta);
}

// one-sided stable with E e^{-lambda S} = e^{-t lambda^nu}
inline double sample_stable_subordinator(double nu, double t, Rng& rng)
{
    return std::pow(t, 1.0 / nu) * rng.stable_one_sided(nu);
}

// the hyperbolic-distance laws are sampled by tabulated inverse CDF
// (rejection from the flat-space Bessel proposal fails: sinh(eta)/eta is
// unbounded); tables are built once per spec and shared
class HypSampler {
public:
    HypSampler(int dim, double t, bool at_fpt, hyp::Convention conv)
    {
        auto pdf = [=](double e) -> double {
            if (e <= 0.0) return 0.0;
            if (at_fpt)
                return dim == 2 ? hyp::pj2_density(e, t) : hyp::pj3_density(e, t, conv);
            return dim == 2 ? hyp::p2_density(e, t, conv) : hyp::p3_density(e, t, conv);
        };
        const double scale = at_fpt ? (1.0 + t) : (1.0 + std::sqrt(t));
        table_ = std::make_unique<dens::TabulatedDistribution>(pdf, dens::Interval{0.0, INFINITY}, scale);
    }

    double draw(Rng& rng) const { return table_->quantile(rng.uniform()); }
    const dens::TabulatedDistribution& table() const { return *table_; }

private:
    std::unique_ptr<dens::TabulatedDistribution> table_;
};

// draws the outer process at time inner_draw
inline double compose(const ProcessSpec& outer, double inner_draw, Rng& rng)
{
    if (!(inner_draw >= 0.0)) throw std::invalid_argument("compose: inner time must be >= 0");
    ProcessSpec at = outer;
    at.t = std::max(inner_draw, 1e-300);
    switch (outer.kind) {
        case ProcessKind::BesselAtT: return sample_bessel_at(outer.gamma, at.t, rng);
        case ProcessKind::FPT: return sample_fpt(at.t, rng);
        case ProcessKind::DriftedFPT: return sample_drifted_fpt(at.t, outer.mu, rng);
        case ProcessKind::StableSubordinator: return sample_stable_subordinator(outer.nu, at.t, rng);
        case ProcessKind::Cauchy: return rng.cauchy(at.t);
        default: throw std::invalid_argument("compose: outer process must be a primitive sampler");
    }
}

// one draw from any ProcessSpec (hyperbolic laws need a prebuilt HypSampler)
inline double sample_one(const ProcessSpec& spec, Rng& rng, const HypSampler* hyp_sampler = nullptr)
{
    switch (spec.kind) {
        case ProcessKind::BesselAtT:
            return sample_bessel_at(spec.gamma, spec.t, rng);
        case ProcessKind::IteratedBessel:
            return sample_bessel_at(spec.gamma, std::max(sample_bessel_at(spec.gamma, spec.t, rng), 1e-300), rng);
        case ProcessKind::JRSquaredClock: {
            const double r = sample_bessel_at(spec.gamma, spec.t, rng);
            return sample_bessel_at(spec.gamma, std::max(r * r, 1e-300), rng);
        }
        case ProcessKind::FPT:
            return sample_fpt(spec.t, rng);
        case ProcessKind::DriftedFPT:
            return sample_drifted_fpt(spec.t, spec.mu, rng);
        case ProcessKind::IteratedFPT: {
            double level = spec.t;
            for (int i = 0; i < spec.depth; ++i) level = sample_fpt(level, rng);
            return level;
        }
        case ProcessKind::StableSubordinator:
            return sample_stable_subordinator(spec.nu, spec.t, rng);
        case ProcessKind::Cauchy:
            return rng.cauchy(spec.t);
        case ProcessKind::BesselAtFPT:
            return sample_bessel_at(spec.gamma, sample_fpt(spec.t, rng), rng);
        case ProcessKind::BesselAtDriftedFPT:
            return sample_bessel_at(spec.gamma, sample_drifted_fpt(spec.t, spec.mu, rng), rng);
        case ProcessKind::InverseCompositionTR:
            return sample_fpt(std::max(sample_bessel_at(spec.gamma, spec.t, rng), 1e-300), rng);
        case ProcessKind::StableRatio:
            return rng.stable_one_sided(spec.nu) / rng.stable_one_sided(spec.nu);
        case ProcessKind::CauchyAtStable:
            return rng.cauchy(sample_stable_subordinator(spec.nu, spec.t, rng));
        case ProcessKind::HypDistanceH2:
        case ProcessKind::HypDistanceH3:
        case ProcessKind::HypH2AtFPT:
        case ProcessKind::HypH3AtFPT:
            if (!hyp_sampler) throw std::invalid_argument("sample_one: hyperbolic spec requires a HypSampler");
            return hyp_sampler->draw(rng);
    }
    throw std::logic_error("sample_one: unhandled process kind");
}

// ---- batches -----------------------------------------------------------------

struct SampleBatch {
    ProcessSpec spec;
    std::uint64_t seed = 0;
    std::vector<double> values;

    std::size_t count() const { return values.size(); }
};

// Deterministic chunked generation: chunk c draws from the derived stream
// master ^ c, independent of any parallel scheduling.
inline SampleBatch sample_batch(const ProcessSpec& spec, std::uint64_t seed, std::size_t count)
{
    spec.validate();
    SampleBatch batch;
    batch.spec = spec;
    batch.seed = seed;
    batch.values.resize(count);
    std::unique_ptr<HypSampler> hs;
    switch (spec.kind) {
        case ProcessKind::HypDistanceH2: hs = std::make_unique<HypSampler>(2, spec.t, false, spec.convention); break;
        case ProcessKind::HypDistanceH3: hs = std::make_unique<HypSampler>(3, spec.t, false, spec.convention); break;
        case ProcessKind::HypH2AtFPT: hs = std::make_unique<HypSampler>(2, spec.t, true, spec.convention); break;
        case ProcessKind::HypH3AtFPT: hs = std::make_unique<HypSampler>(3, spec.t, true, spec.convention); break;
        default: break;
    }
    constexpr std::size_t kChunk = 1 << 16;
    for (std::size_t base = 0, chunk = 0; base < count; base += kChunk, ++chunk) {
        Rng rng = Rng::derive_stream(seed, chunk);
        const std::size_t hi = std::min(base + kChunk, count);
        for (std::size_t i = base; i < hi; ++i) batch.values[i] = sample_one(spec, rng, hs.get());
    }
    // support invariant: radial/FPT laws are nonnegative
    if (!spec.real_valued())
        for (double v : batch.values)
            if (!(v >= 0.0)) throw std::logic_error("sample_batch: negative draw from a nonnegative law");
    return batch;
}

} // namespace besselsub::sim
