#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

// Seeded 64-bit generator with portable, bit-exact streams.
//
// Core generator is xoshiro256++ with its state expanded from the seed by
// splitmix64. Parallel sub-streams are derived by the rule
//   stream_i = Rng(master_seed ^ i)
// (the xor'd seed is pushed through the splitmix64 avalanche, so adjacent
// stream indices decorrelate). All variate transforms are implemented here
// rather than taken from <random>, whose distributions are not specified
// bit-exactly by the standard.

namespace besselsub::sim {

class Rng {
public:
    static constexpr const char* kAlgorithm = "xoshiro256++";

    explicit Rng(std::uint64_t seed) : seed_(seed)
    {
        std::uint64_t z = seed;
        for (auto& w : s_) {
            z += 0x9E3779B97F4A7C15ull;
            std::uint64_t t = z;
            t = (t ^ (t >> 30)) * 0xBF58476D1CE4E5B9ull;
            t = (t ^ (t >> 27)) * 0x94D049BB133111EBull;
            w = t ^ (t >> 31);
        }
    }

    static Rng derive_stream(std::uint64_t master_seed, std::uint64_t stream) { return Rng(master_seed ^ stream); }

    std::uint64_t seed() const { return seed_; }
    std::string algorithm() const { return kAlgorithm; }

    std::uint64_t next_u64()
    {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // uniform on (0, 1]; never returns 0 so logs are safe
    double uniform_pos() { return ((next_u64() >> 11) + 1) * 0x1.0p-53; }
    // uniform on [0, 1)
    double uniform() { return (next_u64() >> 11) * 0x1.0p-53; }

    double normal()
    {
        const double u1 = uniform_pos();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    double exponential() { return -std::log(uniform_pos()); }

    double cauchy(double scale) { return scale * std::tan(M_PI * (uniform_pos() - 0.5)); }

    // Gamma(shape, 1) by Marsaglia-Tsang squeeze; shape < 1 boosted via
    // Gamma(a) = Gamma(a+1) * U^{1/a}.
    double gamma(double shape)
    {
        if (!(shape > 0.0)) throw std::invalid_argument("Rng::gamma: shape must be positive");
        if (shape < 1.0) {
            const double g = gamma(shape + 1.0);
            return g * std::pow(uniform_pos(), 1.0 / shape);
        }
        const double d = shape - 1.0 / 3.0;
        const double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x, v;
            do {
                x = normal();
                v = 1.0 + c * x;
            } while (v <= 0.0);
            v = v * v * v;
            const double u = uniform_pos();
            if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
            if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
        }
    }

    // Inverse Gaussian with mean m and shape lambda (Michael-Schucany-Haas).
    double inverse_gaussian(double m, double lambda)
    {
        const double n = normal();
        const double y = n * n;
        const double x1 = m + m * m * y / (2.0 * lambda)
                          - m / (2.0 * lambda) * std::sqrt(4.0 * m * lambda * y + m * m * y * y);
        const double u = uniform_pos();
        return (u <= m / (m + x1)) ? x1 : m * m / x1;
    }

    // Positively skewed stable S_nu with E e^{-lambda S} = e^{-lambda^nu}
    // (Kanter's exact representation; computed in log space so the
    // nu -> 1 limit stays finite).
    double stable_one_sided(double nu)
    {
        if (!(nu > 0.0) || !(nu < 1.0)) throw std::invalid_argument("Rng::stable_one_sided: requires 0 < nu < 1");
        const double theta = M_PI * uniform_pos();
        const double w = exponential();
        const double log_a_pow = (nu * std::log(std::sin(nu * theta))
                                  + (1.0 - nu) * std::log(std::sin((1.0 - nu) * theta))
                                  - std::log(std::sin(theta))) / nu;
        return std::exp(log_a_pow - (1.0 - nu) / nu * std::log(w));
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    std::uint64_t seed_;
    std::array<std::uint64_t, 4> s_{};
};

} // namespace besselsub::sim
