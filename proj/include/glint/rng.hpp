#pragma once

#include <cstdint>
#include <random>

namespace glint {

/// Deterministic random source. mt19937_64 output is fixed by the standard;
/// the distributions below are implemented here so results do not depend on
/// the standard library's (implementation-defined) distribution algorithms.
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    uint64_t next_u64() { return gen_(); }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() { return (gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via Box-Muller.
    double normal() {
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    double normal(double mu, double sigma) { return mu + sigma * normal(); }

    /// Exact Poisson sample: sequential inversion for small means,
    /// PTRS transformed-rejection (Hormann 1993) for large means.
    long poisson(double mu);

    /// Derive an independent stream (e.g. per frame) without consuming
    /// correlated state.
    Rng fork(uint64_t salt) {
        return Rng(gen_() ^ (0x9e3779b97f4a7c15ULL * (salt + 1)));
    }

private:
    std::mt19937_64 gen_;
};

} // namespace glint
