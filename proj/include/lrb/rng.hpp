#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace lrb {

/// Counter-based stream splitting: stream `k` of master seed `s` is obtained
/// by running SplitMix64 over `s xor (k + 1) * golden_gamma`. Streams derived
/// from the same master with different counters are independent for practical
/// purposes, and adding a new counter never perturbs existing streams.
std::uint64_t split_seed(std::uint64_t master, std::uint64_t stream);

/// Deterministic random stream. The engine is std::mt19937_64 (its output
/// sequence is pinned by the standard); all distributions are derived from
/// raw 64-bit draws here so results are reproducible across platforms and
/// standard-library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Stream `stream` of `master`, see split_seed().
    static Rng stream(std::uint64_t master, std::uint64_t stream) {
        return Rng(split_seed(master, stream));
    }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform on [0, 1), 53-bit resolution.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform on {0, ..., n-1}; unbiased via rejection.
    std::size_t uniform_index(std::size_t n);

    bool bernoulli(double p) { return uniform01() < p; }

    /// Standard normal via Box-Muller (no cached spare, so the draw count
    /// per call is fixed and the stream stays reproducible).
    double normal();

    /// Uniform point of the standard simplex S_d = {x >= 0, sum(x) <= 1}.
    std::vector<double> simplex_point(std::size_t d);

    /// Uniform point of the probability simplex {x >= 0, sum(x) = 1}.
    std::vector<double> dirichlet_uniform(std::size_t d);

private:
    std::mt19937_64 engine_;
};

}  // namespace lrb
