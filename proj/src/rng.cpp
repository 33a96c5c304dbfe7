#include "lrb/rng.hpp"

#include <cmath>
#include <numbers>

namespace lrb {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

}  // namespace

std::uint64_t split_seed(std::uint64_t master, std::uint64_t stream) {
    return splitmix64(master ^ ((stream + 1) * 0x9E3779B97F4A7C15ull));
}

std::size_t Rng::uniform_index(std::size_t n) {
    if (n <= 1) return 0;
    const std::uint64_t bound = n;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return static_cast<std::size_t>(x % bound);
}

double Rng::normal() {
    double u1 = uniform01();
    const double u2 = uniform01();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
}

std::vector<double> Rng::dirichlet_uniform(std::size_t d) {
    std::vector<double> e(d);
    double sum = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
        e[i] = -std::log1p(-uniform01());
        sum += e[i];
    }
    if (sum <= 0.0) {
        for (auto& x : e) x = 1.0 / static_cast<double>(d);
        return e;
    }
    for (auto& x : e) x /= sum;
    return e;
}

std::vector<double> Rng::simplex_point(std::size_t d) {
    // A uniform point of the closed corner simplex is the first d coordinates
    // of a uniform point of the (d+1)-dimensional probability simplex.
    std::vector<double> p = dirichlet_uniform(d + 1);
    p.pop_back();
    return p;
}

}  // namespace lrb
