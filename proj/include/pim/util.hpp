#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace pim {

// Neumaier-compensated accumulator. Free-energy traces are compared with an
// absolute slack of 1e-9, so the big reductions must not drift.
struct KahanSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double v) {
        const double t = sum + v;
        if (std::abs(sum) >= std::abs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    }
    double value() const { return sum + comp; }
};

// 0*log(0) := 0
inline double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

// Ties break toward the lowest index.
inline std::size_t argmax_lowest(std::span<const double> v) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] > v[best]) best = i;
    return best;
}

inline double log_sum_exp(std::span<const double> v) {
    double m = v[0];
    for (double x : v)
        if (x > m) m = x;
    if (!std::isfinite(m)) return m;
    double acc = 0.0;
    for (double x : v) acc += std::exp(x - m);
    return m + std::log(acc);
}

// In-place softmax of logits with max subtraction.
inline void softmax_inplace(std::span<double> logits) {
    double m = logits[0];
    for (double x : logits)
        if (x > m) m = x;
    double acc = 0.0;
    for (double& x : logits) {
        x = std::exp(x - m);
        acc += x;
    }
    for (double& x : logits) x /= acc;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Derives an independent RNG stream from a base seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    return splitmix64(splitmix64(seed) ^ splitmix64(stream));
}

// Plain Lloyd k-means, deterministic given the RNG state. Initial centers are
// sampled point indices; an emptied cluster is reseeded at the point farthest
// from its current center.
std::vector<int> kmeans_labels(const std::vector<std::vector<double>>& points, int k, int iters,
                               std::mt19937_64& rng,
                               std::vector<std::vector<double>>* centers_out = nullptr);

}  // namespace pim
