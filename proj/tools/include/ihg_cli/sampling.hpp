#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ihg/matrix.hpp"

namespace ihg::cli {

/// Seeded source of doubles in [lo, hi); same stream on every platform.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}
    double uniform(double lo, double hi);

private:
    std::mt19937_64 rng_;
};

/// Real positive point in U_0: x_{1k} in [0.5, 2), |x_{2k}/x_{1k}| < fraction / max(|a|, |b|).
Point samplePointU0(int n, Complex a, Complex b, Sampler &s, double fraction = 0.5);

/// Real positive point in sigma(U): ratios increase along sigma with relative gaps of at least minGap.
Point samplePointSigmaU(const std::vector<int> &sigma, Complex a, Complex b, Sampler &s, double fraction = 0.5,
                        double minGap = 0.1);

std::vector<Point> samplePointsU0(int n, Complex a, Complex b, int count, std::uint64_t seed);

} // namespace ihg::cli
