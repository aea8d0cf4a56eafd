#include "ihg_cli/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ihg::cli {

double Sampler::uniform(double lo, double hi)
{
    const double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

namespace {

double ratioBound(Complex a, Complex b, double fraction)
{
    const double tmax = std::max(std::abs(a), std::abs(b));
    return tmax > 0.0 ? fraction / tmax : fraction;
}

} // namespace

Point samplePointU0(int n, Complex a, Complex b, Sampler &s, double fraction)
{
    const double bound = ratioBound(a, b, fraction);
    Point x(n);
    for (int k = 0; k < n; ++k) {
        x(0, k) = s.uniform(0.5, 2.0);
        x(1, k) = x(0, k) * s.uniform(0.0, bound);
    }
    return x;
}

Point samplePointSigmaU(const std::vector<int> &sigma, Complex a, Complex b, Sampler &s, double fraction,
                        double minGap)
{
    const int n = static_cast<int>(sigma.size());
    const double bound = ratioBound(a, b, fraction);
    // increasing ratios r_0 < r_1 < ... with r_{j+1} >= r_j (1 + minGap)
    std::vector<double> r(static_cast<std::size_t>(n));
    double top = bound;
    for (int j = n - 1; j >= 0; --j) {
        r[static_cast<std::size_t>(j)] = s.uniform(0.3, 1.0) * top;
        top = r[static_cast<std::size_t>(j)] / (1.0 + minGap);
    }
    Point x(n);
    for (int j = 0; j < n; ++j) {
        const int col = sigma[static_cast<std::size_t>(j)];
        x(0, col) = s.uniform(0.5, 2.0);
        x(1, col) = x(0, col) * r[static_cast<std::size_t>(j)];
    }
    return x;
}

std::vector<Point> samplePointsU0(int n, Complex a, Complex b, int count, std::uint64_t seed)
{
    Sampler s(seed);
    std::vector<Point> pts;
    for (int i = 0; i < count; ++i) {
        pts.push_back(samplePointU0(n, a, b, s));
    }
    return pts;
}

} // namespace ihg::cli
