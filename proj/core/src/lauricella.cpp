#include "ihg/lauricella.hpp"

#include <cmath>

#include "ihg/multi_index.hpp"

namespace ihg {

FDResult evalFD(const FDParams &p, const std::vector<Complex> &z, int K)
{
    const int n = static_cast<int>(p.b.size());
    if (static_cast<int>(z.size()) != n) {
        throw DomainError("evalFD: b and z differ in length");
    }
    if (K < 0) {
        throw DomainError("evalFD: negative truncation order");
    }
    for (int j = 0; j <= K; ++j) {
        if (p.c + static_cast<double>(j) == Complex{}) {
            throw PoleError("evalFD: (c)_|m| vanishes at |m| = " + std::to_string(j));
        }
    }
    FDResult res;
    for (int i = 0; i < n; ++i) {
        if (std::abs(z[static_cast<std::size_t>(i)]) >= 1.0) {
            res.warnings.push_back("z_" + std::to_string(i + 1) + " outside the unit disk; series may diverge");
        }
    }

    std::vector<Complex> shellSums(static_cast<std::size_t>(K) + 1);
    walkShells<Complex>(
        n, K, Complex(1.0, 0.0),
        [&](const MultiIndex &m, const Complex &coeff, int i) {
            const double norm = m.norm();
            const double mi = m[i];
            return coeff * (p.a + norm) * (p.b[static_cast<std::size_t>(i)] + mi) * z[static_cast<std::size_t>(i)] /
                   ((p.c + norm) * (mi + 1.0));
        },
        [&](const MultiIndex &m, const Complex &coeff) { shellSums[static_cast<std::size_t>(m.norm())] += coeff; });

    for (const Complex &s : shellSums) {
        res.value += s;
    }
    res.lastShellDelta = std::abs(shellSums.back());
    const double tail = K >= 1 ? std::abs(shellSums[static_cast<std::size_t>(K)]) +
                                     std::abs(shellSums[static_cast<std::size_t>(K) - 1])
                               : std::abs(shellSums.back());
    res.converged = tail <= 1e-12 * std::max(std::abs(res.value), 1e-300) || tail == 0.0;
    return res;
}

} // namespace ihg
