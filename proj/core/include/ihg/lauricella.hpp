#pragma once

#include <string>
#include <vector>

#include "ihg/matrix.hpp"

namespace ihg {

struct FDParams {
    Complex a;
    std::vector<Complex> b;
    Complex c;
};

struct FDResult {
    Complex value;
    // |S_K - S_{K-1}|: contribution of the last graded shell.
    double lastShellDelta = 0.0;
    // Last two shells contribute less than 1e-12 relative to |value|.
    bool converged = false;
    std::vector<std::string> warnings;
};

/// Lauricella F_D(a; b_1..b_n; c; z_1..z_n) summed over all |m| <= K.
///
/// Terms are generated shell by shell from the ratio
///   coeff(m + e_i) / coeff(m) = (a + |m|)(b_i + m_i) z_i / ((c + |m|)(m_i + 1))
/// and accumulated in graded lexicographic order. Throws PoleError when c + j = 0
/// for some 0 <= j <= K. A warning is attached when some |z_i| >= 1.
FDResult evalFD(const FDParams &p, const std::vector<Complex> &z, int K);

} // namespace ihg
