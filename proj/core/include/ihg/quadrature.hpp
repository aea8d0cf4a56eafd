#pragma once

#include <functional>

#include "ihg/matrix.hpp"

namespace ihg {

struct QuadratureOptions {
    double absTol = 1e-9;
    int maxIntervals = 4000;
    // Grade the mesh towards u = 0 / u = 1 with u = v^4 (resp. 1 - (1-v)^4).
    bool gradeStart = false;
    bool gradeEnd = false;
};

struct QuadratureResult {
    Complex value;
    double errorEstimate = 0.0;
    int intervals = 0;
    bool converged = false;
};

/// Globally adaptive Gauss-Kronrod (7, 15) integration of f along the straight
/// segment from a to b: integral_0^1 f(a + (b - a) u) (b - a) du. The interval with
/// the largest error estimate is bisected until the summed estimate is below
/// absTol or maxIntervals is reached.
QuadratureResult integrateSegment(const std::function<Complex(Complex)> &f, Complex a, Complex b,
                                  const QuadratureOptions &opts = {});

} // namespace ihg
