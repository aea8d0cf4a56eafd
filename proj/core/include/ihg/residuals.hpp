#pragma once

#include <map>
#include <string>
#include <vector>

#include "ihg/system.hpp"
#include "ihg/truncated_series.hpp"
#include "ihg/weyl_operator.hpp"

namespace ihg {

/// op applied to a series term by term (derivatives, then x-multiplication), with the
/// sum of |contributions| per output offset as a cancellation-aware scale.
struct SeriesAction {
    TruncatedSeries value;
    std::map<ExponentOffset, double> scale;
};

SeriesAction applyOperator(const NumericOperator &op, const TruncatedSeries &series);

struct ResidualEntry {
    std::string equation; // "euler[i]", "toric[i,j]", "inhomogeneous" (1-based indices)
    std::string family;   // "euler", "toric", "inhomogeneous"
    double maxAbs = 0.0;
    double maxRelative = 0.0;
    int comparedTerms = 0; // series mode: coefficients compared; point mode: samples
    bool pass = false;
};

struct ResidualReport {
    std::vector<ResidualEntry> entries;
    int reliableOrder = 0;
    double tolerance = 0.0;
    bool pass = false;
};

/// Right-hand side of (sum theta_{2i} + gamma + 1) f: the boundary term for F, zero for Psi.
enum class Inhomogeneity { BoundaryTerm, Zero };

/// The z_i, box(i, j) and z equations of the system, numerically substituted.
/// Homogeneous ones first, in the order euler[1..n], toric[i<j], then the inhomogeneous one.
struct SystemEquation {
    std::string name;
    std::string family;
    NumericOperator op;
};
std::vector<SystemEquation> systemEquations(const SystemParams &p);

/// Coefficientwise residuals of a series solution, compared up to the reliable order of
/// each residual. The inhomogeneous equation is compared term-for-term against
/// boundarySeries(p, order) (or zero).
ResidualReport verifySeriesResiduals(const SystemParams &p, const TruncatedSeries &f, Inhomogeneity rhs,
                                     double tol = 1e-12);

/// Pointwise residuals of Phi: each operator is applied to the integrand in closed form
/// and integrated; the inhomogeneous equation is compared with [g]_a^b.
ResidualReport verifyIntegralResiduals(const SystemParams &p, const std::vector<Point> &samples, double quadTol,
                                       double tol = 1e-7);

} // namespace ihg
