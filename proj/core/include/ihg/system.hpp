#pragma once

#include <string>
#include <vector>

#include "ihg/matrix.hpp"
#include "ihg/power_product.hpp"
#include "ihg/quadrature.hpp"
#include "ihg/truncated_series.hpp"
#include "ihg/weyl_operator.hpp"

namespace ihg {

/// Parameters of the incomplete system: alpha_1..alpha_n, gamma and the endpoints
/// a, b of the integration segment. beta = (alpha_1, ..., alpha_n, -gamma - 1) and
/// delta = -gamma - 1.
struct SystemParams {
    int n = 0;
    std::vector<Complex> alpha;
    Complex gamma;
    Complex a;
    Complex b;

    Complex delta() const { return -gamma - 1.0; }
    std::vector<Complex> beta() const;
    // Symbol values (alpha_1..alpha_n, delta) for ParamPoly substitution.
    std::vector<Complex> symbolValues() const;
    // Throws DomainError on size mismatch or NaN entries.
    void validate() const;

    static SystemParams fromDelta(std::vector<Complex> alpha, Complex delta, Complex a, Complex b);
};

/// The (n+1) x 2n matrix A: rows 0..n-1 have ones in columns 2i, 2i+1 (0-based);
/// the last row is (0, 1, 0, 1, ..., 0, 1). Column 2k is a_{1k}, column 2k+1 is a_{2k}.
struct AMatrix {
    int n = 0;
    std::vector<std::vector<int>> rows;

    int operator()(int r, int c) const { return rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }
    std::vector<int> column(int c) const;
    // Column index of variable x_{ij} (0-based).
    static int columnOf(int i, int j) { return 2 * j + i; }
    // A * vec(s) with vec pairing entry (i, j) to column columnOf(i, j).
    std::vector<Complex> apply(const Mat2xN<Complex> &s) const;
    std::vector<int> apply(const ExponentOffset &k) const;
    // |det| of a maximal minor equals 1, i.e. the columns span Z^{n+1}.
    bool columnsSpanLattice() const;
};

AMatrix buildA(int n);

/// Euler operators E_r - beta_r read off the rows of A, with symbolic beta.
WeylOperator eulerRowOperator(const AMatrix &A, int row);

PowerProductContext<Complex> numericContext(const SystemParams &p);

/// g(t, x) = t^{gamma+1} prod_k (x_{1k} + x_{2k} t)^{alpha_k}, principal branch.
/// Throws BranchError when a non-integer power meets the cut (-inf, 0].
Complex boundaryFunction(const SystemParams &p, Complex t, const Point &x);

/// [g(t, x)]_{t=a}^{t=b}
Complex boundaryTerm(const SystemParams &p, const Point &x);

struct SeriesValue {
    Complex value;
    int reliableOrder = 0;
    bool converged = false;
    std::vector<std::string> warnings;
};

/// F(beta; x) = x_1^alpha [ b^{gamma+1}/(gamma+1) F_D(gamma+1; -alpha; gamma+2; -x_2 b / x_1)
///                        - a^{gamma+1}/(gamma+1) F_D(gamma+1; -alpha; gamma+2; -x_2 a / x_1) ]
/// Throws PoleError when gamma is a negative integer. Warns outside U_0.
SeriesValue evalF(const SystemParams &p, const Point &x, int K);

/// c_m = (-1)^{|m|} (-alpha)_m (b^{gamma+|m|+1} - a^{gamma+|m|+1}) / ((gamma+|m|+1) (1)_m)
Complex particularCoefficient(const SystemParams &p, const MultiIndex &m);

/// F as a truncated series: base exponent (alpha; 0), offsets (-m; m), grading on row 2.
TruncatedSeries particularSeries(const SystemParams &p, int K);

/// Binomial expansion of [g]_a^b = [t^{gamma+1} x_1^alpha prod (1 + x_{2k} t / x_{1k})^{alpha_k}]_a^b
/// on the same support as particularSeries; built from one-variable binomial series.
TruncatedSeries boundarySeries(const SystemParams &p, int K);

/// Largest |x_{2k}/x_{1k}| * max(|a|, |b|); the point lies in U_0 iff this is < 1.
double u0Radius(const SystemParams &p, const Point &x);

struct IntegralValue {
    Complex value;
    double errorEstimate = 0.0;
    int intervals = 0;
    bool converged = false;
    std::vector<std::string> warnings;
};

/// Phi(beta; x) = integral_a^b t^gamma prod (x_{1k}+x_{2k}t)^{alpha_k} dt along the segment.
IntegralValue evalPhi(const SystemParams &p, const Point &x, double tol);

/// integral_a^b (op applied to the integrand of Phi) dt, derivatives taken in closed form.
IntegralValue integrateOperatorOnPhi(const SystemParams &p, const NumericOperator &op, const Point &x, double tol);

/// Integral of an arbitrary power-product sum over the segment.
IntegralValue integratePowerProducts(const SystemParams &p, const PowerProductSum<Complex> &terms, const Point &x,
                                     double tol);

} // namespace ihg
