#include "ihg/system.hpp"

#include <algorithm>
#include <cmath>

#include "ihg/lauricella.hpp"
#include "ihg/pochhammer.hpp"
#include "ihg/weyl_generators.hpp"

namespace ihg {

namespace {

bool isNaN(Complex z)
{
    return std::isnan(z.real()) || std::isnan(z.imag());
}

// True if the open segment (p0, p1), or an endpoint that is a negative real,
// meets the cut (-inf, 0]. Endpoints equal to 0 are endpoint singularities, not cut hits.
bool segmentMeetsCut(Complex p0, Complex p1)
{
    auto onCut = [](Complex z) { return z.imag() == 0.0 && z.real() < 0.0; };
    if (onCut(p0) || onCut(p1)) {
        return true;
    }
    const double y0 = p0.imag();
    const double y1 = p1.imag();
    if (y0 == 0.0 && y1 == 0.0) {
        // on the real line: crossing zero strictly inside
        return (p0.real() < 0.0) != (p1.real() < 0.0) || (p0.real() == 0.0 && p1.real() < 0.0) ||
               (p1.real() == 0.0 && p0.real() < 0.0);
    }
    if ((y0 > 0.0 && y1 > 0.0) || (y0 < 0.0 && y1 < 0.0)) {
        return false;
    }
    const double u = y0 / (y0 - y1);
    if (u <= 0.0 || u >= 1.0) {
        return false;
    }
    const double re = p0.real() + (p1.real() - p0.real()) * u;
    return re <= 0.0;
}

void checkPowerBase(Complex base, Complex exponent, const char *what)
{
    if (isInteger(exponent)) {
        return;
    }
    if (base.imag() == 0.0 && base.real() < 0.0) {
        throw BranchError(std::string(what) + ": non-integer power of a negative real");
    }
}

} // namespace

std::vector<Complex> SystemParams::beta() const
{
    std::vector<Complex> b = alpha;
    b.push_back(delta());
    return b;
}

std::vector<Complex> SystemParams::symbolValues() const
{
    return beta();
}

void SystemParams::validate() const
{
    if (n < 1) {
        throw DomainError("SystemParams: n must be positive");
    }
    if (static_cast<int>(alpha.size()) != n) {
        throw DomainError("SystemParams: alpha must have n entries");
    }
    for (const Complex &z : alpha) {
        if (isNaN(z)) {
            throw DomainError("SystemParams: NaN in alpha");
        }
    }
    if (isNaN(gamma) || isNaN(a) || isNaN(b)) {
        throw DomainError("SystemParams: NaN parameter");
    }
}

SystemParams SystemParams::fromDelta(std::vector<Complex> alpha, Complex delta, Complex a, Complex b)
{
    SystemParams p;
    p.n = static_cast<int>(alpha.size());
    p.alpha = std::move(alpha);
    p.gamma = -delta - 1.0;
    p.a = a;
    p.b = b;
    return p;
}

std::vector<int> AMatrix::column(int c) const
{
    std::vector<int> col;
    for (const auto &r : rows) {
        col.push_back(r[static_cast<std::size_t>(c)]);
    }
    return col;
}

std::vector<Complex> AMatrix::apply(const Mat2xN<Complex> &s) const
{
    std::vector<Complex> out(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < n; ++j) {
                out[r] += static_cast<double>(rows[r][static_cast<std::size_t>(columnOf(i, j))]) * s(i, j);
            }
        }
    }
    return out;
}

std::vector<int> AMatrix::apply(const ExponentOffset &k) const
{
    std::vector<int> out(rows.size(), 0);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < n; ++j) {
                out[r] += rows[r][static_cast<std::size_t>(columnOf(i, j))] * k(i, j);
            }
        }
    }
    return out;
}

bool AMatrix::columnsSpanLattice() const
{
    // Columns a_{11}, a_{21}-a_{11}, a_{12}, ..., a_{1n} form the unit basis up to order:
    // a_{1k} = e_k and a_{2k} - a_{1k} = e_{n+1}.
    if (n < 1) {
        return false;
    }
    std::vector<std::vector<int>> basis;
    for (int k = 0; k < n; ++k) {
        basis.push_back(column(columnOf(0, k)));
    }
    std::vector<int> last = column(columnOf(1, 0));
    for (std::size_t r = 0; r < last.size(); ++r) {
        last[r] -= basis[0][r];
    }
    basis.push_back(last);
    for (std::size_t c = 0; c < basis.size(); ++c) {
        for (std::size_t r = 0; r < basis.size(); ++r) {
            if (basis[c][r] != (r == c ? 1 : 0)) {
                return false;
            }
        }
    }
    return true;
}

AMatrix buildA(int n)
{
    if (n < 1) {
        throw DomainError("buildA: n must be positive");
    }
    AMatrix A;
    A.n = n;
    A.rows.assign(static_cast<std::size_t>(n) + 1, std::vector<int>(static_cast<std::size_t>(2 * n), 0));
    for (int i = 0; i < n; ++i) {
        A.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(2 * i)] = 1;
        A.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(2 * i + 1)] = 1;
        A.rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(2 * i + 1)] = 1;
    }
    return A;
}

WeylOperator eulerRowOperator(const AMatrix &A, int row)
{
    const int n = A.n;
    if (row < 0 || row > n) {
        throw DomainError("eulerRowOperator: row out of range");
    }
    WeylOperator E(n);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < n; ++j) {
            const int coeff = A(row, AMatrix::columnOf(i, j));
            if (coeff != 0) {
                E += WeylOperator::scalar(n, ParamPoly(coeff)) * eulerOp(n, i, j);
            }
        }
    }
    const ParamPoly beta = row < n ? ParamPoly::alpha(n, row) : ParamPoly::delta(n);
    return E - WeylOperator::scalar(n, beta);
}

PowerProductContext<Complex> numericContext(const SystemParams &p)
{
    return {p.n, p.alpha, p.gamma};
}

Complex boundaryFunction(const SystemParams &p, Complex t, const Point &x)
{
    p.validate();
    checkPowerBase(t, p.gamma + 1.0, "boundaryFunction");
    Complex v = principalPow(t, p.gamma + 1.0);
    for (int k = 0; k < p.n; ++k) {
        const Complex form = x(0, k) + x(1, k) * t;
        checkPowerBase(form, p.alpha[static_cast<std::size_t>(k)], "boundaryFunction");
        v *= principalPow(form, p.alpha[static_cast<std::size_t>(k)]);
    }
    return v;
}

Complex boundaryTerm(const SystemParams &p, const Point &x)
{
    if (p.a == p.b) {
        return {};
    }
    return boundaryFunction(p, p.b, x) - boundaryFunction(p, p.a, x);
}

double u0Radius(const SystemParams &p, const Point &x)
{
    const double tmax = std::max(std::abs(p.a), std::abs(p.b));
    double r = 0.0;
    for (int k = 0; k < p.n; ++k) {
        if (x(0, k) == Complex{}) {
            throw DomainError("x_{1k} must be nonzero");
        }
        r = std::max(r, std::abs(x(1, k) / x(0, k)) * tmax);
    }
    return r;
}

SeriesValue evalF(const SystemParams &p, const Point &x, int K)
{
    p.validate();
    if (x.cols() != p.n) {
        throw DomainError("evalF: point size mismatch");
    }
    const Complex g1 = p.gamma + 1.0;
    if (isInteger(p.gamma) && p.gamma.real() < 0.0) {
        throw PoleError("evalF: gamma is a negative integer");
    }
    SeriesValue out;
    out.reliableOrder = K;
    if (u0Radius(p, x) >= 1.0) {
        out.warnings.push_back("point outside U_0 (|x_2k/x_1k| max(|a|,|b|) >= 1); series may diverge");
    }
    if (p.a == p.b) {
        out.converged = true;
        return out;
    }

    FDParams fd;
    fd.a = g1;
    for (const Complex &al : p.alpha) {
        fd.b.push_back(-al);
    }
    fd.c = p.gamma + 2.0;

    auto endpoint = [&](Complex t) -> Complex {
        if (t == Complex{}) {
            if (g1.real() <= 0.0) {
                throw BranchError("evalF: t^{gamma+1} undefined at t = 0 for Re(gamma) <= -1");
            }
            return {};
        }
        std::vector<Complex> z;
        for (int k = 0; k < p.n; ++k) {
            z.push_back(-x(1, k) * t / x(0, k));
        }
        FDResult r = evalFD(fd, z, K);
        if (!r.converged) {
            out.warnings.push_back("F_D truncation at K=" + std::to_string(K) + " not converged at t endpoint");
        }
        return principalPow(t, g1) / g1 * r.value;
    };
    const Complex bracket = endpoint(p.b) - endpoint(p.a);
    Complex prefactor(1.0, 0.0);
    for (int k = 0; k < p.n; ++k) {
        prefactor *= principalPow(x(0, k), p.alpha[static_cast<std::size_t>(k)]);
    }
    out.value = prefactor * bracket;
    out.converged = std::none_of(out.warnings.begin(), out.warnings.end(),
                                 [](const std::string &w) { return w.rfind("F_D", 0) == 0; });
    return out;
}

Complex particularCoefficient(const SystemParams &p, const MultiIndex &m)
{
    const int norm = m.norm();
    const Complex e = p.gamma + static_cast<double>(norm) + 1.0;
    if (e == Complex{}) {
        throw PoleError("particularCoefficient: gamma + |m| + 1 = 0");
    }
    std::vector<Complex> negAlpha;
    for (const Complex &al : p.alpha) {
        negAlpha.push_back(-al);
    }
    double factorials = 1.0;
    for (int v : m.entries()) {
        for (int i = 2; i <= v; ++i) {
            factorials *= i;
        }
    }
    const double sign = norm % 2 == 0 ? 1.0 : -1.0;
    const Complex span = p.a == p.b ? Complex{} : principalPow(p.b, e) - principalPow(p.a, e);
    return sign * pochhammerMulti(negAlpha, m) * span / (e * factorials);
}

namespace {

Mat2xN<Complex> particularBase(const SystemParams &p)
{
    Mat2xN<Complex> base(p.n);
    for (int k = 0; k < p.n; ++k) {
        base(0, k) = p.alpha[static_cast<std::size_t>(k)];
    }
    return base;
}

ExponentOffset rowTwoGrading(int n)
{
    Mat2xN<int> w(n);
    for (int k = 0; k < n; ++k) {
        w(1, k) = 1;
    }
    return ExponentOffset(w);
}

ExponentOffset particularOffset(const MultiIndex &m)
{
    Mat2xN<int> k(m.size());
    for (int j = 0; j < m.size(); ++j) {
        k(0, j) = -m[j];
        k(1, j) = m[j];
    }
    return ExponentOffset(k);
}

} // namespace

TruncatedSeries particularSeries(const SystemParams &p, int K)
{
    p.validate();
    if (isInteger(p.gamma) && p.gamma.real() < 0.0) {
        throw PoleError("particularSeries: gamma is a negative integer");
    }
    TruncatedSeries s(particularBase(p), rowTwoGrading(p.n), K);
    for (const MultiIndex &m : gradedMultiIndices(p.n, K)) {
        s.add(particularOffset(m), particularCoefficient(p, m));
    }
    return s;
}

TruncatedSeries boundarySeries(const SystemParams &p, int K)
{
    p.validate();
    // binom(alpha_k, j) for j <= K, by the ratio (alpha - j) / (j + 1)
    std::vector<std::vector<Complex>> binom(static_cast<std::size_t>(p.n));
    for (int k = 0; k < p.n; ++k) {
        auto &row = binom[static_cast<std::size_t>(k)];
        row.push_back(1.0);
        for (int j = 0; j < K; ++j) {
            row.push_back(row.back() * (p.alpha[static_cast<std::size_t>(k)] - static_cast<double>(j)) /
                          static_cast<double>(j + 1));
        }
    }
    std::vector<Complex> span;
    for (int d = 0; d <= K; ++d) {
        const Complex e = p.gamma + 1.0 + static_cast<double>(d);
        span.push_back(p.a == p.b ? Complex{} : principalPow(p.b, e) - principalPow(p.a, e));
    }
    TruncatedSeries s(particularBase(p), rowTwoGrading(p.n), K);
    for (const MultiIndex &m : gradedMultiIndices(p.n, K)) {
        Complex c = span[static_cast<std::size_t>(m.norm())];
        for (int k = 0; k < p.n; ++k) {
            c *= binom[static_cast<std::size_t>(k)][static_cast<std::size_t>(m[k])];
        }
        s.add(particularOffset(m), c);
    }
    return s;
}

IntegralValue integratePowerProducts(const SystemParams &p, const PowerProductSum<Complex> &terms, const Point &x,
                                     double tol)
{
    p.validate();
    if (x.cols() != p.n || terms.cols() != p.n) {
        throw DomainError("integratePowerProducts: size mismatch");
    }
    IntegralValue out;
    if (p.a == p.b || terms.isZero()) {
        out.converged = true;
        return out;
    }
    const auto ctx = numericContext(p);

    double minTExp = 1e300;
    bool tInteger = true;
    for (const auto &term : terms.terms()) {
        const Complex e = p.gamma + 1.0 + static_cast<double>(term.tOffset);
        minTExp = std::min(minTExp, e.real());
        tInteger = tInteger && isInteger(e);
    }
    if (!tInteger && segmentMeetsCut(p.a, p.b)) {
        throw BranchError("integral: segment crosses the branch cut of t^gamma");
    }
    for (int k = 0; k < p.n; ++k) {
        bool formInteger = true;
        for (const auto &term : terms.terms()) {
            formInteger = formInteger && isInteger(p.alpha[static_cast<std::size_t>(k)] +
                                                   static_cast<double>(term.formOffsets[static_cast<std::size_t>(k)]));
        }
        const Complex f0 = x(0, k) + x(1, k) * p.a;
        const Complex f1 = x(0, k) + x(1, k) * p.b;
        if (!formInteger && segmentMeetsCut(f0, f1)) {
            throw BranchError("integral: x_1k + x_2k t crosses the branch cut on the segment");
        }
    }
    QuadratureOptions opts;
    opts.absTol = tol;
    const bool zeroStart = p.a == Complex{};
    const bool zeroEnd = p.b == Complex{};
    if ((zeroStart || zeroEnd) && minTExp <= -1.0) {
        throw DomainError("integral: non-integrable singularity of t^gamma at a zero endpoint");
    }
    if ((zeroStart || zeroEnd) && !tInteger) {
        if (minTExp < 0.5) {
            opts.gradeStart = zeroStart;
            opts.gradeEnd = zeroEnd;
        }
    }
    const QuadratureResult q =
        integrateSegment([&](Complex t) { return evaluate(ctx, terms, t, x); }, p.a, p.b, opts);
    out.value = q.value;
    out.errorEstimate = q.errorEstimate;
    out.intervals = q.intervals;
    out.converged = q.converged;
    if (!q.converged) {
        out.warnings.push_back("quadrature did not reach the requested tolerance");
    }
    return out;
}

IntegralValue evalPhi(const SystemParams &p, const Point &x, double tol)
{
    return integratePowerProducts(p, PowerProductSum<Complex>::integrand(p.n), x, tol);
}

IntegralValue integrateOperatorOnPhi(const SystemParams &p, const NumericOperator &op, const Point &x, double tol)
{
    const auto ctx = numericContext(p);
    return integratePowerProducts(p, applyG(ctx, op, PowerProductSum<Complex>::integrand(p.n)), x, tol);
}

} // namespace ihg
