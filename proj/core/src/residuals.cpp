#include "ihg/residuals.hpp"

#include <algorithm>
#include <cmath>

#include "ihg/weyl_generators.hpp"

namespace ihg {

SeriesAction applyOperator(const NumericOperator &op, const TruncatedSeries &series)
{
    if (op.cols() != series.cols()) {
        throw DomainError("applyOperator: operator and series differ in n");
    }
    const int n = series.cols();
    SeriesAction out{series.emptyLike(series.order(), series.reliableOrder()), {}};
    int reliable = series.reliableOrder();
    for (const auto &[mono, c] : op.terms()) {
        TruncatedSeries t = series;
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < n; ++j) {
                for (int r = 0; r < mono.d(i, j); ++r) {
                    t = applyPartial(t, i, j);
                }
            }
        }
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < n; ++j) {
                for (int r = 0; r < mono.x(i, j); ++r) {
                    t = multiplyX(t, i, j);
                }
            }
        }
        t *= c;
        reliable = std::min(reliable, t.reliableOrder());
        for (const auto &[k, v] : t.terms()) {
            out.scale[k] += std::abs(v);
        }
        out.value += t;
    }
    out.value.setReliableOrder(reliable);
    return out;
}

std::vector<SystemEquation> systemEquations(const SystemParams &p)
{
    const int n = p.n;
    const std::vector<Complex> vals = p.symbolValues();
    std::vector<SystemEquation> eqs;
    for (int i = 0; i < n; ++i) {
        eqs.push_back({"euler[" + std::to_string(i + 1) + "]", "euler", substitute(zOp(n, i), vals)});
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            eqs.push_back({"toric[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]", "toric",
                           substitute(boxOp(n, i, j), vals)});
        }
    }
    eqs.push_back({"inhomogeneous", "inhomogeneous", substitute(zSumOp(n), vals)});
    return eqs;
}

namespace {

void finish(ResidualReport &report)
{
    report.pass = std::all_of(report.entries.begin(), report.entries.end(), [](const auto &e) { return e.pass; });
}

} // namespace

ResidualReport verifySeriesResiduals(const SystemParams &p, const TruncatedSeries &f, Inhomogeneity rhs, double tol)
{
    p.validate();
    if (f.cols() != p.n) {
        throw DomainError("verifySeriesResiduals: series and parameters differ in n");
    }
    ResidualReport report;
    report.tolerance = tol;
    report.reliableOrder = f.reliableOrder();
    for (const SystemEquation &eq : systemEquations(p)) {
        SeriesAction act = applyOperator(eq.op, f);
        if (eq.family == "inhomogeneous" && rhs == Inhomogeneity::BoundaryTerm) {
            const TruncatedSeries g = boundarySeries(p, f.order());
            if (!(g.base() == f.base()) || !(g.grading() == f.grading())) {
                throw DomainError("verifySeriesResiduals: boundary expansion lives on a different support");
            }
            for (const auto &[k, v] : g.terms()) {
                act.scale[k] += std::abs(v);
            }
            TruncatedSeries gs = g;
            gs.setReliableOrder(act.value.reliableOrder());
            act.value -= gs;
        }
        const int reliable = act.value.reliableOrder();
        report.reliableOrder = std::min(report.reliableOrder, reliable);

        ResidualEntry e;
        e.equation = eq.name;
        e.family = eq.family;
        for (const auto &[k, s] : act.scale) {
            if (act.value.grade(k) > reliable) {
                continue;
            }
            ++e.comparedTerms;
            const double r = std::abs(act.value.coefficient(k));
            e.maxAbs = std::max(e.maxAbs, r);
            e.maxRelative = std::max(e.maxRelative, s > 0.0 ? r / s : r);
        }
        e.pass = e.maxRelative <= tol;
        report.entries.push_back(std::move(e));
    }
    finish(report);
    return report;
}

ResidualReport verifyIntegralResiduals(const SystemParams &p, const std::vector<Point> &samples, double quadTol,
                                       double tol)
{
    ResidualReport report;
    report.tolerance = tol;
    for (const SystemEquation &eq : systemEquations(p)) {
        ResidualEntry e;
        e.equation = eq.name;
        e.family = eq.family;
        for (const Point &x : samples) {
            const IntegralValue lhs = integrateOperatorOnPhi(p, eq.op, x, quadTol);
            Complex target;
            if (eq.family == "inhomogeneous") {
                target = boundaryTerm(p, x);
            }
            const double r = std::abs(lhs.value - target);
            const double scale = std::max({std::abs(target), std::abs(lhs.value), 1.0});
            e.maxAbs = std::max(e.maxAbs, r);
            e.maxRelative = std::max(e.maxRelative, r / scale);
            ++e.comparedTerms;
        }
        e.pass = e.maxRelative <= tol;
        report.entries.push_back(std::move(e));
    }
    finish(report);
    return report;
}

} // namespace ihg
