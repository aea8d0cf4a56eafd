#include "ihg/syzygy.hpp"

#include <algorithm>

#include "ihg/system.hpp"
#include "ihg/weyl_generators.hpp"

namespace ihg {

SyzygyReport checkSyzygyConditions(int n, const PowerProductSum<ParamPoly> &last)
{
    if (n < 1 || last.cols() != n) {
        throw DomainError("checkSyzygyConditions: bad n");
    }
    const auto ctx = symbolicContext(n);
    const AMatrix A = buildA(n);
    const int rows = n + 1;
    std::vector<PowerProductSum<ParamPoly>> g(static_cast<std::size_t>(rows), PowerProductSum<ParamPoly>(n));
    g.back() = last;

    SyzygyReport report;
    report.n = n;
    for (int i = 0; i < rows; ++i) {
        for (int j = i + 1; j < rows; ++j) {
            const auto lhs = applyG(ctx, eulerRowOperator(A, i), g[static_cast<std::size_t>(j)]);
            const auto rhs = applyG(ctx, eulerRowOperator(A, j), g[static_cast<std::size_t>(i)]);
            const auto diff = (lhs - rhs).normalized();
            report.conditions.push_back({"syz1[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]", "syz1",
                                         diff.isZero(), static_cast<int>(diff.terms().size())});
        }
    }
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const WeylOperator box = boxOp(n, u, v);
            for (int i = 0; i < rows; ++i) {
                const auto r = applyG(ctx, box, g[static_cast<std::size_t>(i)]);
                report.conditions.push_back({"syz2[" + std::to_string(u + 1) + "," + std::to_string(v + 1) + "]g" +
                                                 std::to_string(i + 1),
                                             "syz2", r.isZero(), static_cast<int>(r.terms().size())});
            }
        }
    }
    auto allOf = [&](const std::string &kind) {
        return std::all_of(report.conditions.begin(), report.conditions.end(),
                           [&](const auto &c) { return c.kind != kind || c.pass; });
    };
    report.syz1 = allOf("syz1");
    report.syz2 = allOf("syz2");
    report.pass = report.syz1 && report.syz2;
    return report;
}

SyzygyReport checkSyzygyConditions(int n)
{
    return checkSyzygyConditions(n, PowerProductSum<ParamPoly>::boundaryFunction(n));
}

} // namespace ihg
