#include "ihg/contiguity.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "ihg/residuals.hpp"
#include "ihg/weyl_generators.hpp"

namespace ihg {

namespace {

struct RelationInfo {
    Relation relation;
    const char *name;
};

constexpr std::array<RelationInfo, 6> kRelations{{{Relation::Down1k, "down1k"},
                                                  {Relation::Up1k, "up1k"},
                                                  {Relation::Down2k, "down2k"},
                                                  {Relation::Up2k, "up2k"},
                                                  {Relation::UpEn1, "up-en1"},
                                                  {Relation::DownEn1, "down-en1"}}};

void checkK(int n, int k)
{
    if (k < 0 || k >= n) {
        throw DomainError("contiguity: k out of range");
    }
}

Complex alphaSum(const SystemParams &p)
{
    Complex s;
    for (const Complex &a : p.alpha) {
        s += a;
    }
    return s;
}

} // namespace

std::string relationName(Relation r)
{
    for (const auto &info : kRelations) {
        if (info.relation == r) {
            return info.name;
        }
    }
    throw DomainError("relationName: unknown relation");
}

std::optional<Relation> parseRelation(const std::string &s)
{
    for (const auto &info : kRelations) {
        if (s == info.name) {
            return info.relation;
        }
    }
    return std::nullopt;
}

const std::vector<Relation> &allRelations()
{
    static const std::vector<Relation> all{Relation::Down1k, Relation::Up1k,  Relation::Down2k,
                                           Relation::Up2k,   Relation::UpEn1, Relation::DownEn1};
    return all;
}

bool isComposite(Relation r)
{
    return r == Relation::UpEn1 || r == Relation::DownEn1;
}

SystemParams shiftedParams(const SystemParams &p, Shift s, int k)
{
    SystemParams q = p;
    auto moveAlpha = [&](double d) {
        checkK(p.n, k);
        q.alpha[static_cast<std::size_t>(k)] += d;
    };
    // delta = -gamma - 1, so delta += d is gamma -= d
    auto moveDelta = [&](double d) { q.gamma -= d; };
    switch (s) {
    case Shift::MinusA1k:
        moveAlpha(-1.0);
        break;
    case Shift::PlusA1k:
        moveAlpha(1.0);
        break;
    case Shift::MinusA2k:
        moveAlpha(-1.0);
        moveDelta(-1.0);
        break;
    case Shift::PlusA2k:
        moveAlpha(1.0);
        moveDelta(1.0);
        break;
    case Shift::MinusEn1:
        moveDelta(-1.0);
        break;
    case Shift::PlusEn1:
        moveDelta(1.0);
        break;
    }
    return q;
}

namespace {

NumericOperator up1k(const SystemParams &p, int k)
{
    const int n = p.n;
    using Op = NumericOperator;
    Op s(n);
    for (int i = 0; i < n; ++i) {
        if (i == k) {
            continue;
        }
        s += (Op::x(n, 0, i) * Op::x(n, 1, k) - Op::x(n, 0, k) * Op::x(n, 1, i)) * Op::d(n, 1, i);
    }
    s += Op::scalar(n, alphaSum(p)) * Op::x(n, 0, k);
    return s;
}

NumericOperator up2k(const SystemParams &p, int k)
{
    const int n = p.n;
    using Op = NumericOperator;
    Op s(n);
    Op inner = Op::scalar(n, p.alpha[static_cast<std::size_t>(k)]);
    for (int i = 0; i < n; ++i) {
        if (i == k) {
            continue;
        }
        s += Op::x(n, 0, k) * Op::x(n, 1, i) * Op::d(n, 0, i);
        inner += Op::x(n, 1, i) * Op::d(n, 1, i);
    }
    s += inner * Op::x(n, 1, k);
    return s;
}

} // namespace

ShiftOperator buildShiftOperator(Relation r, int k, const SystemParams &beta)
{
    beta.validate();
    checkK(beta.n, k);
    const int n = beta.n;
    ShiftOperator s{r, k, NumericOperator(n)};
    switch (r) {
    case Relation::Down1k:
        s.op = NumericOperator::d(n, 0, k);
        break;
    case Relation::Down2k:
        s.op = NumericOperator::d(n, 1, k);
        break;
    case Relation::Up1k:
        s.op = up1k(beta, k);
        break;
    case Relation::Up2k:
        s.op = up2k(beta, k);
        break;
    case Relation::DownEn1:
        s.op = up1k(beta, k) * NumericOperator::d(n, 1, k);
        break;
    case Relation::UpEn1:
        s.op = up2k(beta, k) * NumericOperator::d(n, 0, k);
        break;
    }
    return s;
}

WeylOperator symbolicShiftOperator(Relation r, int n, int k)
{
    checkK(n, k);
    switch (r) {
    case Relation::Down1k:
        return shiftDown1k(n, k);
    case Relation::Down2k:
        return shiftDown2k(n, k);
    case Relation::Up1k:
        return shiftUp1k(n, k, validatedAlphaSumRange(n));
    case Relation::Up2k:
        return shiftUp2k(n, k);
    case Relation::DownEn1:
        return shiftUp1k(n, k, validatedAlphaSumRange(n)) * shiftDown2k(n, k);
    case Relation::UpEn1:
        return shiftUp2k(n, k) * shiftDown1k(n, k);
    }
    throw DomainError("symbolicShiftOperator: unknown relation");
}

RelationSides relationSides(Relation r, int k, const SystemParams &beta, bool falsifyDelta)
{
    checkK(beta.n, k);
    const Complex ak = beta.alpha[static_cast<std::size_t>(k)];
    const Complex delta = beta.delta();
    const Complex d6 = falsifyDelta ? -delta : delta;
    const Complex sigma = alphaSum(beta) - delta;
    switch (r) {
    case Relation::Down1k:
        return {beta, shiftedParams(beta, Shift::MinusA1k, k), ak, 0.0};
    case Relation::Down2k:
        return {beta, shiftedParams(beta, Shift::MinusA2k, k), ak, 0.0};
    case Relation::Up1k:
        return {shiftedParams(beta, Shift::MinusA1k, k), beta, sigma, -1.0};
    case Relation::Up2k:
        return {shiftedParams(beta, Shift::MinusA2k, k), beta, d6, 1.0};
    case Relation::DownEn1:
        return {shiftedParams(beta, Shift::PlusEn1, k), beta, ak * sigma, -ak};
    case Relation::UpEn1:
        return {shiftedParams(beta, Shift::MinusEn1, k), beta, ak * d6, ak};
    }
    throw DomainError("relationSides: unknown relation");
}

std::string representationName(Representation r)
{
    return r == Representation::Integral ? "phi" : "series";
}

Complex applyShift(const NumericOperator &op, Representation rep, const SystemParams &source, const Point &x,
                   const ContiguityOptions &opts)
{
    if (rep == Representation::Integral) {
        return integrateOperatorOnPhi(source, op, x, opts.quadTol).value;
    }
    return evaluate(applyOperator(op, particularSeries(source, opts.K)).value, x);
}

double contiguityThreshold(Relation r)
{
    return isComposite(r) ? 1e-5 : 1e-6;
}

ContiguityReport verifyContiguity(const SystemParams &beta, const std::vector<Point> &samples, Relation r, int k,
                                  Representation rep, const ContiguityOptions &opts)
{
    const RelationSides sides = relationSides(r, k, beta, opts.falsifyDelta);
    const ShiftOperator S = buildShiftOperator(r, k, beta);
    ContiguityReport report;
    report.relation = r;
    report.k = k;
    report.representation = rep;
    report.threshold = contiguityThreshold(r);
    for (const Point &x : samples) {
        ContiguitySample s;
        s.lhs = applyShift(S.op, rep, sides.source, x, opts);
        const Complex f = rep == Representation::Integral ? evalPhi(sides.target, x, opts.quadTol).value
                                                          : evalF(sides.target, x, opts.K).value;
        const Complex g = sides.gCoeff == Complex{} ? Complex{} : boundaryTerm(sides.target, x);
        const Complex phiPart = sides.phiCoeff * f;
        const Complex gPart = sides.gCoeff * g;
        s.rhs = phiPart + gPart;
        s.absGap = std::abs(s.lhs - s.rhs);
        const double scale = std::max(std::abs(s.lhs), std::abs(phiPart) + std::abs(gPart));
        s.relGap = scale > 0.0 ? s.absGap / scale : s.absGap;
        report.maxRelGap = std::max(report.maxRelGap, s.relGap);
        report.samples.push_back(s);
    }
    report.pass = report.maxRelGap < report.threshold;
    return report;
}

} // namespace ihg
