#include "ihg/weyl_generators.hpp"

#include <string>

namespace ihg {

namespace {

void checkColumn(int n, int j, const char *what)
{
    if (n < 1 || j < 0 || j >= n) {
        throw DomainError(std::string(what) + ": column index out of range");
    }
}

WeylOperator alphaOp(int n, int k)
{
    return WeylOperator::scalar(n, ParamPoly::alpha(n, k));
}

WeylOperator deltaOp(int n)
{
    return WeylOperator::scalar(n, ParamPoly::delta(n));
}

ParamPoly alphaSum(int n, AlphaSumRange range)
{
    ParamPoly s;
    for (int i = 0; i < n; ++i) {
        s += ParamPoly::alpha(n, i);
    }
    if (range == AlphaSumRange::UpToNPlusOne) {
        s += ParamPoly::delta(n);
    }
    return s;
}

WeylOperator theta2Sum(int n)
{
    WeylOperator s(n);
    for (int i = 0; i < n; ++i) {
        s += eulerOp(n, 1, i);
    }
    return s;
}

} // namespace

WeylOperator eulerOp(int n, int i, int j)
{
    checkColumn(n, j, "eulerOp");
    if (i < 0 || i > 1) {
        throw DomainError("eulerOp: row index out of range");
    }
    return WeylOperator::x(n, i, j) * WeylOperator::d(n, i, j);
}

WeylOperator zOp(int n, int i)
{
    checkColumn(n, i, "zOp");
    return eulerOp(n, 0, i) + eulerOp(n, 1, i) - alphaOp(n, i);
}

WeylOperator zSumOp(int n)
{
    if (n < 1) {
        throw DomainError("zSumOp: n must be positive");
    }
    return theta2Sum(n) - deltaOp(n);
}

WeylOperator boxOp(int n, int i, int j)
{
    checkColumn(n, i, "boxOp");
    checkColumn(n, j, "boxOp");
    if (i == j) {
        throw DomainError("boxOp: indices must differ");
    }
    using W = WeylOperator;
    return W::d(n, 0, i) * W::d(n, 1, j) - W::d(n, 0, j) * W::d(n, 1, i);
}

WeylOperator shiftDown1k(int n, int k)
{
    checkColumn(n, k, "shiftDown1k");
    return WeylOperator::d(n, 0, k);
}

WeylOperator shiftDown2k(int n, int k)
{
    checkColumn(n, k, "shiftDown2k");
    return WeylOperator::d(n, 1, k);
}

WeylOperator shiftUp1k(int n, int k, AlphaSumRange range)
{
    checkColumn(n, k, "shiftUp1k");
    using W = WeylOperator;
    W s(n);
    for (int i = 0; i < n; ++i) {
        if (i == k) {
            continue;
        }
        s += (W::x(n, 0, i) * W::x(n, 1, k) - W::x(n, 0, k) * W::x(n, 1, i)) * W::d(n, 1, i);
    }
    s += alphaSum(n, range) * W::x(n, 0, k);
    return s;
}

WeylOperator shiftUp2k(int n, int k)
{
    checkColumn(n, k, "shiftUp2k");
    using W = WeylOperator;
    W s(n);
    W inner = alphaOp(n, k);
    for (int i = 0; i < n; ++i) {
        if (i == k) {
            continue;
        }
        s += W::x(n, 0, k) * W::x(n, 1, i) * W::d(n, 0, i);
        inner += eulerOp(n, 1, i);
    }
    s += inner * W::x(n, 1, k);
    return s;
}

WeylOperator buildL1(int n, int k, AlphaSumRange range)
{
    checkColumn(n, k, "buildL1");
    // the trailing sum alpha_i in L_1 is always over 1..n
    const ParamPoly ak = ParamPoly::alpha(n, k);
    const ParamPoly sumMinusDelta = alphaSum(n, AlphaSumRange::UpToN) - ParamPoly::delta(n);
    return shiftUp1k(n, k, range) * shiftDown1k(n, k) - WeylOperator::scalar(n, ak * sumMinusDelta) +
           ak * zSumOp(n);
}

WeylOperator buildL2(int n, int k, L2Sign sign)
{
    checkColumn(n, k, "buildL2");
    const ParamPoly ak = ParamPoly::alpha(n, k);
    WeylOperator L = shiftUp2k(n, k) * shiftDown2k(n, k) - WeylOperator::scalar(n, ak * ParamPoly::delta(n));
    if (sign == L2Sign::AsDisplayed) {
        L += ak * zSumOp(n);
    } else {
        L -= ak * zSumOp(n);
    }
    return L;
}

Combination l1Reduction(int n, int k)
{
    checkColumn(n, k, "l1Reduction");
    using W = WeylOperator;
    Combination c;
    for (int i = 0; i < n; ++i) {
        if (i != k) {
            c.push_back({W::x(n, 0, i) * W::x(n, 1, k), boxOp(n, k, i)});
        }
    }
    for (int i = 0; i < n; ++i) {
        c.push_back({-(eulerOp(n, 1, i) - alphaOp(n, i)), zOp(n, k)});
    }
    for (int i = 0; i < n; ++i) {
        c.push_back({eulerOp(n, 1, k), zOp(n, i)});
    }
    return c;
}

Combination l2Reduction(int n, int k, L2ReductionRange range)
{
    checkColumn(n, k, "l2Reduction");
    using W = WeylOperator;
    Combination c;
    for (int i = 0; i < n; ++i) {
        if (i != k) {
            c.push_back({W::x(n, 0, k) * W::x(n, 1, i), boxOp(n, i, k)});
        }
    }
    for (int i = 0; i < n; ++i) {
        if (i == k && range == L2ReductionRange::ExceptK) {
            continue;
        }
        c.push_back({eulerOp(n, 1, i), zOp(n, k)});
    }
    return c;
}

bool verifyDecomposition(const WeylOperator &L, const Combination &combination)
{
    WeylOperator r = L;
    for (const auto &term : combination) {
        r -= term.coefficient * term.generator;
    }
    return r.isZero();
}

std::string variantName(AlphaSumRange r)
{
    return r == AlphaSumRange::UpToN ? "alpha-sum-to-n" : "alpha-sum-to-n+1";
}

std::string variantName(const L2Variant &v)
{
    std::string s = v.sign == L2Sign::AsDisplayed ? "sign-as-displayed" : "sign-corrected";
    s += v.range == L2ReductionRange::AllI ? "/theta-sum-all-i" : "/theta-sum-i-ne-k";
    return s;
}

std::vector<WeylVerifyEntry> weylVerify(int n)
{
    if (n < 1) {
        throw DomainError("weylVerify: n must be positive");
    }
    const AlphaSumRange l1Candidates[] = {AlphaSumRange::UpToNPlusOne, AlphaSumRange::UpToN};
    const L2Variant l2Candidates[] = {
        {L2Sign::AsDisplayed, L2ReductionRange::AllI},
        {L2Sign::AsDisplayed, L2ReductionRange::ExceptK},
        {L2Sign::Corrected, L2ReductionRange::AllI},
        {L2Sign::Corrected, L2ReductionRange::ExceptK},
    };
    std::vector<WeylVerifyEntry> out;
    for (int k = 0; k < n; ++k) {
        WeylVerifyEntry e;
        e.k = k;
        const Combination red1 = l1Reduction(n, k);
        e.l1LiteralOk = verifyDecomposition(buildL1(n, k, AlphaSumRange::UpToNPlusOne), red1);
        e.l1SumToNOk = verifyDecomposition(buildL1(n, k, AlphaSumRange::UpToN), red1);
        for (AlphaSumRange r : l1Candidates) {
            if (verifyDecomposition(buildL1(n, k, r), red1)) {
                e.l1Ok = true;
                e.l1Variant = variantName(r);
                break;
            }
        }
        for (const L2Variant &v : l2Candidates) {
            const bool ok = verifyDecomposition(buildL2(n, k, v.sign), l2Reduction(n, k, v.range));
            if (v.sign == L2Sign::AsDisplayed && v.range == L2ReductionRange::AllI) {
                e.l2LiteralOk = ok;
            }
            if (ok && !e.l2Ok) {
                e.l2Ok = true;
                e.l2Variant = variantName(v);
            }
        }
        out.push_back(std::move(e));
    }
    return out;
}

AlphaSumRange validatedAlphaSumRange(int n)
{
    for (const auto &e : weylVerify(n)) {
        if (!e.l1Ok || e.l1Variant != variantName(AlphaSumRange::UpToN)) {
            throw DomainError("validatedAlphaSumRange: no consistent exact L1 variant");
        }
    }
    return AlphaSumRange::UpToN;
}

L2Variant validatedL2Variant(int n)
{
    const L2Variant v{L2Sign::Corrected, L2ReductionRange::ExceptK};
    for (const auto &e : weylVerify(n)) {
        if (!e.l2Ok || e.l2Variant != variantName(v)) {
            throw DomainError("validatedL2Variant: no consistent exact L2 variant");
        }
    }
    return v;
}

} // namespace ihg
