#include <random>

#include <gtest/gtest.h>

#include "ihg/weyl_generators.hpp"
#include "ihg/weyl_operator.hpp"

using namespace ihg;

namespace {

WeylOperator X(int n, int i, int j) { return WeylOperator::x(n, i, j); }
WeylOperator D(int n, int i, int j) { return WeylOperator::d(n, i, j); }
WeylOperator one(int n) { return WeylOperator::scalar(n, ParamPoly(1)); }
ParamPoly alpha(int n, int k) { return ParamPoly::alpha(n, k); }
ParamPoly delta(int n) { return ParamPoly::delta(n); }

bool hasMonomial(const WeylOperator &op, const ExponentOffset &x, const ExponentOffset &d)
{
    return op.terms().count(WeylMonomial{x, d}) > 0;
}

ExponentOffset mono(int n, std::initializer_list<std::pair<int, int>> entries)
{
    ExponentOffset e(n);
    for (const auto &[i, j] : entries) {
        e += ExponentOffset::unit(n, i, j);
    }
    return e;
}

// Random operator in two columns with x- and d-degree at most `deg` per term.
WeylOperator randomOperator(std::mt19937_64 &rng, int deg)
{
    const int n = 2;
    WeylOperator r(n);
    for (int t = 0; t < 4; ++t) {
        WeylOperator term = WeylOperator::scalar(n, ParamPoly(static_cast<std::int64_t>(rng() % 7) - 3));
        const int nx = static_cast<int>(rng() % (deg + 1));
        const int nd = static_cast<int>(rng() % (deg + 1 - nx));
        for (int q = 0; q < nx; ++q) {
            term = term * X(n, static_cast<int>(rng() % 2), static_cast<int>(rng() % 2));
        }
        for (int q = 0; q < nd; ++q) {
            term = term * D(n, static_cast<int>(rng() % 2), static_cast<int>(rng() % 2));
        }
        if (rng() % 2) {
            term = alpha(n, 0) * term;
        }
        r += term;
    }
    return r;
}

} // namespace

TEST(Weyl, CommutationRelation)
{
    const int n = 1;
    EXPECT_EQ(D(n, 0, 0) * X(n, 0, 0), X(n, 0, 0) * D(n, 0, 0) + one(n));
    EXPECT_EQ(X(n, 0, 0) * X(n, 1, 0), X(n, 1, 0) * X(n, 0, 0));
    EXPECT_EQ((X(n, 0, 0) * X(n, 1, 0)).terms().size(), 1u);
    EXPECT_EQ(D(n, 1, 0) * X(n, 0, 0), X(n, 0, 0) * D(n, 1, 0));
}

TEST(Weyl, EulerSquare)
{
    const int n = 1;
    const WeylOperator theta = eulerOp(n, 0, 0);
    const WeylOperator want = X(n, 0, 0) * X(n, 0, 0) * D(n, 0, 0) * D(n, 0, 0) + X(n, 0, 0) * D(n, 0, 0);
    EXPECT_EQ(theta * theta, want);
    ASSERT_EQ((theta * theta).terms().size(), 2u);
    EXPECT_TRUE(hasMonomial(theta * theta, 2 * ExponentOffset::unit(n, 0, 0), 2 * ExponentOffset::unit(n, 0, 0)));
}

TEST(Weyl, GeneratorExamples)
{
    EXPECT_EQ(zOp(1, 0), eulerOp(1, 0, 0) + eulerOp(1, 1, 0) - WeylOperator::scalar(1, alpha(1, 0)));
    EXPECT_EQ(boxOp(2, 0, 1), D(2, 0, 0) * D(2, 1, 1) - D(2, 0, 1) * D(2, 1, 0));
    EXPECT_EQ(boxOp(2, 1, 0), -boxOp(2, 0, 1));
    EXPECT_EQ(zSumOp(2), eulerOp(2, 1, 0) + eulerOp(2, 1, 1) - WeylOperator::scalar(2, delta(2)));
    EXPECT_THROW(eulerOp(2, 2, 0), DomainError);
}

TEST(Weyl, MultiplyIsAssociative)
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        const WeylOperator p = randomOperator(rng, 3);
        const WeylOperator q = randomOperator(rng, 3);
        const WeylOperator r = randomOperator(rng, 3);
        EXPECT_EQ((p * q) * r, p * (q * r));
    }
}

TEST(Weyl, NormalFormIsCanonical)
{
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 20; ++trial) {
        const WeylOperator p = randomOperator(rng, 3);
        // re-normalizing a normal form: multiply by 1 on either side
        EXPECT_EQ((one(2) * p).terms(), p.terms());
        EXPECT_EQ((p * one(2)).terms(), p.terms());
    }
}

TEST(Weyl, BoxCommutesWithXFreeOperators)
{
    const int n = 3;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) {
                continue;
            }
            const WeylOperator box = boxOp(n, i, j);
            for (int r = 0; r < 2; ++r) {
                for (int c = 0; c < n; ++c) {
                    EXPECT_EQ(box * D(n, r, c), D(n, r, c) * box);
                }
            }
            const WeylOperator other = boxOp(n, (i + 1) % n, (i + 2) % n);
            EXPECT_EQ(box * other, other * box);
            EXPECT_EQ(box * WeylOperator::scalar(n, alpha(n, 1)), WeylOperator::scalar(n, alpha(n, 1)) * box);
        }
    }
}

TEST(Weyl, L1AtNOne)
{
    const int n = 1;
    // alpha_1 x_11 d_11 - alpha_1 (alpha_1 - delta) + alpha_1 (theta_21 - delta)
    const WeylOperator want = WeylOperator::scalar(n, alpha(n, 0)) * X(n, 0, 0) * D(n, 0, 0) -
                              WeylOperator::scalar(n, alpha(n, 0) * (alpha(n, 0) - delta(n))) +
                              WeylOperator::scalar(n, alpha(n, 0)) *
                                  (eulerOp(n, 1, 0) - WeylOperator::scalar(n, delta(n)));
    EXPECT_EQ(buildL1(n, 0), want);
}

TEST(Weyl, L1L2Structure)
{
    const int n = 2;
    const WeylOperator l1 = buildL1(n, 0);
    EXPECT_TRUE(hasMonomial(l1, mono(n, {{0, 1}, {1, 0}}), mono(n, {{1, 1}, {0, 0}})));
    const WeylOperator l2 = buildL2(n, 1);
    EXPECT_TRUE(hasMonomial(l2, mono(n, {{0, 1}, {1, 0}}), mono(n, {{0, 0}, {1, 1}})));
    EXPECT_EQ(l1.derivativeDegree(), 2);
    EXPECT_EQ(l2.derivativeDegree(), 2);
}

TEST(Weyl, VerifyDecompositionExamples)
{
    const int n = 2;
    EXPECT_TRUE(verifyDecomposition(zOp(n, 0), {{one(n), zOp(n, 0)}}));
    EXPECT_FALSE(verifyDecomposition(zOp(n, 0) + one(n), {{one(n), zOp(n, 0)}}));
}

class WeylReductions : public ::testing::TestWithParam<int> {};

TEST_P(WeylReductions, L1AndL2ReduceExactly)
{
    const int n = GetParam();
    for (int k = 0; k < n; ++k) {
        EXPECT_TRUE(verifyDecomposition(buildL1(n, k, AlphaSumRange::UpToN), l1Reduction(n, k))) << "k=" << k;
        EXPECT_TRUE(verifyDecomposition(buildL2(n, k, L2Sign::Corrected),
                                        l2Reduction(n, k, L2ReductionRange::ExceptK)))
            << "k=" << k;
    }
}

TEST_P(WeylReductions, LiteralVariantsAreNotExact)
{
    const int n = GetParam();
    for (int k = 0; k < n; ++k) {
        EXPECT_FALSE(verifyDecomposition(buildL1(n, k, AlphaSumRange::UpToNPlusOne), l1Reduction(n, k)));
        EXPECT_FALSE(
            verifyDecomposition(buildL2(n, k, L2Sign::AsDisplayed), l2Reduction(n, k, L2ReductionRange::AllI)));
    }
}

TEST_P(WeylReductions, WeylVerifyReport)
{
    const int n = GetParam();
    const auto entries = weylVerify(n);
    ASSERT_EQ(static_cast<int>(entries.size()), n);
    for (const auto &e : entries) {
        EXPECT_TRUE(e.l1Ok);
        EXPECT_TRUE(e.l2Ok);
        EXPECT_TRUE(e.l1SumToNOk);
        EXPECT_FALSE(e.l2LiteralOk);
    }
    EXPECT_EQ(validatedAlphaSumRange(n), AlphaSumRange::UpToN);
    EXPECT_EQ(validatedL2Variant(n).sign, L2Sign::Corrected);
}

INSTANTIATE_TEST_SUITE_P(NUpToFour, WeylReductions, ::testing::Values(1, 2, 3, 4));

TEST(Weyl, Substitute)
{
    const int n = 2;
    const std::vector<Complex> values{0.5, 1.5, -1.7};
    const NumericOperator z = substitute(zOp(n, 1), values);
    const NumericOperator want = NumericOperator::x(n, 0, 1) * NumericOperator::d(n, 0, 1) +
                                 NumericOperator::x(n, 1, 1) * NumericOperator::d(n, 1, 1) -
                                 NumericOperator::scalar(n, 1.5);
    EXPECT_EQ(z, want);
    EXPECT_THROW(substitute(zOp(n, 1), std::vector<Complex>{1.0}), DomainError);
}
