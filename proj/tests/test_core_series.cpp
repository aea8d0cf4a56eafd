#include <random>

#include <gtest/gtest.h>

#include "ihg/multi_index.hpp"
#include "ihg/pochhammer.hpp"
#include "ihg/truncated_series.hpp"
#include "test_util.hpp"

using namespace ihg;
using ihg::test::near;

TEST(Pochhammer, Examples)
{
    EXPECT_EQ(pochhammer({2.5, -1.0}, 0), Complex(1.0));
    EXPECT_EQ(pochhammer(1.0, 4), Complex(24.0));
    EXPECT_EQ(pochhammer(0.5, 2), Complex(0.75));
    EXPECT_THROW(pochhammer(1.0, -1), DomainError);
}

TEST(Pochhammer, MultiExamples)
{
    const std::vector<Complex> ones{1.0, 1.0};
    EXPECT_EQ(pochhammerMulti(ones, MultiIndex::zero(2)), Complex(1.0));
    EXPECT_EQ(pochhammerMulti(ones, MultiIndex({2, 3})), Complex(12.0));
    const std::vector<Complex> mixed{0.5, 2.0};
    EXPECT_EQ(pochhammerMulti(mixed, MultiIndex({1, 1})), Complex(1.0));
    EXPECT_THROW(pochhammerMulti(mixed, MultiIndex({1, 1, 1})), DomainError);
}

TEST(Pochhammer, StepProperty)
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const Complex z(test::uniform(rng, -3, 3), test::uniform(rng, -3, 3));
        for (int m = 0; m < 12; ++m) {
            EXPECT_TRUE(near(pochhammer(z, m + 1), pochhammer(z, m) * (z + static_cast<double>(m)),
                             1e-12 * std::abs(pochhammer(z, m + 1)) + 1e-300));
        }
    }
}

TEST(GammaRatio, Examples)
{
    EXPECT_EQ(gammaRatio(3.7, 0), Complex(1.0));
    EXPECT_TRUE(near(gammaRatio(2.0, 2), 1.0 / 12.0, 1e-16));
    EXPECT_EQ(gammaRatio(0.5, -1), Complex(0.5));
    // falling factorial through zero
    EXPECT_EQ(gammaRatio(2.0, -4), Complex(0.0));
    // (s+1)_k with a vanishing factor
    EXPECT_THROW(gammaRatio(-3.0, 4), PoleError);
}

TEST(GammaRatio, Composition)
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const Complex s(test::uniform(rng, -4, 4), test::uniform(rng, -1, 1));
        const int k = static_cast<int>(rng() % 13) - 6;
        const int j = static_cast<int>(rng() % 13) - 6;
        const Complex lhs = gammaRatio(s, k) * gammaRatio(s + static_cast<double>(k), j);
        const Complex rhs = gammaRatio(s, k + j);
        EXPECT_TRUE(near(lhs, rhs, 1e-11 * std::max(1.0, std::abs(rhs)))) << "s=" << s << " k=" << k << " j=" << j;
    }
}

TEST(MultiIndex, NormAndOrder)
{
    const MultiIndex m({2, 0, 3});
    EXPECT_EQ(m.norm(), 5);
    EXPECT_EQ(m.lastNonzero(), 2);
    EXPECT_EQ(MultiIndex::zero(3).lastNonzero(), -1);
    EXPECT_EQ(m.plusUnit(1), MultiIndex({2, 1, 3}));
    EXPECT_THROW(MultiIndex({1, -1}), DomainError);

    const auto all = gradedMultiIndices(3, 4);
    EXPECT_EQ(all.size(), 35u); // C(4+3, 3)
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
}

TEST(MultiIndex, WalkShellsVisitsEachIndexOnce)
{
    std::map<MultiIndex, int> seen;
    walkShells<int>(
        3, 5, 0, [](const MultiIndex &, const int &v, int) { return v + 1; },
        [&](const MultiIndex &m, const int &depth) {
            ++seen[m];
            EXPECT_EQ(depth, m.norm());
        });
    EXPECT_EQ(seen.size(), gradedMultiIndices(3, 5).size());
    for (const auto &[m, count] : seen) {
        EXPECT_EQ(count, 1);
    }
}

namespace {

ExponentOffset offset(std::vector<int> r0, std::vector<int> r1)
{
    return ExponentOffset(Mat2xN<int>(std::move(r0), std::move(r1)));
}

TruncatedSeries randomSeries(std::mt19937_64 &rng, int n, int order)
{
    Mat2xN<Complex> base(n);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < n; ++j) {
            base(i, j) = Complex(test::uniform(rng, -2, 2), 0.0);
        }
    }
    Mat2xN<int> w(n);
    for (int j = 0; j < n; ++j) {
        w(1, j) = 1;
    }
    TruncatedSeries s(base, ExponentOffset(w), order);
    for (int t = 0; t < 15; ++t) {
        Mat2xN<int> k(n);
        int grade = 0;
        for (int j = 0; j < n; ++j) {
            k(0, j) = static_cast<int>(rng() % 5) - 2;
            k(1, j) = static_cast<int>(rng() % 3);
            grade += k(1, j);
        }
        if (grade <= order) {
            s.add(ExponentOffset(k), Complex(test::uniform(rng, -1, 1), test::uniform(rng, -1, 1)));
        }
    }
    return s;
}

} // namespace

TEST(TruncatedSeries, EulerExamples)
{
    const int n = 1;
    TruncatedSeries zero{Mat2xN<Complex>(n), ExponentOffset(n)};
    EXPECT_TRUE(applyEuler(zero, 0, 0).isZero());

    Mat2xN<Complex> base(n);
    base(0, 0) = 0.75;
    TruncatedSeries single(base, ExponentOffset(n));
    single.add(ExponentOffset(n), 2.0);
    EXPECT_EQ(applyEuler(single, 0, 0).coefficient(ExponentOffset(n)), Complex(1.5));

    // theta_11 on base alpha_1 with terms {0: 1, e_11: 1}
    const double alpha1 = 0.3;
    base(0, 0) = alpha1;
    TruncatedSeries two(base, ExponentOffset::unit(n, 0, 0), 5);
    two.add(ExponentOffset(n), 1.0);
    two.add(ExponentOffset::unit(n, 0, 0), 1.0);
    const TruncatedSeries r = applyEuler(two, 0, 0);
    EXPECT_EQ(r.coefficient(ExponentOffset(n)), Complex(alpha1));
    EXPECT_EQ(r.coefficient(ExponentOffset::unit(n, 0, 0)), Complex(alpha1 + 1.0));
    EXPECT_EQ(r.order(), two.order());
}

TEST(TruncatedSeries, PartialExamples)
{
    const int n = 1;
    TruncatedSeries constant{Mat2xN<Complex>(n), ExponentOffset(n)};
    constant.add(ExponentOffset(n), 4.0);
    const TruncatedSeries d0 = applyPartial(constant, 0, 0);
    EXPECT_TRUE(d0.isZero());
    EXPECT_EQ(d0.reliableOrder(), constant.reliableOrder() - 1);

    TruncatedSeries cube{Mat2xN<Complex>(n), ExponentOffset(n)};
    cube.add(offset({3}, {0}), 1.0);
    const TruncatedSeries d1 = applyPartial(cube, 0, 0);
    EXPECT_EQ(d1.coefficient(offset({2}, {0})), Complex(3.0));
    EXPECT_EQ(d1.terms().size(), 1u);

    Mat2xN<Complex> base(n);
    base(0, 0) = 0.4;
    TruncatedSeries frac(base, ExponentOffset(n));
    frac.add(ExponentOffset(n), 1.0);
    const TruncatedSeries d2 = applyPartial(frac, 0, 0);
    EXPECT_EQ(d2.coefficient(offset({-1}, {0})), Complex(0.4));
}

TEST(TruncatedSeries, EvaluateExamples)
{
    const int n = 1;
    TruncatedSeries zero{Mat2xN<Complex>(n), ExponentOffset(n)};
    Point x(n, Complex(3.0));
    EXPECT_EQ(evaluate(zero, x), Complex(0.0));

    TruncatedSeries lin{Mat2xN<Complex>(n), ExponentOffset(n)};
    lin.add(offset({1}, {0}), 2.0);
    EXPECT_EQ(evaluate(lin, x), Complex(6.0));

    const int K = 30;
    TruncatedSeries geo(Mat2xN<Complex>(n), ExponentOffset::unit(n, 1, 0), K);
    for (int m = 0; m <= K; ++m) {
        geo.add(offset({0}, {m}), 1.0);
    }
    x(1, 0) = 0.5;
    EXPECT_TRUE(near(evaluate(geo, x), 2.0, 1e-8));
}

TEST(TruncatedSeries, RejectsNaNAndOverOrder)
{
    TruncatedSeries s(Mat2xN<Complex>(1), ExponentOffset::unit(1, 1, 0), 2);
    EXPECT_THROW(s.add(ExponentOffset(1), Complex(std::nan(""), 0.0)), DomainError);
    EXPECT_THROW(s.add(offset({0}, {3}), 1.0), DomainError);
    s.add(ExponentOffset(1), 1e-310);
    EXPECT_TRUE(s.isZero());
}

TEST(TruncatedSeries, ZeroBaseWithFractionalExponent)
{
    Mat2xN<Complex> base(1);
    base(0, 0) = 0.5;
    TruncatedSeries s(base, ExponentOffset(1));
    s.add(offset({-1}, {0}), 1.0);
    Point x(1, Complex(0.0));
    EXPECT_THROW(evaluate(s, x), BranchError);
}

TEST(TruncatedSeries, EulerPartialCommutator)
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const TruncatedSeries s = randomSeries(rng, 2, 8);
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                // d theta - theta d = d, i.e. theta d - d theta = -d
                TruncatedSeries lhs = applyPartial(applyEuler(s, i, j), i, j) - applyEuler(applyPartial(s, i, j), i, j);
                lhs -= applyPartial(s, i, j);
                for (const auto &[k, c] : lhs.terms()) {
                    EXPECT_LT(std::abs(c), 1e-12) << k.str();
                }
            }
        }
    }
}

TEST(TruncatedSeries, EulerOperatorsCommute)
{
    std::mt19937_64 rng(5);
    const TruncatedSeries s = randomSeries(rng, 2, 8);
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            const TruncatedSeries ab = applyEuler(applyEuler(s, a / 2, a % 2), b / 2, b % 2);
            const TruncatedSeries ba = applyEuler(applyEuler(s, b / 2, b % 2), a / 2, a % 2);
            ASSERT_EQ(ab.terms().size(), ba.terms().size());
            for (const auto &[k, c] : ab.terms()) {
                EXPECT_TRUE(near(ba.coefficient(k), c, 1e-13 * std::abs(c))) << k.str();
            }
        }
    }
}

TEST(TruncatedSeries, EvaluateIsLinear)
{
    std::mt19937_64 rng(9);
    TruncatedSeries s1 = randomSeries(rng, 2, 8);
    TruncatedSeries s2 = s1.emptyLike(8, 8);
    const TruncatedSeries other = randomSeries(rng, 2, 8);
    for (const auto &[k, c] : other.terms()) {
        s2.add(k, c);
    }
    const Point x = test::pt({1.3, 0.7}, {0.4, 0.2});
    const Complex a(0.7, -0.2);
    const Complex b(-1.1, 0.4);
    const Complex lhs = evaluate(a * s1 + b * s2, x);
    const Complex rhs = a * evaluate(s1, x) + b * evaluate(s2, x);
    EXPECT_TRUE(near(lhs, rhs, 1e-12 * std::max(1.0, std::abs(rhs))));
}

TEST(TruncatedSeries, RelabelColumns)
{
    Mat2xN<Complex> base({0.1, 0.2, 0.3}, {1.1, 1.2, 1.3});
    Mat2xN<int> w({0, 0, 0}, {1, 1, 1});
    TruncatedSeries f(base, ExponentOffset(w), 4);
    f.add(offset({1, 0, 0}, {0, 2, 0}), 2.0);
    f.add(offset({0, 0, -1}, {0, 0, 1}), -1.0);
    const std::vector<int> perm{2, 0, 1};
    const TruncatedSeries g = f.relabelColumns(perm);
    const Point x = test::pt({1.1, 0.9, 1.4}, {0.3, 0.2, 0.25});
    EXPECT_TRUE(near(evaluate(g, x), evaluate(f, permuteColumns(x, perm)), 1e-14));
}
