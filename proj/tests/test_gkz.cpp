#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "ihg/gkz_basis.hpp"
#include "ihg/residuals.hpp"
#include "ihg_cli/sampling.hpp"
#include "test_util.hpp"

using namespace ihg;
using ihg::test::near;

namespace {

std::vector<ParamPoly> symbolicBeta(int n)
{
    std::vector<ParamPoly> beta;
    for (int k = 0; k < n; ++k) {
        beta.push_back(ParamPoly::alpha(n, k));
    }
    beta.push_back(ParamPoly::delta(n));
    return beta;
}

SystemParams generic(int n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    return test::randomParams(n, rng, 0.2, 1.8);
}

} // namespace

TEST(BuildS, DisplayedExamples)
{
    const int n = 2;
    const auto beta = symbolicBeta(n);
    const ParamPoly a1 = ParamPoly::alpha(n, 0), a2 = ParamPoly::alpha(n, 1), g = ParamPoly::gamma(n);
    const ParamPoly one(1);

    const auto s1 = buildS(beta, 0, SConvention::Displayed);
    EXPECT_EQ(s1(0, 0), a1 + a2 - g - one);
    EXPECT_EQ(s1(0, 1), ParamPoly(0));
    EXPECT_EQ(s1(1, 0), g + one - a2);
    EXPECT_EQ(s1(1, 1), a2);

    const auto s2 = buildS(beta, 1, SConvention::Displayed);
    EXPECT_EQ(s2(0, 0), a1);
    EXPECT_EQ(s2(0, 1), a2 - g - one);
    EXPECT_EQ(s2(1, 0), ParamPoly(0));
    EXPECT_EQ(s2(1, 1), g + one);

    EXPECT_THROW(buildS(beta, 2), DomainError);
}

TEST(BuildS, HomogeneousConventionSatisfiesEulerEquations)
{
    for (int n = 1; n <= 4; ++n) {
        const auto beta = symbolicBeta(n);
        for (int ell = 0; ell < n; ++ell) {
            const auto s = buildS(beta, ell);
            for (int row = 0; row < n; ++row) {
                EXPECT_EQ(s(0, row) + s(1, row), beta[static_cast<std::size_t>(row)]);
            }
            ParamPoly second(0);
            for (int j = 0; j < n; ++j) {
                second += s(1, j);
            }
            EXPECT_EQ(second, beta.back()) << "n=" << n << " l=" << ell;

            // and the displayed one misses the last row by a sign
            const auto d = buildS(beta, ell, SConvention::Displayed);
            ParamPoly displayed(0);
            for (int j = 0; j < n; ++j) {
                displayed += d(1, j);
            }
            EXPECT_EQ(displayed, -beta.back());
        }
    }
}

TEST(BuildS, ConeIsInKernelOfA)
{
    for (int n = 1; n <= 4; ++n) {
        const AMatrix A = buildA(n);
        for (int ell = 0; ell < n; ++ell) {
            const auto gens = coneGenerators(n, ell);
            EXPECT_EQ(static_cast<int>(gens.size()), n - 1);
            const ExponentOffset w = coneGrading(n, ell);
            for (const auto &g : gens) {
                EXPECT_EQ(A.apply(g), std::vector<int>(static_cast<std::size_t>(n + 1), 0));
                EXPECT_EQ(pairing(w, g), 1);
            }
        }
    }
}

TEST(BuildS, NumericHomogeneityOnSupport)
{
    const SystemParams p = generic(3, 5);
    const AMatrix A = buildA(3);
    const auto beta = p.beta();
    for (int ell = 0; ell < 3; ++ell) {
        const TruncatedSeries psi = psiSeries(p, ell, 6);
        for (const auto &[k, c] : psi.terms()) {
            Mat2xN<Complex> e = psi.base();
            for (int i = 0; i < 2; ++i) {
                for (int j = 0; j < 3; ++j) {
                    e(i, j) += static_cast<double>(k(i, j));
                }
            }
            const auto Ae = A.apply(e);
            for (std::size_t r = 0; r < Ae.size(); ++r) {
                EXPECT_TRUE(near(Ae[r], beta[r], 1e-14));
            }
        }
    }
}

TEST(Psi, SingleTermAtNOne)
{
    SystemParams p = generic(1, 3);
    const TruncatedSeries psi = psiSeries(p, 0, 10);
    ASSERT_EQ(psi.terms().size(), 1u);
    EXPECT_EQ(psi.coefficient(ExponentOffset(1)), Complex(1.0));
    const auto beta = p.beta();
    EXPECT_TRUE(near(psi.base()(0, 0), beta[0] - beta[1], 1e-15));
    EXPECT_TRUE(near(psi.base()(1, 0), beta[1], 1e-15));

    const TruncatedSeries shown = psiSeries(p, 0, 10, SConvention::Displayed);
    EXPECT_TRUE(near(shown.base()(0, 0), beta[0] + beta[1], 1e-15));
    EXPECT_TRUE(near(shown.base()(1, 0), -beta[1], 1e-15));
}

TEST(Psi, LeadingCoefficientIsOne)
{
    const SystemParams p = generic(3, 8);
    for (int ell = 0; ell < 3; ++ell) {
        EXPECT_EQ(psiSeries(p, ell, 5).coefficient(ExponentOffset(3)), Complex(1.0));
    }
}

TEST(Psi, ResidualsVanish)
{
    for (int n = 2; n <= 3; ++n) {
        const SystemParams p = generic(n, 100 + n);
        for (int ell = 0; ell < n; ++ell) {
            const ResidualReport r = verifySeriesResiduals(p, psiSeries(p, ell, 10), Inhomogeneity::Zero);
            EXPECT_TRUE(r.pass) << "n=" << n << " l=" << ell;
            EXPECT_GE(r.reliableOrder, 8);
        }
    }
}

TEST(Psi, DistinctLeadingExponents)
{
    for (int n = 2; n <= 3; ++n) {
        const SystemParams p = generic(n, 200 + n);
        for (int l1 = 0; l1 < n; ++l1) {
            for (int l2 = l1 + 1; l2 < n; ++l2) {
                EXPECT_NE(buildS(p, l1), buildS(p, l2));
            }
        }
    }
}

TEST(Psi, WarnsOutsideDomain)
{
    const SystemParams p = generic(2, 9);
    // decreasing ratios: x lies in the transposed chamber only
    const Point x = test::pt({1.0, 1.0}, {0.4, 0.1});
    EXPECT_FALSE(evalPsi(p, 0, x, 10).warnings.empty());
    EXPECT_TRUE(evalPsi(p, 0, test::pt({1.0, 1.0}, {0.1, 0.4}), 10).warnings.empty());
}

TEST(Nonresonance, Examples)
{
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 5; ++trial) {
        SystemParams p = test::randomParams(3, rng);
        for (auto &a : p.alpha) {
            a += Complex(0.0, test::uniform(rng, -1.0, 1.0));
        }
        p.gamma += Complex(0.0, test::uniform(rng, -1.0, 1.0));
        const NonresonanceResult r = checkTNonresonant(p, 24);
        EXPECT_TRUE(r.nonresonant);
        EXPECT_FALSE(r.witness.has_value());
        EXPECT_EQ(r.searchBound, 24);
    }
    EXPECT_TRUE(checkTNonresonant(generic(1, 4), 10).nonresonant);
}

TEST(Nonresonance, IntegerDifferenceIsFound)
{
    // s^{(1)} - s^{(2)} has entries +-(alpha_2 + gamma + 1)
    SystemParams p = generic(2, 12);
    p.gamma = 0.3;
    p.alpha[1] = 0.7;
    const NonresonanceResult r = checkTNonresonant(p, 6);
    EXPECT_FALSE(r.nonresonant);
    ASSERT_TRUE(r.witness.has_value());
    const NonresonanceWitness &w = *r.witness;
    EXPECT_NE(w.ell, w.ellPrime);
    EXPECT_LE(std::abs(w.difference(0, 0)), 6);

    // the witness reproduces the collision
    const auto gens = coneGenerators(2, w.ell);
    const auto gensPrime = coneGenerators(2, w.ellPrime);
    ExponentOffset k(2), kp(2);
    for (std::size_t g = 0; g < gens.size(); ++g) {
        k += w.m[g] * gens[g];
        kp += w.mPrime[g] * gensPrime[g];
    }
    EXPECT_EQ(w.difference + w.sign * k, w.signPrime * kp);
}

TEST(PermuteBasis, IdentityIsBitwiseEqual)
{
    const SystemParams p = generic(3, 31);
    const Point x = test::pt({1.0, 1.2, 0.9}, {0.05, 0.2, 0.3});
    for (int ell = 0; ell < 3; ++ell) {
        EXPECT_EQ(permuteBasis(p, {0, 1, 2}, ell, x, 12).value, evalPsi(p, ell, x, 12).value);
    }
}

TEST(PermuteBasis, TransposedBasisSolvesSystem)
{
    const SystemParams p = generic(2, 32);
    for (int ell = 0; ell < 2; ++ell) {
        const ResidualReport r =
            verifySeriesResiduals(p, permutedPsiSeries(p, {1, 0}, ell, 10), Inhomogeneity::Zero);
        EXPECT_TRUE(r.pass) << "l=" << ell;
    }
    EXPECT_THROW(permutedPsiSeries(p, {0, 0}, 0, 5), DomainError);
}

TEST(ClassifyDomain, Examples)
{
    const DomainReport sorted = classifyDomain(test::pt({1.0, 1.0, 1.0}, {0.1, 0.2, 0.3}), 0.0, 1.0);
    EXPECT_TRUE(sorted.inU0);
    ASSERT_TRUE(sorted.sigma.has_value());
    EXPECT_EQ(*sorted.sigma, (std::vector<int>{0, 1, 2}));

    const DomainReport swapped = classifyDomain(test::pt({1.0, 1.0}, {0.3, 0.1}), 0.0, 1.0);
    ASSERT_TRUE(swapped.sigma.has_value());
    EXPECT_EQ(*swapped.sigma, (std::vector<int>{1, 0}));

    const DomainReport tie = classifyDomain(test::pt({1.0, 1.0}, {0.5, 0.5}), 0.0, 1.0);
    EXPECT_TRUE(tie.inU0);
    EXPECT_FALSE(tie.distinct);
    EXPECT_FALSE(tie.sigma.has_value());

    const DomainReport outside = classifyDomain(test::pt({1.0, 1.0}, {0.5, 1.5}), 0.0, 1.0);
    EXPECT_FALSE(outside.inU0);
    EXPECT_FALSE(outside.sigma.has_value());
}

TEST(ClassifyDomain, ExactlyOneChamber)
{
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 3;
        Point x(n);
        for (int j = 0; j < n; ++j) {
            x(0, j) = test::uniform(rng, 0.5, 2.0);
            x(1, j) = test::uniform(rng, -0.9, 0.9) * std::abs(x(0, j));
        }
        const DomainReport r = classifyDomain(x, 0.0, 1.0);
        ASSERT_TRUE(r.sigma.has_value());
        std::vector<int> perm{0, 1, 2};
        int hits = 0;
        do {
            if (inSigmaU(x, 0.0, 1.0, perm)) {
                ++hits;
                EXPECT_EQ(perm, *r.sigma);
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        EXPECT_EQ(hits, 1);
    }
}

TEST(ClassifyDomain, SampledChambersAgree)
{
    cli::Sampler s(5);
    std::vector<int> sigma{2, 0, 1};
    for (int trial = 0; trial < 20; ++trial) {
        const Point x = cli::samplePointSigmaU(sigma, 0.0, 0.8, s);
        const DomainReport r = classifyDomain(x, 0.0, 0.8);
        ASSERT_TRUE(r.sigma.has_value());
        EXPECT_EQ(*r.sigma, sigma);
    }
}
