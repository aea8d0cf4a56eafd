// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "ihg/contiguity.hpp"
#include "ihg/gkz_basis.hpp"
#include "ihg/residuals.hpp"
#include "ihg/syzygy.hpp"
#include "ihg/system.hpp"
#include "ihg/weyl_generators.hpp"
#include "ihg_cli/sampling.hpp"

using namespace ihg;
using ihg::cli::Sampler;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

SystemParams sampleParams(int n, Sampler &s)
{
    SystemParams p;
    p.n = n;
    for (int k = 0; k < n; ++k) {
        p.alpha.emplace_back(s.uniform(0.2, 2.0), 0.0);
    }
    p.gamma = s.uniform(0.2, 2.0);
    const double a = s.uniform(0.0, 0.5);
    p.a = a;
    p.b = s.uniform(a + 0.1, 1.0);
    return p;
}

std::string fmt(const char *f, double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

Outcome seriesIntegralEquivalence()
{
    Sampler s(1001);
    double worst = 0.0;
    int points = 0;
    for (int n : {2, 3}) {
        for (int i = 0; i < 50; ++i) {
            const SystemParams p = sampleParams(n, s);
            const Point x = cli::samplePointU0(n, p.a, p.b, s);
            const Complex f = evalF(p, x, 40).value;
            const Complex phi = evalPhi(p, x, 1e-9).value;
            worst = std::max(worst, std::abs(f - phi) / std::abs(phi));
            ++points;
        }
    }
    return {worst < 1e-6, "max |F - Phi|/|Phi| = " + fmt("%.2e", worst) + " over " + std::to_string(points) +
                              " points (n = 2, 3; K = 40, quadrature tol 1e-9; bound 1e-6)"};
}

Outcome particularResiduals()
{
    Sampler s(1002);
    const int K = 15;
    bool pass = true;
    double worst = 0.0;
    int minReliable = K;
    int compared = 0;
    for (int n = 1; n <= 3; ++n) {
        for (int i = 0; i < 4; ++i) {
            const SystemParams p = sampleParams(n, s);
            const ResidualReport r = verifySeriesResiduals(p, particularSeries(p, K), Inhomogeneity::BoundaryTerm);
            pass = pass && r.pass && r.reliableOrder >= K - 2;
            minReliable = std::min(minReliable, r.reliableOrder);
            for (const auto &e : r.entries) {
                worst = std::max(worst, e.maxRelative);
                compared += e.comparedTerms;
            }
        }
    }
    return {pass, "max relative residual " + fmt("%.2e", worst) + " over " + std::to_string(compared) +
                      " coefficients, reliable order >= " + std::to_string(minReliable) +
                      " (euler, toric, inhomogeneous vs binomial [g]; n = 1..3, K = 15; bound 1e-12)"};
}

Outcome homogeneousBasis()
{
    Sampler s(1003);
    const int K = 12;
    bool pass = true;
    double worst = 0.0;
    int series = 0;
    int certificates = 0;
    for (int n : {2, 3}) {
        for (int i = 0; i < 3; ++i) {
            const SystemParams p = sampleParams(n, s);
            for (int ell = 0; ell < n; ++ell) {
                const ResidualReport r = verifySeriesResiduals(p, psiSeries(p, ell, K), Inhomogeneity::Zero);
                pass = pass && r.pass;
                for (const auto &e : r.entries) {
                    worst = std::max(worst, e.maxRelative);
                }
                ++series;
            }
            const NonresonanceResult nr = checkTNonresonant(p, 2 * K);
            pass = pass && nr.nonresonant;
            certificates += nr.nonresonant ? 1 : 0;
        }
    }
    return {pass, std::to_string(series) + " series Psi (n = 2, 3; K = 12), max relative residual " +
                      fmt("%.2e", worst) + "; T-nonresonance certificate (search bound 24) true for " +
                      std::to_string(certificates) + "/6 parameter sets"};
}

Outcome contiguity()
{
    Sampler s(1004);
    bool pass = true;
    double worstFirst = 0.0;
    double worstComposite = 0.0;
    int checks = 0;
    for (int n : {2, 3}) {
        const SystemParams p = sampleParams(n, s);
        std::vector<Point> pts;
        for (int i = 0; i < 20; ++i) {
            pts.push_back(cli::samplePointU0(n, p.a, p.b, s));
        }
        for (Relation r : allRelations()) {
            for (int k = 0; k < n; ++k) {
                for (Representation rep : {Representation::Integral, Representation::Series}) {
                    const ContiguityReport c = verifyContiguity(p, pts, r, k, rep);
                    pass = pass && c.pass;
                    double &w = isComposite(r) ? worstComposite : worstFirst;
                    w = std::max(w, c.maxRelGap);
                    ++checks;
                    if (!c.pass) {
                        std::printf("    failed: %s k=%d %s gap %.2e\n", relationName(r).c_str(), k + 1,
                                    representationName(rep).c_str(), c.maxRelGap);
                    }
                }
            }
        }
    }
    return {pass, std::to_string(checks) + " relation/k/representation checks x 20 points; max gap " +
                      fmt("%.2e", worstFirst) + " first order (bound 1e-6), " + fmt("%.2e", worstComposite) +
                      " composites (bound 1e-5)"};
}

Outcome symbolicExactness()
{
    bool pass = true;
    bool literalL1 = false;
    bool literalL2 = false;
    std::string l1Variant;
    std::string l2Variant;
    for (int n = 1; n <= 4; ++n) {
        for (const WeylVerifyEntry &e : weylVerify(n)) {
            pass = pass && e.l1Ok && e.l2Ok;
            literalL1 = literalL1 || e.l1LiteralOk;
            literalL2 = literalL2 || e.l2LiteralOk;
            l1Variant = e.l1Variant;
            l2Variant = e.l2Variant;
        }
    }
    bool syzygy = true;
    bool controlsFail = true;
    for (int n = 1; n <= 3; ++n) {
        syzygy = syzygy && checkSyzygyConditions(n).pass;
        const auto g = PowerProductSum<ParamPoly>::boundaryFunction(n);
        controlsFail = controlsFail && !checkSyzygyConditions(n, g.multipliedByX(0, 0)).pass;
    }
    // Weyl-side negative control: z_1 + 1 is not z_1.
    const int n = 2;
    controlsFail = controlsFail && !verifyDecomposition(zOp(n, 0) + WeylOperator::scalar(n, ParamPoly(1)),
                                                         {{WeylOperator::scalar(n, ParamPoly(1)), zOp(n, 0)}});
    pass = pass && syzygy && controlsFail;
    std::string detail = "L1/L2 reductions exact for n <= 4, every k (L1 " + l1Variant + ", L2 " + l2Variant +
                         "); syzygy conditions exact for n <= 3: " + (syzygy ? "yes" : "no") +
                         "; negative controls fail: " + (controlsFail ? "yes" : "no");
    if (!literalL1 || !literalL2) {
        detail += std::string("\n    note: as printed, ") + (literalL1 ? "" : "the L1 up-shift with the alpha-sum to n+1") +
                  (!literalL1 && !literalL2 ? " and " : "") +
                  (literalL2 ? "" : "L2 with its trailing sign and theta-sum over all i") +
                  " do not reduce exactly; the variants above are the ones that do";
    }
    return {pass, detail};
}

Outcome degenerateCases()
{
    Sampler s(1006);
    bool emptyExact = true;
    for (int n = 1; n <= 3; ++n) {
        for (int i = 0; i < 5; ++i) {
            SystemParams p = sampleParams(n, s);
            p.b = p.a;
            const Point x = cli::samplePointU0(n, 0.0, 1.0, s);
            emptyExact = emptyExact && evalF(p, x, 30).value == Complex(0.0) && particularSeries(p, 10).isZero();
        }
    }
    bool homogeneous = true;
    for (int n : {2, 3}) {
        SystemParams p = sampleParams(n, s);
        p.b = p.a;
        const auto pts = cli::samplePointsU0(n, p.a, p.b, 3, 1006);
        for (Relation r : allRelations()) {
            for (int k = 0; k < n; ++k) {
                for (Representation rep : {Representation::Integral, Representation::Series}) {
                    for (const auto &smp : verifyContiguity(p, pts, r, k, rep).samples) {
                        homogeneous = homogeneous && smp.lhs == Complex(0.0) && smp.rhs == Complex(0.0);
                    }
                }
            }
        }
    }
    double worst = 0.0;
    for (int n = 1; n <= 3; ++n) {
        for (int i = 0; i < 10; ++i) {
            SystemParams p = sampleParams(n, s);
            std::fill(p.alpha.begin(), p.alpha.end(), Complex(0.0));
            const Point x = cli::samplePointU0(n, p.a, p.b, s);
            const Complex g1 = p.gamma + 1.0;
            const Complex want = (std::pow(p.b, g1) - std::pow(p.a, g1)) / g1;
            worst = std::max(worst, std::abs(evalF(p, x, 20).value - want));
        }
    }
    const bool pass = emptyExact && homogeneous && worst < 1e-12;
    return {pass, std::string("a = b: F == 0 exactly: ") + (emptyExact ? "yes" : "no") +
                      ", contiguity sides exactly 0: " + (homogeneous ? "yes" : "no") +
                      "; alpha = 0 vs (b^(g+1) - a^(g+1))/(g+1): max error " + fmt("%.2e", worst) + " (bound 1e-12)"};
}

Outcome domainLogic()
{
    Sampler s(1007);
    int unique = 0;
    int total = 0;
    for (int i = 0; i < 1000; ++i) {
        const int n = 2 + i % 3;
        const double b = s.uniform(0.3, 1.0);
        Point x(n);
        for (int k = 0; k < n; ++k) {
            x(0, k) = s.uniform(0.5, 2.0);
            x(1, k) = x(0, k) * s.uniform(-1.0, 1.0) / b;
        }
        const DomainReport d = classifyDomain(x, 0.0, b);
        if (!d.distinct || !d.inU0) {
            continue; // ties have measure zero; keep the count honest anyway
        }
        ++total;
        std::vector<int> perm(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) {
            perm[static_cast<std::size_t>(k)] = k;
        }
        int hits = 0;
        do {
            hits += inSigmaU(x, 0.0, b, perm) ? 1 : 0;
        } while (std::next_permutation(perm.begin(), perm.end()));
        unique += (d.sigma.has_value() && hits == 1 && inSigmaU(x, 0.0, b, *d.sigma)) ? 1 : 0;
    }

    bool residuals = true;
    double worstTail = 0.0;
    int permuted = 0;
    for (int n : {2, 3}) {
        const SystemParams p = sampleParams(n, s);
        std::vector<int> sigma(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) {
            sigma[static_cast<std::size_t>(k)] = k;
        }
        do {
            for (int ell = 0; ell < n; ++ell) {
                residuals = residuals &&
                            verifySeriesResiduals(p, permutedPsiSeries(p, sigma, ell, 10), Inhomogeneity::Zero).pass;
                for (int j = 0; j < 3; ++j) {
                    const Point x = cli::samplePointSigmaU(sigma, p.a, p.b, s, 0.5, 0.5);
                    const auto d = classifyDomain(x, p.a, p.b);
                    residuals = residuals && d.sigma && *d.sigma == sigma;
                    const Complex fine = permuteBasis(p, sigma, ell, x, 60).value;
                    const Complex coarse = permuteBasis(p, sigma, ell, x, 30).value;
                    worstTail = std::max(worstTail, std::abs(fine - coarse) / std::abs(fine));
                }
                ++permuted;
            }
        } while (std::next_permutation(sigma.begin(), sigma.end()));
    }
    const bool pass = unique == total && total >= 990 && residuals && worstTail < 1e-6;
    return {pass, std::to_string(unique) + "/" + std::to_string(total) +
                      " points with distinct ratios get exactly one sigma; " + std::to_string(permuted) +
                      " series sigma(Psi) solve the system, converge on sigma(U) samples (|Psi_60 - Psi_30| rel " +
                      fmt("%.1e", worstTail) + ", bound 1e-6)"};
}

} // namespace

int main()
{
    const std::vector<std::pair<const char *, std::function<Outcome()>>> criteria = {
        {"series-integral equivalence", seriesIntegralEquivalence},
        {"system residuals of F", particularResiduals},
        {"homogeneous basis", homogeneousBasis},
        {"contiguity relations", contiguity},
        {"symbolic exactness", symbolicExactness},
        {"degenerate and boundary cases", degenerateCases},
        {"domain logic", domainLogic},
    };
    int failed = 0;
    int index = 0;
    for (const auto &[name, check] : criteria) {
        ++index;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = check();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const auto br = o.detail.find('\n');
        const std::string head = o.detail.substr(0, br);
        const std::string tail = br == std::string::npos ? "" : o.detail.substr(br) + "\n";
        std::printf("[%s] criterion %d, %s: %s (%.1f s)\n%s", o.pass ? "PASS" : "FAIL", index, name, head.c_str(), secs,
                    tail.substr(tail.empty() ? 0 : 1).c_str());
        std::fflush(stdout);
        failed += o.pass ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", index - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
