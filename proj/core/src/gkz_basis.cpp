#include "ihg/gkz_basis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

#include "ihg/multi_index.hpp"
#include "ihg/pochhammer.hpp"

namespace ihg {

Mat2xN<Complex> buildS(const SystemParams &p, int ell, SConvention conv)
{
    p.validate();
    return buildS(p.beta(), ell, conv);
}

std::vector<ExponentOffset> coneGenerators(int n, int ell)
{
    if (n < 1 || ell < 0 || ell >= n) {
        throw DomainError("coneGenerators: l out of range");
    }
    std::vector<ExponentOffset> gens;
    for (int k = 0; k < n; ++k) {
        if (k == ell) {
            continue;
        }
        ExponentOffset g(n);
        if (k < ell) {
            g += ExponentOffset::unit(n, 1, k);
            g += ExponentOffset::unit(n, 0, ell);
            g -= ExponentOffset::unit(n, 0, k);
            g -= ExponentOffset::unit(n, 1, ell);
        } else {
            g += ExponentOffset::unit(n, 0, k);
            g += ExponentOffset::unit(n, 1, ell);
            g -= ExponentOffset::unit(n, 1, k);
            g -= ExponentOffset::unit(n, 0, ell);
        }
        gens.push_back(g);
    }
    return gens;
}

ExponentOffset coneGrading(int n, int ell)
{
    if (n < 1 || ell < 0 || ell >= n) {
        throw DomainError("coneGrading: l out of range");
    }
    ExponentOffset w(n);
    for (int k = 0; k < n; ++k) {
        if (k < ell) {
            w += ExponentOffset::unit(n, 1, k);
        } else if (k > ell) {
            w += ExponentOffset::unit(n, 0, k);
        }
    }
    return w;
}

namespace {

ExponentOffset conePoint(const std::vector<ExponentOffset> &gens, const MultiIndex &m, int n)
{
    ExponentOffset k(n);
    for (std::size_t g = 0; g < gens.size(); ++g) {
        k += m[static_cast<int>(g)] * gens[g];
    }
    return k;
}

} // namespace

TruncatedSeries psiSeries(const SystemParams &p, int ell, int K, SConvention conv)
{
    p.validate();
    const int n = p.n;
    const Mat2xN<Complex> s = buildS(p, ell, conv);
    const auto gens = coneGenerators(n, ell);
    TruncatedSeries series(s, coneGrading(n, ell), K);
    for (const MultiIndex &m : gradedMultiIndices(n - 1, K)) {
        const ExponentOffset k = conePoint(gens, m, n);
        Complex c(1.0, 0.0);
        for (int i = 0; i < 2 && c != Complex{}; ++i) {
            for (int j = 0; j < n && c != Complex{}; ++j) {
                c *= gammaRatio(s(i, j), k(i, j));
            }
        }
        series.add(k, c);
    }
    return series;
}

SeriesValue evalPsi(const SystemParams &p, int ell, const Point &x, int K)
{
    if (x.cols() != p.n) {
        throw DomainError("evalPsi: point size mismatch");
    }
    SeriesValue out;
    out.value = evaluate(psiSeries(p, ell, K), x);
    out.reliableOrder = K;
    const DomainReport dom = classifyDomain(x, p.a, p.b);
    bool ordered = true;
    for (std::size_t k = 1; k < dom.ratios.size(); ++k) {
        ordered = ordered && dom.ratios[k - 1] < dom.ratios[k];
    }
    out.converged = ordered;
    if (!ordered) {
        out.warnings.push_back("ratios |x_2k/x_1k| not strictly increasing; Psi series may diverge");
    }
    return out;
}

NonresonanceResult checkTNonresonant(const SystemParams &p, int searchBound)
{
    p.validate();
    const int n = p.n;
    NonresonanceResult res;
    res.searchBound = searchBound;
    if (n == 1) {
        return res;
    }
    struct Point2 {
        int sign;
        MultiIndex m;
    };
    std::vector<Mat2xN<Complex>> s;
    std::vector<std::vector<std::pair<ExponentOffset, Point2>>> signedCone(static_cast<std::size_t>(n));
    for (int ell = 0; ell < n; ++ell) {
        s.push_back(buildS(p, ell));
        const auto gens = coneGenerators(n, ell);
        for (const MultiIndex &m : gradedMultiIndices(n - 1, searchBound)) {
            const ExponentOffset k = conePoint(gens, m, n);
            signedCone[static_cast<std::size_t>(ell)].push_back({k, {1, m}});
            if (!k.isZero()) {
                signedCone[static_cast<std::size_t>(ell)].push_back({-k, {-1, m}});
            }
        }
    }
    for (int l1 = 0; l1 < n; ++l1) {
        for (int l2 = l1 + 1; l2 < n; ++l2) {
            Mat2xN<int> d(n);
            bool integral = true;
            for (int i = 0; i < 2 && integral; ++i) {
                for (int j = 0; j < n && integral; ++j) {
                    const Complex diff = s[static_cast<std::size_t>(l1)](i, j) - s[static_cast<std::size_t>(l2)](i, j);
                    integral = isInteger(diff, 1e-9);
                    d(i, j) = static_cast<int>(std::lround(diff.real()));
                }
            }
            if (!integral) {
                continue;
            }
            const ExponentOffset D(d);
            std::map<ExponentOffset, Point2> targets;
            for (const auto &[k, pt] : signedCone[static_cast<std::size_t>(l2)]) {
                targets.emplace(k, pt);
            }
            for (const auto &[k, pt] : signedCone[static_cast<std::size_t>(l1)]) {
                const auto it = targets.find(D + k);
                if (it == targets.end()) {
                    continue;
                }
                NonresonanceWitness w;
                w.ell = l1;
                w.ellPrime = l2;
                w.sign = pt.sign;
                w.signPrime = it->second.sign;
                w.m = pt.m.entries();
                w.mPrime = it->second.m.entries();
                w.difference = D;
                res.nonresonant = false;
                res.witness = w;
                return res;
            }
        }
    }
    return res;
}

void checkPermutation(const std::vector<int> &sigma, int n)
{
    if (static_cast<int>(sigma.size()) != n) {
        throw DomainError("permutation has the wrong length");
    }
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : sigma) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) {
            throw DomainError("not a permutation");
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

SystemParams permutedParams(const SystemParams &p, const std::vector<int> &sigma)
{
    checkPermutation(sigma, p.n);
    SystemParams q = p;
    for (int j = 0; j < p.n; ++j) {
        q.alpha[static_cast<std::size_t>(j)] = p.alpha[static_cast<std::size_t>(sigma[static_cast<std::size_t>(j)])];
    }
    return q;
}

TruncatedSeries permutedPsiSeries(const SystemParams &p, const std::vector<int> &sigma, int ell, int K)
{
    return psiSeries(permutedParams(p, sigma), ell, K).relabelColumns(sigma);
}

SeriesValue permuteBasis(const SystemParams &p, const std::vector<int> &sigma, int ell, const Point &x, int K)
{
    if (x.cols() != p.n) {
        throw DomainError("permuteBasis: point size mismatch");
    }
    SeriesValue out;
    out.value = evaluate(permutedPsiSeries(p, sigma, ell, K), x);
    out.reliableOrder = K;
    const DomainReport dom = classifyDomain(x, p.a, p.b);
    out.converged = dom.distinct && dom.sigma.has_value() && *dom.sigma == sigma;
    if (!out.converged) {
        out.warnings.push_back("point not in sigma(U); series may diverge");
    }
    return out;
}

DomainReport classifyDomain(const Point &x, Complex a, Complex b)
{
    const int n = x.cols();
    DomainReport r;
    const double tmax = std::max(std::abs(a), std::abs(b));
    r.bound = tmax > 0.0 ? 1.0 / tmax : std::numeric_limits<double>::infinity();
    for (int k = 0; k < n; ++k) {
        if (x(0, k) == Complex{}) {
            throw DomainError("classifyDomain: x_{1k} must be nonzero");
        }
        r.ratios.push_back(std::abs(x(1, k) / x(0, k)));
    }
    r.inU0 = std::all_of(r.ratios.begin(), r.ratios.end(), [&](double v) { return v < r.bound; });
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
        return r.ratios[static_cast<std::size_t>(i)] < r.ratios[static_cast<std::size_t>(j)];
    });
    r.distinct = true;
    for (std::size_t k = 1; k < order.size(); ++k) {
        r.distinct = r.distinct && r.ratios[static_cast<std::size_t>(order[k - 1])] <
                                       r.ratios[static_cast<std::size_t>(order[k])];
    }
    if (r.distinct && r.inU0) {
        r.sigma = order;
    }
    return r;
}

bool inSigmaU(const Point &x, Complex a, Complex b, const std::vector<int> &sigma)
{
    checkPermutation(sigma, x.cols());
    const DomainReport r = classifyDomain(x, a, b);
    for (std::size_t k = 0; k < sigma.size(); ++k) {
        const double v = r.ratios[static_cast<std::size_t>(sigma[k])];
        if (!(v < r.bound)) {
            return false;
        }
        if (k > 0 && !(r.ratios[static_cast<std::size_t>(sigma[k - 1])] < v)) {
            return false;
        }
    }
    return true;
}

} // namespace ihg
