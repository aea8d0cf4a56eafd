#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ihg/param_poly.hpp"
#include "ihg/system.hpp"
#include "ihg/truncated_series.hpp"

namespace ihg {

/// Sign convention for the second row entry s_{2l} of s^{(l)}.
///
/// Displayed: s_{1l} = sum_{j=l}^{n+1} beta_j, s_{2l} = -sum_{j=l+1}^{n+1} beta_j. Its
/// second row sums to -beta_{n+1}, so A vec(s) != beta.
/// Homogeneous: s_{1l} = sum_{j=l}^{n} beta_j - beta_{n+1}, s_{2l} = beta_{n+1} - sum_{j=l+1}^{n} beta_j,
/// which satisfies A vec(s) = beta and makes Psi^{(l)} a solution.
enum class SConvention { Homogeneous, Displayed };

/// s^{(l)} for beta = (beta_1, ..., beta_{n+1}); l is 0-based.
template <class C>
Mat2xN<C> buildS(const std::vector<C> &beta, int ell, SConvention conv = SConvention::Homogeneous)
{
    const int n = static_cast<int>(beta.size()) - 1;
    if (n < 1 || ell < 0 || ell >= n) {
        throw DomainError("buildS: l out of range");
    }
    Mat2xN<C> s(n, C(0));
    for (int j = 0; j < ell; ++j) {
        s(0, j) = beta[static_cast<std::size_t>(j)];
    }
    for (int j = ell + 1; j < n; ++j) {
        s(1, j) = beta[static_cast<std::size_t>(j)];
    }
    C tail(0);
    for (int j = ell + 1; j < n; ++j) {
        tail = tail + beta[static_cast<std::size_t>(j)];
    }
    const C last = beta[static_cast<std::size_t>(n)];
    if (conv == SConvention::Displayed) {
        s(0, ell) = beta[static_cast<std::size_t>(ell)] + tail + last;
        s(1, ell) = C(0) - (tail + last);
    } else {
        s(0, ell) = beta[static_cast<std::size_t>(ell)] + tail - last;
        s(1, ell) = last - tail;
    }
    return s;
}

Mat2xN<Complex> buildS(const SystemParams &p, int ell, SConvention conv = SConvention::Homogeneous);

/// Generators of M^{(l)}: e_{2k}+e_{1l}-e_{1k}-e_{2l} for k < l, e_{1k}+e_{2l}-e_{2k}-e_{1l} for k > l.
std::vector<ExponentOffset> coneGenerators(int n, int ell);

/// 0/1 weights giving each generator grade 1: the entry (2,k) for k < l and (1,k) for k > l.
ExponentOffset coneGrading(int n, int ell);

/// Gamma(s+1) sum_{k in M, |m| <= K} x^{s+k} / Gamma(s+k+1), coefficients built one
/// generator step at a time. Throws PoleError on a resonant step.
TruncatedSeries psiSeries(const SystemParams &p, int ell, int K, SConvention conv = SConvention::Homogeneous);

SeriesValue evalPsi(const SystemParams &p, int ell, const Point &x, int K);

struct NonresonanceWitness {
    int ell = 0;      // 0-based
    int ellPrime = 0; // 0-based
    int sign = 1;     // s^{(l)} + sign * k
    int signPrime = 1;
    std::vector<int> m;      // coordinates of k along the generators of M^{(l)}
    std::vector<int> mPrime; // coordinates of k' along the generators of M^{(l')}
    ExponentOffset difference; // s^{(l)} - s^{(l')}, an integer matrix
};

struct NonresonanceResult {
    bool nonresonant = true;
    int searchBound = 0;
    std::optional<NonresonanceWitness> witness;
};

/// Bounded search for s^{(l)} + e k = s^{(l')} + e' k' with k, k' cone points of norm at
/// most searchBound. A witness proves resonance; its absence is a bounded certificate.
NonresonanceResult checkTNonresonant(const SystemParams &p, int searchBound);

/// Parameters with alpha permuted: alpha'_j = alpha_{sigma(j)}.
SystemParams permutedParams(const SystemParams &p, const std::vector<int> &sigma);

/// sigma(Psi^{(l)}): Psi^{(l)} built from sigma(beta), with x_{ij} -> x_{i sigma(j)}.
TruncatedSeries permutedPsiSeries(const SystemParams &p, const std::vector<int> &sigma, int ell, int K);
SeriesValue permuteBasis(const SystemParams &p, const std::vector<int> &sigma, int ell, const Point &x, int K);

struct DomainReport {
    std::vector<double> ratios; // |x_{2k}/x_{1k}|
    double bound = 0.0;         // 1 / max(|a|, |b|), infinite when a = b = 0
    bool inU0 = false;
    bool distinct = false;
    std::optional<std::vector<int>> sigma; // x in sigma(U); 0-based
};

DomainReport classifyDomain(const Point &x, Complex a, Complex b);

/// True iff x lies in sigma(U).
bool inSigmaU(const Point &x, Complex a, Complex b, const std::vector<int> &sigma);

/// Validates a 0-based permutation of [0, n).
void checkPermutation(const std::vector<int> &sigma, int n);

} // namespace ihg
