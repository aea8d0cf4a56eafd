#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "ihg/matrix.hpp"
#include "ihg/param_poly.hpp"
#include "ihg/pochhammer.hpp"
#include "ihg/weyl_operator.hpp"

namespace ihg {

/// Parameters seen by the power-product calculus: exact symbols or numbers.
template <class C>
struct PowerProductContext {
    int n = 0;
    std::vector<C> alpha;
    C gamma;
};

/// Symbolic context: alpha_k are symbols, gamma = -delta - 1.
PowerProductContext<ParamPoly> symbolicContext(int n);

/// coeff * t^{gamma+1+tOffset} * x^monomial * prod_k (x_{1k} + x_{2k} t)^{alpha_k + formOffsets[k]}
template <class C>
struct PowerProductTerm {
    C coeff;
    int tOffset = 0;
    ExponentOffset monomial;
    std::vector<int> formOffsets;

    auto key() const { return std::tie(tOffset, monomial, formOffsets); }
};

/// Finite sum of power-product terms. The family is closed under d_{ij}, x_{ij}
/// and t multiplication, so every operator of the system acts on it exactly.
///
/// Normal form: with d_k the least form offset over all terms, each term's factor
/// (x_{1k} + x_{2k} t)^{offset - d_k} is expanded binomially and like terms are
/// merged. Every term then shares prod (x_{1k}+x_{2k}t)^{alpha_k+d_k}, the rest is a
/// Laurent polynomial in t and x, and the sum is zero iff no term survives.
template <class C>
class PowerProductSum {
public:
    using Term = PowerProductTerm<C>;

    PowerProductSum() = default;
    explicit PowerProductSum(int n) : n_(n) {}

    /// g(t, x) = t^{gamma+1} prod (x_{1k}+x_{2k}t)^{alpha_k}
    static PowerProductSum boundaryFunction(int n);
    /// t^gamma prod (x_{1k}+x_{2k}t)^{alpha_k}, the integrand of Phi.
    static PowerProductSum integrand(int n);

    int cols() const noexcept { return n_; }
    const std::vector<Term> &terms() const noexcept { return terms_; }
    bool isZero() const noexcept { return terms_.empty(); }

    void add(Term t);
    PowerProductSum &operator+=(const PowerProductSum &o);
    PowerProductSum &operator-=(const PowerProductSum &o);
    friend PowerProductSum operator+(PowerProductSum a, const PowerProductSum &b) { return a += b; }
    friend PowerProductSum operator-(PowerProductSum a, const PowerProductSum &b) { return a -= b; }

    PowerProductSum scaled(const C &c) const;
    PowerProductSum multipliedByX(int i, int j) const;
    PowerProductSum multipliedByT(int power = 1) const;
    PowerProductSum partial(const PowerProductContext<C> &ctx, int i, int j) const;

    /// Canonical form described above.
    PowerProductSum normalized() const;

private:
    int n_ = 0;
    std::vector<Term> terms_;
};

/// Applies a normally ordered operator: derivatives first, then x-multiplication.
/// The result is normalized.
template <class C>
PowerProductSum<C> applyG(const PowerProductContext<C> &ctx, const BasicWeylOperator<C> &op,
                          const PowerProductSum<C> &g);

/// Numeric value at (t, x) with principal powers.
Complex evaluate(const PowerProductContext<Complex> &ctx, const PowerProductSum<Complex> &g, Complex t,
                 const Point &x);

} // namespace ihg

#include "ihg/power_product_impl.hpp"
