#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>

#include "ihg/matrix.hpp"
#include "ihg/param_poly.hpp"

namespace ihg {

/// Normally ordered monomial x^xExp d^dExp in the Weyl algebra of 2n variables.
struct WeylMonomial {
    ExponentOffset x;
    ExponentOffset d;

    friend bool operator==(const WeylMonomial &, const WeylMonomial &) = default;
    friend std::strong_ordering operator<=>(const WeylMonomial &a, const WeylMonomial &b)
    {
        if (auto c = a.x <=> b.x; c != 0) {
            return c;
        }
        return a.d <=> b.d;
    }
};

/// Element of the Weyl algebra C<x_{ij}, d_{ij}> with coefficients in C, stored in
/// normal order (every x to the left of every d). Two operators are equal iff
/// their maps are equal. C is ParamPoly for exact work or Complex after substitution.
template <class C>
class BasicWeylOperator {
public:
    BasicWeylOperator() = default;
    explicit BasicWeylOperator(int n) : n_(n) {}

    static BasicWeylOperator scalar(int n, const C &c);
    static BasicWeylOperator x(int n, int i, int j);
    static BasicWeylOperator d(int n, int i, int j);

    int cols() const noexcept { return n_; }
    const std::map<WeylMonomial, C> &terms() const noexcept { return terms_; }
    bool isZero() const noexcept { return terms_.empty(); }

    void addTerm(const WeylMonomial &m, const C &c);

    /// Largest total d-degree over all terms.
    int derivativeDegree() const;

    BasicWeylOperator &operator+=(const BasicWeylOperator &o);
    BasicWeylOperator &operator-=(const BasicWeylOperator &o);
    friend BasicWeylOperator operator+(BasicWeylOperator a, const BasicWeylOperator &b) { return a += b; }
    friend BasicWeylOperator operator-(BasicWeylOperator a, const BasicWeylOperator &b) { return a -= b; }
    friend BasicWeylOperator operator-(const BasicWeylOperator &a) { return BasicWeylOperator(a.n_) - a; }
    friend BasicWeylOperator operator*(const BasicWeylOperator &a, const BasicWeylOperator &b)
    {
        return multiply(a, b);
    }
    friend BasicWeylOperator operator*(const C &c, const BasicWeylOperator &a)
    {
        return multiply(scalar(a.n_, c), a);
    }
    friend bool operator==(const BasicWeylOperator &a, const BasicWeylOperator &b)
    {
        return a.n_ == b.n_ && (a - b).isZero();
    }

    /// Normally ordered product using [d_{ij}, x_{ij}] = 1 (Leibniz rule per variable).
    static BasicWeylOperator multiply(const BasicWeylOperator &p, const BasicWeylOperator &q);

    std::string str() const;

private:
    void checkSame(const BasicWeylOperator &o) const
    {
        if (o.n_ != n_) {
            throw DomainError("WeylOperator: operators over different numbers of variables");
        }
    }

    int n_ = 0;
    std::map<WeylMonomial, C> terms_;
};

using WeylOperator = BasicWeylOperator<ParamPoly>;
using NumericOperator = BasicWeylOperator<Complex>;

/// Replace every parameter symbol by its value (alpha_1..alpha_n, delta).
NumericOperator substitute(const WeylOperator &op, std::span<const Complex> values);

std::string coefficientString(const ParamPoly &c);
std::string coefficientString(const Complex &c);

} // namespace ihg

#include "ihg/weyl_operator_impl.hpp"
