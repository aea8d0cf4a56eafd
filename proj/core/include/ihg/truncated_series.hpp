#pragma once

#include <map>

#include "ihg/matrix.hpp"

namespace ihg {

/// Truncated series  sum_k c_k x^{s + k}  in the 2n variables x_{ij}.
///
/// The base exponent s is a complex 2 x n matrix; the offsets k are integer matrices.
/// The grade of an offset is <grading, k>, where the grading weights are 0 or 1. For
/// series supported on a cone sum_g m_g * generator_g the grading is chosen so that
/// every generator has grade 1, making the grade equal to |m|.
///
/// order() bounds the grade of every stored offset. reliableOrder() is the grade up
/// to which stored coefficients coincide with those of the untruncated series; each
/// derivative application lowers it by one.
class TruncatedSeries {
public:
    static constexpr int kDefaultOrder = 20;
    static constexpr double kDropBelow = 1e-300;

    TruncatedSeries(Mat2xN<Complex> base, ExponentOffset grading, int order = kDefaultOrder);

    int cols() const noexcept { return base_.cols(); }
    const Mat2xN<Complex> &base() const noexcept { return base_; }
    const ExponentOffset &grading() const noexcept { return grading_; }
    int order() const noexcept { return order_; }
    int reliableOrder() const noexcept { return reliable_; }
    const std::map<ExponentOffset, Complex> &terms() const noexcept { return terms_; }
    bool isZero() const noexcept { return terms_.empty(); }

    int grade(const ExponentOffset &k) const { return pairing(grading_, k); }
    Complex coefficient(const ExponentOffset &k) const;

    /// Adds c to the coefficient at offset k. Rejects NaN and offsets beyond order().
    void add(const ExponentOffset &k, Complex c);

    /// Copy with no terms, same base and grading; order/reliable may be adjusted.
    TruncatedSeries emptyLike(int order, int reliable) const;
    void setReliableOrder(int r) { reliable_ = r; }

    TruncatedSeries &operator+=(const TruncatedSeries &o);
    TruncatedSeries &operator-=(const TruncatedSeries &o);
    TruncatedSeries &operator*=(Complex c);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries &b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries &b) { return a -= b; }
    friend TruncatedSeries operator*(Complex c, TruncatedSeries a) { return a *= c; }

    /// The series g with g(x) = f(y), y_{ij} = x_{i,perm[j]} (f is this series):
    /// column j of f moves to column perm[j] of g.
    TruncatedSeries relabelColumns(const std::vector<int> &perm) const;

private:
    void checkCompatible(const TruncatedSeries &o) const;

    Mat2xN<Complex> base_;
    ExponentOffset grading_;
    int order_;
    int reliable_;
    std::map<ExponentOffset, Complex> terms_;
};

/// theta_{ij} = x_{ij} d_{ij}; i in {0,1}, j in [0, n). Each term is scaled by s_{ij} + k_{ij}.
TruncatedSeries applyEuler(const TruncatedSeries &series, int i, int j);

/// d_{ij}: x^{s+k} -> (s+k)_{ij} x^{s+k-e_{ij}}. Reliable order drops by one.
TruncatedSeries applyPartial(const TruncatedSeries &series, int i, int j);

/// Multiplication by x_{ij}.
TruncatedSeries multiplyX(const TruncatedSeries &series, int i, int j);

/// sum_k c_k prod x_{ij}^{s_{ij}+k_{ij}}, principal powers, summed in sorted offset order.
Complex evaluate(const TruncatedSeries &series, const Point &x);

} // namespace ihg
