#pragma once

#include <cassert>
#include <complex>
#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "ihg/errors.hpp"

namespace ihg {

using Complex = std::complex<double>;

// Dense 2 x n matrix, row-major. Rows are the two rows (x_{1j}, x_{2j}) of the
// variable layout; row and column indices are 0-based.
template <class T>
class Mat2xN {
public:
    Mat2xN() = default;
    explicit Mat2xN(int n, const T &fill = T{}) : n_(n), data_(static_cast<std::size_t>(2 * n), fill)
    {
        if (n < 0) {
            throw DomainError("Mat2xN: negative column count");
        }
    }
    Mat2xN(std::vector<T> row0, std::vector<T> row1) : n_(static_cast<int>(row0.size()))
    {
        if (row0.size() != row1.size()) {
            throw DomainError("Mat2xN: rows of different length");
        }
        data_ = std::move(row0);
        data_.insert(data_.end(), row1.begin(), row1.end());
    }

    int cols() const noexcept { return n_; }

    const T &operator()(int i, int j) const
    {
        assert(i >= 0 && i < 2 && j >= 0 && j < n_);
        return data_[static_cast<std::size_t>(i * n_ + j)];
    }
    T &operator()(int i, int j)
    {
        assert(i >= 0 && i < 2 && j >= 0 && j < n_);
        return data_[static_cast<std::size_t>(i * n_ + j)];
    }

    const std::vector<T> &data() const noexcept { return data_; }

    friend bool operator==(const Mat2xN &, const Mat2xN &) = default;

private:
    int n_ = 0;
    std::vector<T> data_;
};

// Integer 2 x n exponent offset (the e_{ij} calculus of the series).
class ExponentOffset {
public:
    ExponentOffset() = default;
    explicit ExponentOffset(int n) : m_(n, 0) {}
    explicit ExponentOffset(Mat2xN<int> m) : m_(std::move(m)) {}

    static ExponentOffset unit(int n, int i, int j)
    {
        ExponentOffset e(n);
        e.m_(i, j) = 1;
        return e;
    }

    int cols() const noexcept { return m_.cols(); }
    int operator()(int i, int j) const { return m_(i, j); }
    const Mat2xN<int> &matrix() const noexcept { return m_; }

    bool isZero() const
    {
        for (int v : m_.data()) {
            if (v != 0) {
                return false;
            }
        }
        return true;
    }

    // Sum of |entries|.
    int absSum() const
    {
        int s = 0;
        for (int v : m_.data()) {
            s += v < 0 ? -v : v;
        }
        return s;
    }

    ExponentOffset &operator+=(const ExponentOffset &o)
    {
        checkSame(o);
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < cols(); ++j) {
                m_(i, j) += o.m_(i, j);
            }
        }
        return *this;
    }
    ExponentOffset &operator-=(const ExponentOffset &o)
    {
        checkSame(o);
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < cols(); ++j) {
                m_(i, j) -= o.m_(i, j);
            }
        }
        return *this;
    }
    ExponentOffset &operator*=(int c)
    {
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < cols(); ++j) {
                m_(i, j) *= c;
            }
        }
        return *this;
    }
    friend ExponentOffset operator+(ExponentOffset a, const ExponentOffset &b) { return a += b; }
    friend ExponentOffset operator-(ExponentOffset a, const ExponentOffset &b) { return a -= b; }
    friend ExponentOffset operator*(int c, ExponentOffset a) { return a *= c; }
    friend ExponentOffset operator-(ExponentOffset a) { return a *= -1; }

    friend bool operator==(const ExponentOffset &a, const ExponentOffset &b)
    {
        return a.m_.data() == b.m_.data();
    }
    friend std::strong_ordering operator<=>(const ExponentOffset &a, const ExponentOffset &b)
    {
        return a.m_.data() <=> b.m_.data();
    }

    // Column permutation: result(i, j) = this(i, perm[j]).
    ExponentOffset permutedColumns(const std::vector<int> &perm) const
    {
        ExponentOffset r(cols());
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < cols(); ++j) {
                r.m_(i, j) = m_(i, perm[static_cast<std::size_t>(j)]);
            }
        }
        return r;
    }

    std::string str() const;

private:
    void checkSame(const ExponentOffset &o) const
    {
        if (o.cols() != cols()) {
            throw DomainError("ExponentOffset: column count mismatch");
        }
    }

    Mat2xN<int> m_;
};

// Frobenius pairing <w, e>; used for series gradings.
inline int pairing(const ExponentOffset &w, const ExponentOffset &e)
{
    int s = 0;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < e.cols(); ++j) {
            s += w(i, j) * e(i, j);
        }
    }
    return s;
}

using Point = Mat2xN<Complex>;

// Column permutation of a point: result(i, j) = x(i, perm[j]).
template <class T>
Mat2xN<T> permuteColumns(const Mat2xN<T> &x, const std::vector<int> &perm)
{
    if (static_cast<int>(perm.size()) != x.cols()) {
        throw DomainError("permuteColumns: permutation size mismatch");
    }
    Mat2xN<T> r(x.cols());
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < x.cols(); ++j) {
            r(i, j) = x(i, perm[static_cast<std::size_t>(j)]);
        }
    }
    return r;
}

} // namespace ihg
