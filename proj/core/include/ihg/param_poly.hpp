#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "ihg/matrix.hpp"

namespace ihg {

using Rational = boost::rational<std::int64_t>;

/// Exact polynomial over Q in the parameter symbols alpha_1..alpha_n, delta.
/// Symbol index i < n is alpha_{i+1}; index n is delta. No zero coefficients are stored.
class ParamPoly {
public:
    using Exponents = std::vector<int>;

    ParamPoly() = default;
    ParamPoly(std::int64_t c) : ParamPoly(Rational(c)) {} // NOLINT(google-explicit-constructor)
    ParamPoly(Rational c);                                  // NOLINT(google-explicit-constructor)

    static ParamPoly symbol(int nsym, int index);
    static ParamPoly alpha(int n, int k) { return symbol(n + 1, k); } // 0-based k
    static ParamPoly delta(int n) { return symbol(n + 1, n); }
    // gamma = -delta - 1
    static ParamPoly gamma(int n) { return -delta(n) - ParamPoly(1); }

    bool isZero() const noexcept { return terms_.empty(); }
    // Number of symbols; 0 for a constant that has never met a symbol.
    int symbols() const noexcept { return nsym_; }
    const std::map<Exponents, Rational> &terms() const noexcept { return terms_; }

    ParamPoly &operator+=(const ParamPoly &o);
    ParamPoly &operator-=(const ParamPoly &o);
    ParamPoly &operator*=(const ParamPoly &o);
    friend ParamPoly operator+(ParamPoly a, const ParamPoly &b) { return a += b; }
    friend ParamPoly operator-(ParamPoly a, const ParamPoly &b) { return a -= b; }
    friend ParamPoly operator*(const ParamPoly &a, const ParamPoly &b)
    {
        ParamPoly r = a;
        r *= b;
        return r;
    }
    friend ParamPoly operator-(const ParamPoly &a) { return ParamPoly(-1) * a; }
    friend bool operator==(const ParamPoly &a, const ParamPoly &b);

    /// Numeric value at symbol values (alpha_1..alpha_n, delta).
    Complex substitute(std::span<const Complex> values) const;

    std::string str() const;

private:
    void promote(int nsym);
    void addTerm(Exponents e, const Rational &c);

    int nsym_ = 0;
    std::map<Exponents, Rational> terms_;
};

inline bool coeffIsZero(const ParamPoly &p) { return p.isZero(); }
inline bool coeffIsZero(const Complex &c) { return c == Complex{}; }

} // namespace ihg
