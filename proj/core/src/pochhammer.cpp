#include "ihg/pochhammer.hpp"

#include <cmath>
#include <string>

namespace ihg {

Complex pochhammer(Complex z, int m)
{
    if (m < 0) {
        throw DomainError("pochhammer: negative order " + std::to_string(m));
    }
    Complex r(1.0, 0.0);
    for (int i = 0; i < m; ++i) {
        r *= z + static_cast<double>(i);
    }
    return r;
}

Complex pochhammerMulti(std::span<const Complex> alpha, const MultiIndex &m)
{
    if (static_cast<int>(alpha.size()) != m.size()) {
        throw DomainError("pochhammerMulti: dimension mismatch");
    }
    Complex r(1.0, 0.0);
    for (int i = 0; i < m.size(); ++i) {
        r *= pochhammer(alpha[static_cast<std::size_t>(i)], m[i]);
    }
    return r;
}

Complex gammaRatio(Complex s, int k)
{
    Complex r(1.0, 0.0);
    if (k >= 0) {
        for (int i = 1; i <= k; ++i) {
            const Complex f = s + static_cast<double>(i);
            if (f == Complex(0.0, 0.0)) {
                throw PoleError("gammaRatio: Gamma(s+k+1) has a pole (resonant parameter)");
            }
            r /= f;
        }
        return r;
    }
    for (int i = 0; i > k; --i) {
        r *= s + static_cast<double>(i);
    }
    return r;
}

Complex principalPow(Complex base, Complex exponent)
{
    if (base == Complex(0.0, 0.0)) {
        if (exponent == Complex(0.0, 0.0)) {
            return {1.0, 0.0};
        }
        if (exponent.real() > 0.0) {
            return {0.0, 0.0};
        }
        throw BranchError("principalPow: zero base with exponent of non-positive real part");
    }
    if (exponent.imag() == 0.0) {
        const double e = exponent.real();
        if (base.imag() == 0.0 && base.real() > 0.0) {
            return {std::pow(base.real(), e), 0.0};
        }
        if (e == std::round(e) && std::abs(e) < 64.0) {
            return intPow(base, static_cast<int>(e));
        }
    }
    return std::exp(exponent * std::log(base));
}

Complex intPow(Complex z, int k)
{
    if (k < 0) {
        if (z == Complex(0.0, 0.0)) {
            throw BranchError("intPow: negative power of zero");
        }
        return Complex(1.0, 0.0) / intPow(z, -k);
    }
    Complex r(1.0, 0.0);
    Complex b = z;
    for (unsigned u = static_cast<unsigned>(k); u != 0; u >>= 1) {
        if (u & 1U) {
            r *= b;
        }
        b *= b;
    }
    return r;
}

bool isInteger(Complex z, double tol)
{
    const double r = std::round(z.real());
    return std::abs(z.imag()) <= tol && std::abs(z.real() - r) <= tol * std::max(1.0, std::abs(r));
}

} // namespace ihg
