#pragma once

#include <span>

#include "ihg/matrix.hpp"
#include "ihg/multi_index.hpp"

namespace ihg {

/// Rising factorial (z)_m = z(z+1)...(z+m-1); (z)_0 = 1.
Complex pochhammer(Complex z, int m);

/// Product of componentwise rising factorials (alpha_1)_{m_1} ... (alpha_n)_{m_n}.
Complex pochhammerMulti(std::span<const Complex> alpha, const MultiIndex &m);

/// Gamma(s+1) / Gamma(s+k+1), computed without Gamma.
///
/// k >= 0 gives 1/(s+1)_k and throws PoleError when a factor of (s+1)_k vanishes.
/// k < 0 gives the falling factorial s(s-1)...(s+k+1), which is exactly 0 when it
/// passes through zero (reciprocal Gamma at a non-positive integer).
Complex gammaRatio(Complex s, int k);

/// Principal-branch power base^exponent. 0^w is 0 for Re w > 0 and 1 for w = 0;
/// any other power of zero throws BranchError.
Complex principalPow(Complex base, Complex exponent);

/// z^k for integer k by repeated squaring (k < 0 requires z != 0).
Complex intPow(Complex z, int k);

/// True when z is an integer to within a few ulps.
bool isInteger(Complex z, double tol = 1e-12);

} // namespace ihg
