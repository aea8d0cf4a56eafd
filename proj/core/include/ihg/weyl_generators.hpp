#pragma once

#include <string>
#include <vector>

#include "ihg/weyl_operator.hpp"

namespace ihg {

// Generators of the incomplete Delta_1 x Delta_{n-1} system as exact Weyl operators.
// All indices are 0-based: row i in {0, 1}, columns j, k in [0, n). Parameters are the
// symbols alpha_1..alpha_n and delta = -gamma - 1.

WeylOperator eulerOp(int n, int i, int j);
/// z_i = theta_{1i} + theta_{2i} - alpha_i
WeylOperator zOp(int n, int i);
/// z = sum_i theta_{2i} - delta
WeylOperator zSumOp(int n);
/// d_{1i} d_{2j} - d_{1j} d_{2i}; i != j (antisymmetric in i, j).
WeylOperator boxOp(int n, int i, int j);

/// Range of the alpha-sum in the up-shift operator along a_{1k}: to n+1 (alpha_{n+1}
/// read as beta_{n+1} = delta) or to n.
enum class AlphaSumRange { UpToNPlusOne, UpToN };

/// S(beta; -a_{1k}) = d_{1k}
WeylOperator shiftDown1k(int n, int k);
/// S(beta; -a_{2k}) = d_{2k}
WeylOperator shiftDown2k(int n, int k);
/// S(beta - a_{1k}; +a_{1k}) = sum_{i!=k} (x_{1i}x_{2k} - x_{1k}x_{2i}) d_{2i} + (sum alpha_i) x_{1k}
WeylOperator shiftUp1k(int n, int k, AlphaSumRange range = AlphaSumRange::UpToN);
/// S(beta - a_{2k}; +a_{2k}) = sum_{i!=k} x_{1k}x_{2i} d_{1i} + (sum_{i!=k} theta_{2i} + alpha_k) x_{2k}
WeylOperator shiftUp2k(int n, int k);

/// Sign of the trailing alpha_k (sum theta_{2i} - delta) term of L_2. The displayed
/// operator adds it; only subtracting it annihilates the integral.
enum class L2Sign { AsDisplayed, Corrected };
/// Range of the sum_i theta_{2i} z_k part of the L_2 reduction.
enum class L2ReductionRange { AllI, ExceptK };

struct L2Variant {
    L2Sign sign = L2Sign::Corrected;
    L2ReductionRange range = L2ReductionRange::ExceptK;
};

/// L_1 = S(beta - a_{1k}; +a_{1k}) d_{1k} - alpha_k (sum alpha_i - delta) + alpha_k (sum theta_{2i} - delta)
WeylOperator buildL1(int n, int k, AlphaSumRange range = AlphaSumRange::UpToN);
/// L_2 = S(beta - a_{2k}; +a_{2k}) d_{2k} - alpha_k delta -/+ alpha_k (sum theta_{2i} - delta)
WeylOperator buildL2(int n, int k, L2Sign sign = L2Sign::Corrected);

struct CombinationTerm {
    WeylOperator coefficient;
    WeylOperator generator;
};
using Combination = std::vector<CombinationTerm>;

/// sum_{i!=k} x_{1i}x_{2k} box(k, i) - sum_i (theta_{2i} - alpha_i) z_k + sum_i theta_{2k} z_i
Combination l1Reduction(int n, int k);
/// sum_{i!=k} x_{1k}x_{2i} box(i, k) + sum_{i in range} theta_{2i} z_k
Combination l2Reduction(int n, int k, L2ReductionRange range = L2ReductionRange::ExceptK);

/// True iff L - sum coefficient * generator is zero in normal form.
bool verifyDecomposition(const WeylOperator &L, const Combination &combination);

struct WeylVerifyEntry {
    int k = 0; // 0-based
    bool l1Ok = false;
    bool l2Ok = false;
    std::string l1Variant;
    std::string l2Variant;
    // Results for the operators and reductions exactly as printed.
    bool l1LiteralOk = false; // alpha-sum to n+1
    bool l1SumToNOk = false;  // alpha-sum to n
    bool l2LiteralOk = false; // displayed sign, displayed reduction
};

/// For every k, tries the printed variants of L_1 and L_2 in order (literal first) and
/// keeps the first one whose reduction is exact.
std::vector<WeylVerifyEntry> weylVerify(int n);

std::string variantName(AlphaSumRange r);
std::string variantName(const L2Variant &v);

/// Variants the symbolic check validates; used by the contiguity operators.
AlphaSumRange validatedAlphaSumRange(int n);
L2Variant validatedL2Variant(int n);

} // namespace ihg
