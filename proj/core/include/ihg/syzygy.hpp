#pragma once

#include <string>
#include <vector>

#include "ihg/param_poly.hpp"
#include "ihg/power_product.hpp"

namespace ihg {

struct SyzygyCondition {
    std::string name; // e.g. "syz1[1,3]" or "syz2[1,2]" (1-based)
    std::string kind; // "syz1" or "syz2"
    bool pass = false;
    int residualTerms = 0; // terms left in the normal form of the difference
};

struct SyzygyReport {
    int n = 0;
    std::vector<SyzygyCondition> conditions;
    bool syz1 = false;
    bool syz2 = false;
    bool pass = false;
};

/// Checks (E_i - beta_i) g_j = (E_j - beta_j) g_i and box g_i = 0 for the right-hand side
/// g = (0, ..., 0, last) exactly, with symbolic alpha and delta. Since [.]_a^b commutes
/// with every operator in x, the check runs on the t-dependent power products.
SyzygyReport checkSyzygyConditions(int n, const PowerProductSum<ParamPoly> &last);

/// Same, with last = t^{gamma+1} prod (x_{1k} + x_{2k} t)^{alpha_k}.
SyzygyReport checkSyzygyConditions(int n);

} // namespace ihg
