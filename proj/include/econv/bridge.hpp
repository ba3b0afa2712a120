#pragma once

#include <string>
#include <vector>

#include "econv/cf.hpp"
#include "econv/constants.hpp"
#include "econv/eform.hpp"
#include "econv/integrals.hpp"

namespace econv {

// diag:  I_{k,k}   = (-1)^k     k! (q_{3k-1} e - p_{3k-1})   (k >= 1)
// upper: I_{k,k+1} = (-1)^k     k! (q_{3k+1} e - p_{3k+1})   (k >= 0)
// lower: I_{k+1,k} = (-1)^(k+1) k! (q_{3k}   e - p_{3k})     (k >= 1)
enum class IdentityVariant { diag, upper, lower };

const char* variant_name(IdentityVariant v);

struct CheckReport {
    unsigned k;
    IdentityVariant variant;
    EForm lhs;  // exact integral
    EForm rhs;  // signed k!-scaled convergent combination
    bool holds;
};

CheckReport theorem_identity(unsigned k, IdentityVariant variant);

// All admissible (k, variant) with k <= max_k, ordered by (k, diag < upper
// < lower); 3*max_k + 1 reports. Requires max_k >= 1.
std::vector<CheckReport> verify_range(unsigned max_k);

// Certified bracket of e with endpoints p_{3k-1}/q_{3k-1} and
// p_{3k+2}/q_{3k+2} (consecutive diagonal convergents); requires k >= 1.
RationalInterval bracket_e(unsigned k);

struct EApproximation {
    std::string decimal;     // "2." followed by `digits` certified digits
    unsigned witness_k;      // smallest k whose bracket certifies them
    RationalInterval interval;
};

// Decimal approximation of e with `digits` certified fractional digits,
// obtained by walking brackets until one is narrow enough. digits >= 1.
EApproximation approx_e(unsigned digits);

}  // namespace econv
