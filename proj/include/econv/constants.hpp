#pragma once

#include "econv/rational.hpp"

namespace econv {

// Taylor-series enclosure of e: partial sum of 1/j! up to the smallest N whose
// tail bound 2/(N+1)! drops below 10^-(digits+1). Width < 10^-digits.
RationalInterval e_reference(unsigned digits);

// Machin-formula enclosure of pi (16 atan 1/5 - 4 atan 1/239, alternating
// series partial sums). Width < 10^-digits.
RationalInterval pi_reference(unsigned digits);

// Enclosure of ln 2 from sum 1/(n 2^n) with its geometric tail bound.
// Width < 10^-digits.
RationalInterval ln2_reference(unsigned digits);

}  // namespace econv
