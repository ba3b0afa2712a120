#pragma once

#include <vector>

#include "econv/eform.hpp"
#include "econv/poly.hpp"

namespace econv {

// Integrand selector for int_0^1 x^n (1-x)^m (a + b x + c x^2) / (1 + x^2) dx.
// (a,b,c) != (0,0,0); all parameters natural, so the integrand is nonnegative.
struct PiIntegrandParams {
    unsigned n, m, a, b, c;
    friend bool operator==(const PiIntegrandParams&, const PiIntegrandParams&) = default;
};

enum class Side { above, below };  // side of pi on which the target lies

struct SearchHit {
    PiIntegrandParams params;
    PiForm value;    // value.t == 0, value.s != 0, -value.r/value.s == target
    Rational scale;  // |value.s|
    Side side;
};

// Exact evaluation: reduce the numerator polynomial modulo 1 + x^2, then
// integrate the quotient term by term; the remainder u + v x contributes
// u * pi/4 + v/2 * ln 2. Throws std::domain_error on the zero triple.
PiForm pi_eval_exact(const PiIntegrandParams& params);

// int_0^1 x^4 (1-x)^4 / (1+x^2) dx == 22/7 - pi, exactly.
bool dalzell_check();

// All parameters with n,m <= max_nm, 1 <= a <= max_coeff, b,c <= max_coeff
// whose integral equals r + s*pi with -r/s == target, ordered by
// (n,m,a,b,c). Parameters with a = 0 are re-parameterizations of a higher-n
// integrand (a factor x moves into x^n) and are not enumerated. Each hit is
// re-verified by exact evaluation before emission.
// Requires target > 0 and max_coeff >= 1.
std::vector<SearchHit> lucas_search(const Rational& target, unsigned max_nm,
                                    unsigned max_coeff);

}  // namespace econv
