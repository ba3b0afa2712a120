#include "econv/constants.hpp"

namespace econv {

RationalInterval e_reference(unsigned digits) {
    Rational tol(Int(1), pow10(digits + 1));
    Rational sum(1);
    Int fact(1);
    unsigned long n = 0;
    Rational tail;
    do {
        ++n;
        fact *= n;
        sum += make_rational(1, fact);
        tail = make_rational(2, fact * Int(n + 1));
    } while (tail >= tol);
    return {sum, sum + tail};
}

namespace {

// atan(1/x) = sum_j (-1)^j / ((2j+1) x^(2j+1)); consecutive partial sums of an
// alternating series with decreasing terms enclose the limit.
RationalInterval atan_inv_enclosure(unsigned long x, const Rational& tol) {
    Rational below(0), above(0);  // partial sums bracketing atan(1/x)
    Int xpow(x);
    Int xsq = Int(x) * Int(x);
    unsigned long j = 0;
    Rational s(0);
    for (;;) {
        Rational term = make_rational(1, Int(2 * j + 1) * xpow);
        if (j % 2 == 0) {
            s += term;
            above = s;
        } else {
            s -= term;
            below = s;
        }
        if (term < tol && j >= 1) break;
        ++j;
        xpow *= xsq;
    }
    return {below, above};
}

}  // namespace

RationalInterval pi_reference(unsigned digits) {
    // 16 w5 + 4 w239 < 20 tol <= 10^-digits with tol = 10^-(digits+2) / 2
    Rational tol = make_rational(1, 2 * pow10(digits + 2));
    RationalInterval a5 = atan_inv_enclosure(5, tol);
    RationalInterval a239 = atan_inv_enclosure(239, tol);
    return scale(a5, Rational(16)) + scale(a239, Rational(-4));
}

RationalInterval ln2_reference(unsigned digits) {
    // ln 2 = sum_{n>=1} 1/(n 2^n); tail after N is below 1/((N+1) 2^N)
    Rational tol(Int(1), pow10(digits + 1));
    Rational sum(0);
    Int twopow(1);
    unsigned long n = 0;
    Rational tail;
    do {
        ++n;
        twopow *= 2;
        sum += make_rational(1, Int(n) * twopow);
        tail = make_rational(1, Int(n + 1) * twopow);
    } while (tail >= tol);
    return {sum, sum + tail};
}

}  // namespace econv
