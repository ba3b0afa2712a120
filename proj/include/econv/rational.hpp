#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace econv {

using Int = mpz_class;
using Rational = mpq_class;

// Thrown when a rational enclosure is too wide to certify the requested
// number of decimal digits. Refine the enclosure and retry.
struct enclosure_error : std::runtime_error {
    explicit enclosure_error(const std::string& what) : std::runtime_error(what) {}
};

// Canonical rational num/den with den > 0, gcd(|num|, den) = 1.
// Throws std::domain_error on zero denominator.
Rational make_rational(Int num, Int den);

// Parses "p/q" or "p" (decimal integers, optional leading '-').
Rational parse_rational(const std::string& text);

std::string to_string(const Int& z);
std::string to_string(const Rational& q);  // always "num/den"

Int factorial(unsigned long n);
Int binomial(unsigned long n, unsigned long k);
Int pow10(unsigned long d);

// Truncation toward zero at `digits` fractional digits, e.g. -1.2345 -> "-1.234".
std::string truncate_decimal(const Rational& x, unsigned digits);

// Closed interval of exact rationals, lo <= hi.
struct RationalInterval {
    Rational lo;
    Rational hi;

    RationalInterval(Rational l, Rational h);

    Rational width() const { return hi - lo; }
    Rational mid() const { return (lo + hi) / 2; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    bool contains(const RationalInterval& inner) const {
        return lo <= inner.lo && inner.hi <= hi;
    }
    bool strictly_contains(const RationalInterval& inner) const {
        return lo < inner.lo && inner.hi < hi;
    }
};

RationalInterval operator+(const RationalInterval& a, const RationalInterval& b);
RationalInterval operator+(const RationalInterval& a, const Rational& c);

// Multiplication by an exact rational; endpoints swap when c < 0.
RationalInterval scale(const RationalInterval& a, const Rational& c);

// Decimal string certified by the enclosure: both endpoints must truncate to
// the same `digits` fractional digits, otherwise throws enclosure_error.
std::string certified_decimal(const RationalInterval& value, unsigned digits);

}  // namespace econv
