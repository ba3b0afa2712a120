#pragma once

#include "econv/rational.hpp"

namespace econv {

// Exact value e_coeff * e + const_coeff with integer coefficients. Every
// integral I_{n,m} and every q*e - p combination lives here; the pair is a
// unique representation, so equality is componentwise.
struct EForm {
    Int e_coeff;
    Int const_coeff;

    friend EForm operator+(const EForm& a, const EForm& b) {
        return {a.e_coeff + b.e_coeff, a.const_coeff + b.const_coeff};
    }
    friend EForm operator-(const EForm& a, const EForm& b) {
        return {a.e_coeff - b.e_coeff, a.const_coeff - b.const_coeff};
    }
    EForm operator-() const { return {-e_coeff, -const_coeff}; }
    friend EForm operator*(const Int& c, const EForm& a) {
        return {c * a.e_coeff, c * a.const_coeff};
    }
    friend bool operator==(const EForm& a, const EForm& b) = default;
};

// "14*e - 38", "-4*e + 11", "0*e + 1"
std::string to_string(const EForm& f);

// Enclosure of the real value given an enclosure of e.
RationalInterval eform_interval(const EForm& f, const RationalInterval& e_encl);

// Decimal string whose `digits` fractional digits are certified correct
// (truncation toward zero). Throws enclosure_error when e_encl is too wide.
std::string eform_to_decimal(const EForm& f, unsigned digits, const RationalInterval& e_encl);

// Exact value r + s*pi + t*ln2 with rational components.
struct PiForm {
    Rational r;
    Rational s;  // coefficient of pi
    Rational t;  // coefficient of ln 2

    friend PiForm operator+(const PiForm& a, const PiForm& b) {
        return {a.r + b.r, a.s + b.s, a.t + b.t};
    }
    friend PiForm operator*(const Rational& c, const PiForm& a) {
        return {c * a.r, c * a.s, c * a.t};
    }
    friend bool operator==(const PiForm& a, const PiForm& b) = default;
};

// "22/7 - 1/1*pi + 0/1*ln2"
std::string to_string(const PiForm& f);

RationalInterval piform_interval(const PiForm& f, const RationalInterval& pi_encl,
                                 const RationalInterval& ln2_encl);

}  // namespace econv
