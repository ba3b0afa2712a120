#include "econv/rational.hpp"

namespace econv {

Rational make_rational(Int num, Int den) {
    if (den == 0) throw std::domain_error("make_rational: zero denominator");
    Rational q(std::move(num), std::move(den));
    q.canonicalize();
    return q;
}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Int(text));
        }
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        return make_rational(num, den);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("parse_rational: malformed rational '" + text + "'");
    }
}

std::string to_string(const Int& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Int pow10(unsigned long d) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, d);
    return r;
}

std::string truncate_decimal(const Rational& x, unsigned digits) {
    bool neg = x < 0;
    Rational y = neg ? Rational(-x) : x;
    Int scaled = (y.get_num() * pow10(digits)) / y.get_den();  // floor, y >= 0
    Int ip = scaled / pow10(digits);
    Int fp = scaled % pow10(digits);
    std::string frac = fp.get_str();
    frac.insert(0, digits - frac.size(), '0');
    std::string out = ip.get_str() + "." + frac;
    if (neg && scaled != 0) out.insert(0, 1, '-');
    return out;
}

RationalInterval::RationalInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) throw std::domain_error("RationalInterval: lo > hi");
}

RationalInterval operator+(const RationalInterval& a, const RationalInterval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
}

RationalInterval operator+(const RationalInterval& a, const Rational& c) {
    return {a.lo + c, a.hi + c};
}

RationalInterval scale(const RationalInterval& a, const Rational& c) {
    if (c < 0) return {a.hi * c, a.lo * c};
    return {a.lo * c, a.hi * c};
}

std::string certified_decimal(const RationalInterval& value, unsigned digits) {
    std::string lo = truncate_decimal(value.lo, digits);
    std::string hi = truncate_decimal(value.hi, digits);
    if (lo != hi)
        throw enclosure_error("certified_decimal: enclosure too wide for " +
                              std::to_string(digits) + " digits; refine the enclosure");
    return lo;
}

}  // namespace econv
