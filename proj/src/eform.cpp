#include "econv/eform.hpp"

namespace econv {

namespace {

// " + 38" / " - 38" with the sign pulled out
std::string signed_term(const Int& z, const std::string& suffix) {
    Int a = abs(z);
    return (z < 0 ? " - " : " + ") + a.get_str() + suffix;
}

std::string signed_term(const Rational& q, const std::string& suffix) {
    Rational a = abs(q);
    return (q < 0 ? " - " : " + ") + to_string(a) + suffix;
}

}  // namespace

std::string to_string(const EForm& f) {
    return f.e_coeff.get_str() + "*e" + signed_term(f.const_coeff, "");
}

RationalInterval eform_interval(const EForm& f, const RationalInterval& e_encl) {
    return scale(e_encl, Rational(f.e_coeff)) + Rational(f.const_coeff);
}

std::string eform_to_decimal(const EForm& f, unsigned digits, const RationalInterval& e_encl) {
    return certified_decimal(eform_interval(f, e_encl), digits);
}

std::string to_string(const PiForm& f) {
    return to_string(f.r) + signed_term(f.s, "*pi") + signed_term(f.t, "*ln2");
}

RationalInterval piform_interval(const PiForm& f, const RationalInterval& pi_encl,
                                 const RationalInterval& ln2_encl) {
    return scale(pi_encl, f.s) + scale(ln2_encl, f.t) + f.r;
}

}  // namespace econv
