#include "econv/poly.hpp"

namespace econv {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::constant(Rational c) { return Poly({std::move(c)}); }

Poly Poly::monomial(unsigned deg, Rational c) {
    std::vector<Rational> v(deg + 1, Rational(0));
    v[deg] = std::move(c);
    return Poly(std::move(v));
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
    return Poly(std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Poly(std::move(v));
}

Poly operator*(const Rational& c, const Poly& a) {
    std::vector<Rational> v = a.coeffs_;
    for (auto& x : v) x *= c;
    return Poly(std::move(v));
}

Poly Poly::integrand_numerator(unsigned n, unsigned m, const Rational& a, const Rational& b,
                               const Rational& c) {
    Poly p = monomial(n);
    Poly one_minus_x({Rational(1), Rational(-1)});
    for (unsigned i = 0; i < m; ++i) p = p * one_minus_x;
    return p * Poly({a, b, c});
}

Rational Poly::integral01() const {
    Rational s(0);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        s += coeffs_[i] / Rational(static_cast<unsigned long>(i + 1));
    return s;
}

DivmodX2P1Result poly_divmod_by_x2p1(const Poly& p) {
    std::vector<Rational> rem = p.coeffs();
    std::vector<Rational> q(rem.size() > 2 ? rem.size() - 2 : 0, Rational(0));
    for (size_t i = rem.size(); i-- > 2;) {
        q[i - 2] = rem[i];
        rem[i - 2] -= rem[i];
        rem[i] = 0;
    }
    Rational u = rem.empty() ? Rational(0) : rem[0];
    Rational v = rem.size() > 1 ? rem[1] : Rational(0);
    return {Poly(std::move(q)), std::move(u), std::move(v)};
}

}  // namespace econv
