#pragma once

#include <vector>

#include "econv/rational.hpp"

namespace econv {

// Dense univariate polynomial with rational coefficients, coeff(i) = x^i term.
// Canonical: no trailing zero coefficients; the zero polynomial is empty.
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);

    static Poly constant(Rational c);
    static Poly monomial(unsigned deg, Rational c = Rational(1));

    bool is_zero() const { return coeffs_.empty(); }
    // degree of the zero polynomial is -1
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rational coeff(unsigned i) const {
        return i < coeffs_.size() ? coeffs_[i] : Rational(0);
    }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rational& c, const Poly& a);
    friend bool operator==(const Poly& a, const Poly& b) = default;

    // x^n (1-x)^m (a + b x + c x^2)
    static Poly integrand_numerator(unsigned n, unsigned m, const Rational& a,
                                    const Rational& b, const Rational& c);

    // Exact sum of coeff(i) / (i+1): the integral over [0,1].
    Rational integral01() const;

  private:
    void trim();
    std::vector<Rational> coeffs_;
};

struct DivmodX2P1Result {
    Poly quotient;
    Rational u;  // constant remainder term
    Rational v;  // linear remainder term
};

// p(x) = quotient(x) * (1 + x^2) + u + v*x, exactly.
DivmodX2P1Result poly_divmod_by_x2p1(const Poly& p);

}  // namespace econv
