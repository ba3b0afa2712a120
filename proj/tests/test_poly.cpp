#include <doctest.h>

#include <random>

#include "econv/poly.hpp"

using namespace econv;

TEST_CASE("division by 1+x^2: worked cases") {
    SUBCASE("x^4 (1-x)^4") {
        Poly p = Poly::integrand_numerator(4, 4, Rational(1), Rational(0), Rational(0));
        DivmodX2P1Result d = poly_divmod_by_x2p1(p);
        Poly expected({Rational(4), Rational(0), Rational(-4), Rational(0), Rational(5),
                       Rational(-4), Rational(1)});
        CHECK(d.quotient == expected);
        CHECK(d.u == Rational(-4));
        CHECK(d.v == Rational(0));
    }
    SUBCASE("constant 1") {
        DivmodX2P1Result d = poly_divmod_by_x2p1(Poly::constant(Rational(1)));
        CHECK(d.quotient.is_zero());
        CHECK(d.u == Rational(1));
        CHECK(d.v == Rational(0));
    }
    SUBCASE("x") {
        DivmodX2P1Result d = poly_divmod_by_x2p1(Poly::monomial(1));
        CHECK(d.quotient.is_zero());
        CHECK(d.u == Rational(0));
        CHECK(d.v == Rational(1));
    }
}

TEST_CASE("division by 1+x^2 reconstructs the input") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> deg(0, 40);
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 20);
    Poly x2p1({Rational(1), Rational(0), Rational(1)});
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Rational> coeffs;
        int d = deg(rng);
        for (int i = 0; i <= d; ++i) coeffs.push_back(make_rational(num(rng), den(rng)));
        Poly p(coeffs);
        DivmodX2P1Result r = poly_divmod_by_x2p1(p);
        Poly rebuilt = r.quotient * x2p1 + Poly({r.u, r.v});
        CHECK(rebuilt == p);
    }
}

TEST_CASE("integral over [0,1] is term by term") {
    // int_0^1 (1 + 2x + 3x^2) = 1 + 1 + 1
    Poly p({Rational(1), Rational(2), Rational(3)});
    CHECK(p.integral01() == Rational(3));
    CHECK(Poly().integral01() == Rational(0));
}
