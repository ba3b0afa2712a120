#include <doctest.h>

#include "econv/constants.hpp"
#include "econv/integrals.hpp"

using namespace econv;

TEST_CASE("base row m=0") {
    IntegralTable t;
    CHECK(t.eval(0, 0) == EForm{1, -1});
    CHECK(t.eval(1, 0) == EForm{0, 1});
    CHECK(t.eval(2, 0) == EForm{1, -2});
}

TEST_CASE("base column n=0") {
    IntegralTable t;
    CHECK(t.eval(0, 1) == EForm{1, -2});
    CHECK(t.eval(0, 2) == EForm{2, -5});
}

TEST_CASE("interior values via the two-term recurrence") {
    IntegralTable t;
    CHECK(t.eval(2, 2) == EForm{14, -38});
    CHECK(t.eval(1, 1) == EForm{-1, 3});
    CHECK(t.eval(1, 2) == EForm{-4, 11});
    CHECK(t.eval(2, 1) == EForm{3, -8});
}

TEST_CASE("lemma identities recheck exactly") {
    IntegralTable t;
    LemmaCheck c11 = t.check_lemma({1, 1});
    CHECK(c11.pascal_ok);
    CHECK(c11.parts_ok);
    LemmaCheck c22 = t.check_lemma({2, 2});
    CHECK(c22.pascal_ok);
    CHECK(c22.parts_ok);
    CHECK_THROWS_AS(t.check_lemma({0, 1}), std::domain_error);
    CHECK_THROWS_AS(t.check_lemma({3, 0}), std::domain_error);
}

TEST_CASE("lemma identities hold across the table") {
    IntegralTable t;
    for (unsigned n = 1; n <= 60; ++n) {
        for (unsigned m = 1; m <= 60; ++m) {
            LemmaCheck c = t.check_lemma({n, m});
            REQUIRE(c.pascal_ok);
            REQUIRE(c.parts_ok);
        }
    }
}

TEST_CASE("beta bound values") {
    CHECK(beta_bound({2, 2}) == make_rational(1, 30));
    CHECK(beta_bound({0, 0}) == Rational(1));
    CHECK(beta_bound({4, 4}) == make_rational(1, 630));
}

TEST_CASE("diagonal bound values") {
    CHECK(diagonal_bound(1) == make_rational(1, 4));
    CHECK(diagonal_bound(2) == make_rational(1, 16));
    CHECK(diagonal_bound(5) == make_rational(1, 1024));
    CHECK_THROWS_AS(diagonal_bound(0), std::domain_error);
}

TEST_CASE("integrals are positive and below both bounds") {
    IntegralTable t;
    RationalInterval e = e_reference(400);
    for (unsigned n = 0; n <= 60; ++n) {
        for (unsigned m = 0; m <= 60; ++m) {
            RationalInterval value = eform_interval(t.eval(n, m), e);
            REQUIRE(value.lo > 0);
            // conservative comparison: sup(I) against inf(bound * e)
            REQUIRE(value.hi <= beta_bound({n, m}) * e.lo);
        }
    }
    for (unsigned k = 1; k <= 60; ++k) {
        RationalInterval value = eform_interval(t.eval(k, k), e);
        REQUIRE(value.hi <= diagonal_bound(k) * e.lo);
    }
}

TEST_CASE("diagonal e-coefficient alternates in sign") {
    IntegralTable t;
    for (unsigned k = 1; k <= 30; ++k) {
        Int coeff = t.eval(k, k).e_coeff;
        if (k % 2 == 0)
            CHECK(coeff > 0);
        else
            CHECK(coeff < 0);
    }
}
