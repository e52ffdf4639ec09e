#include "doctest.h"

#include "srg/errors.hpp"
#include "srg/rational.hpp"

using srg::Complex;
using srg::Polynomial;
using srg::RationalFunction;

TEST_CASE("canonical form cancels common roots and makes the denominator monic") {
    // (s+1)(s+2) / (2 (s+1)(s+3)) -> 0.5 (s+2) / (s+3)
    Polynomial num = Polynomial({1, 1}) * Polynomial({2, 1});
    Polynomial den = 2.0 * (Polynomial({1, 1}) * Polynomial({3, 1}));
    RationalFunction g(num, den);
    CHECK(g.num().degree() == 1);
    CHECK(g.den().degree() == 1);
    CHECK(g.den().leading() == doctest::Approx(1.0));
    CHECK(std::abs(g.eval(Complex(1.0, 0.0)) - Complex(0.375, 0.0)) < 1e-12);
    REQUIRE(g.poles().size() == 1);
    CHECK(g.poles()[0].real() == doctest::Approx(-3.0));
}

TEST_CASE("zero function and zero denominator") {
    RationalFunction z;
    CHECK(z.is_zero());
    CHECK(z.den().degree() == 0);
    CHECK_THROWS_AS(RationalFunction(Polynomial({1.0}), Polynomial()), srg::SchemaError);

    // exact cancellation in arithmetic collapses to the canonical zero
    RationalFunction g(Polynomial({1.0}), Polynomial({1.0, 1.0}));
    RationalFunction diff = g - g;
    CHECK(diff.is_zero());
    CHECK(diff.den().degree() == 0);
}

TEST_CASE("arithmetic keeps canonical form") {
    RationalFunction g(Polynomial({1.0}), Polynomial({1.0, 1.0}));   // 1/(s+1)
    RationalFunction h(Polynomial({1.0}), Polynomial({2.0, 1.0}));   // 1/(s+2)
    RationalFunction sum = g + h;  // (2s+3)/((s+1)(s+2))
    CHECK(sum.num().degree() == 1);
    CHECK(sum.den().degree() == 2);
    Complex s(0.3, 1.1);
    CHECK(std::abs(sum.eval(s) - (g.eval(s) + h.eval(s))) < 1e-12);

    RationalFunction prod = g * g.inverse();
    CHECK(prod.num().degree() == 0);
    CHECK(prod.den().degree() == 0);
    CHECK(prod.eval(Complex(5.0, 0.0)).real() == doctest::Approx(1.0));
}

TEST_CASE("properness classification") {
    RationalFunction strictly(Polynomial({1.0}), Polynomial({1.0, 1.0}));
    CHECK(strictly.is_proper());
    CHECK(strictly.is_strictly_proper());
    CHECK(strictly.at_infinity() == 0.0);

    RationalFunction biproper(Polynomial({1.0, 2.0}), Polynomial({1.0, 1.0}));
    CHECK(biproper.is_proper());
    CHECK_FALSE(biproper.is_strictly_proper());
    CHECK(biproper.at_infinity() == doctest::Approx(2.0));

    RationalFunction improper(Polynomial({1.0, 1.0}), Polynomial({1.0}));
    CHECK_FALSE(improper.is_proper());
}
