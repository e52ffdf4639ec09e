#include "doctest.h"

#include <random>

#include "srg/polynomial.hpp"

using srg::Complex;
using srg::Polynomial;

TEST_CASE("degree and zero polynomial") {
    CHECK(Polynomial().is_zero());
    CHECK(Polynomial().degree() == -1);
    CHECK(Polynomial({0.0, 0.0}).is_zero());
    CHECK(Polynomial({3.0}).degree() == 0);
    CHECK(Polynomial({1.0, 0.0, 2.0}).degree() == 2);
    CHECK(Polynomial({1.0, 1.0, 0.0}).degree() == 1);  // trailing zero trimmed
}

TEST_CASE("evaluation and arithmetic") {
    Polynomial p({1.0, 2.0, 3.0});  // 1 + 2s + 3s^2
    CHECK(p.eval(2.0) == doctest::Approx(17.0));
    CHECK(std::abs(p.eval(Complex(0.0, 1.0)) - Complex(-2.0, 2.0)) < 1e-14);

    Polynomial q({0.0, 1.0});
    Polynomial prod = p * q;
    CHECK(prod.degree() == 3);
    CHECK(prod.coeff(0) == 0.0);
    CHECK(prod.coeff(3) == 3.0);

    Polynomial sum = p + (-p);
    CHECK(sum.is_zero());
}

TEST_CASE("quadratic roots, both branches") {
    // (s+1)(s+2)
    auto r = Polynomial({2.0, 3.0, 1.0}).roots();
    REQUIRE(r.size() == 2);
    CHECK(r[0].real() == doctest::Approx(-2.0));
    CHECK(r[1].real() == doctest::Approx(-1.0));

    // s^2 + s + 1
    auto c = Polynomial({1.0, 1.0, 1.0}).roots();
    REQUIRE(c.size() == 2);
    CHECK(c[0].real() == doctest::Approx(-0.5));
    CHECK(std::abs(c[0].imag()) == doctest::Approx(std::sqrt(3.0) / 2.0));
    CHECK(c[1] == std::conj(c[0]));
}

TEST_CASE("companion roots against known factorizations") {
    // (s-1)(s+2)(s-3)(s+4) = s^4 + 2s^3 - 13s^2 - 14s + 24
    auto r = Polynomial({24.0, -14.0, -13.0, 2.0, 1.0}).roots();
    REQUIRE(r.size() == 4);
    std::vector<double> expected{-4.0, -2.0, 1.0, 3.0};
    for (size_t i = 0; i < 4; ++i) {
        CHECK(r[i].real() == doctest::Approx(expected[i]).epsilon(1e-9));
        CHECK(std::abs(r[i].imag()) < 1e-9);
    }
}

TEST_CASE("from_roots round trip") {
    std::vector<Complex> roots{{-1.0, 0.0}, {-0.5, 2.0}, {-0.5, -2.0}, {3.0, 0.0}};
    Polynomial p = Polynomial::from_roots(roots, 2.5);
    auto back = p.roots();
    REQUIRE(back.size() == roots.size());
    srg::sort_complex(roots);
    for (size_t i = 0; i < roots.size(); ++i) CHECK(std::abs(back[i] - roots[i]) < 1e-9);
    CHECK(p.leading() == doctest::Approx(2.5));
}

TEST_CASE("random polynomials have conjugate-closed roots") {
    std::mt19937_64 rng(20240901);
    std::uniform_real_distribution<double> coeff(-3.0, 3.0);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> c(8);
        for (double& x : c) x = coeff(rng);
        c.back() = c.back() >= 0 ? c.back() + 0.5 : c.back() - 0.5;
        auto roots = Polynomial(c).roots();
        for (const auto& r : roots) {
            bool has_conj = false;
            for (const auto& q : roots)
                if (std::abs(q - std::conj(r)) < 1e-7 * (1.0 + std::abs(r))) has_conj = true;
            CHECK(has_conj);
        }
        // roots actually annihilate the polynomial
        Polynomial p(c);
        for (const auto& r : roots)
            CHECK(std::abs(p.eval(r)) < 1e-6 * (1.0 + p.max_abs_coeff() * std::pow(std::abs(r) + 1.0, 7)));
    }
}
