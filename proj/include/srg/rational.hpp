#pragma once

#include <optional>

#include "srg/polynomial.hpp"

namespace srg {

// Scalar element of R(s). Canonical form: common num/den roots cancelled
// (approximate root matching, cluster radius 1e-7 relative) and a monic
// denominator. The zero function is 0/1.
class RationalFunction {
public:
    RationalFunction();  // 0/1
    RationalFunction(Polynomial num, Polynomial den);
    static RationalFunction constant(double c);
    static RationalFunction from_factors(const std::vector<Complex>& zeros,
                                         const std::vector<Complex>& poles, double gain);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    Complex eval(Complex s) const;

    std::vector<Complex> poles() const { return den_.roots(); }
    std::vector<Complex> zeros() const { return num_.roots(); }

    // deg num - deg den; <= 0 for proper entries.
    int relative_degree() const { return num_.degree() - den_.degree(); }
    bool is_proper() const { return is_zero() || relative_degree() <= 0; }
    bool is_strictly_proper() const { return is_zero() || relative_degree() < 0; }

    // Value at s -> infinity for proper entries.
    double at_infinity() const;

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, double c);
    friend RationalFunction operator-(const RationalFunction& a, double c);
    friend RationalFunction operator*(double k, const RationalFunction& a);

    RationalFunction inverse() const;  // throws rank_deficient on 0

private:
    void canonicalize();
    Polynomial num_;
    Polynomial den_;
};

}  // namespace srg
