#include "srg/rational.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "srg/errors.hpp"

namespace srg {

namespace {
constexpr double kCancelTol = 1e-7;  // relative cluster radius for root matching
}

RationalFunction::RationalFunction() : num_(), den_(Polynomial::constant(1.0)) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw SchemaError("rational function with zero denominator");
    canonicalize();
}

RationalFunction RationalFunction::constant(double c) {
    return RationalFunction(Polynomial::constant(c), Polynomial::constant(1.0));
}

RationalFunction RationalFunction::from_factors(const std::vector<Complex>& zeros,
                                                const std::vector<Complex>& poles, double gain) {
    return RationalFunction(Polynomial::from_roots(zeros, gain), Polynomial::from_roots(poles));
}

void RationalFunction::canonicalize() {
    if (num_.is_zero()) {
        den_ = Polynomial::constant(1.0);
        return;
    }
    // Relative-size zero test: a numerator that is vanishingly small next to
    // the denominator scale is the zero function (arises from cancellations
    // in minor/determinant arithmetic).
    if (num_.max_abs_coeff() <= 1e-12 * std::max(1.0, den_.max_abs_coeff())) {
        num_ = Polynomial();
        den_ = Polynomial::constant(1.0);
        return;
    }

    std::vector<Complex> nr = num_.roots();
    std::vector<Complex> dr = den_.roots();
    const double num_lead = num_.leading();
    const double den_lead = den_.leading();

    bool cancelled = false;
    std::vector<bool> num_used(nr.size(), false);
    for (auto& pole : dr) {
        size_t best = nr.size();
        double best_d = std::numeric_limits<double>::max();
        for (size_t i = 0; i < nr.size(); ++i) {
            if (num_used[i]) continue;
            double d = std::abs(nr[i] - pole);
            if (d < best_d) {
                best_d = d;
                best = i;
            }
        }
        if (best < nr.size() && best_d <= kCancelTol * (1.0 + std::abs(pole))) {
            num_used[best] = true;
            pole = Complex(std::numeric_limits<double>::quiet_NaN(), 0.0);  // mark cancelled
            cancelled = true;
        }
    }

    if (cancelled) {
        std::vector<Complex> nr2, dr2;
        for (size_t i = 0; i < nr.size(); ++i)
            if (!num_used[i]) nr2.push_back(nr[i]);
        for (const auto& p : dr)
            if (!std::isnan(p.real())) dr2.push_back(p);
        num_ = Polynomial::from_roots(symmetrize_conjugate_pairs(nr2), num_lead / den_lead);
        den_ = Polynomial::from_roots(symmetrize_conjugate_pairs(dr2));
    } else if (den_lead != 1.0) {
        num_ = (1.0 / den_lead) * num_;
        den_ = den_.monic();
    }
}

Complex RationalFunction::eval(Complex s) const { return num_.eval(s) / den_.eval(s); }

double RationalFunction::at_infinity() const {
    if (is_zero()) return 0.0;
    const int rd = relative_degree();
    if (rd > 0) throw improper_system_error("at_infinity of improper entry");
    if (rd < 0) return 0.0;
    return num_.leading() / den_.leading();
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw rank_deficient_error("division by the zero rational function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction operator+(const RationalFunction& a, double c) {
    return a + RationalFunction::constant(c);
}

RationalFunction operator-(const RationalFunction& a, double c) {
    return a - RationalFunction::constant(c);
}

RationalFunction operator*(double k, const RationalFunction& a) {
    return RationalFunction(k * a.num_, a.den_);
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw rank_deficient_error("inverse of the zero rational function");
    return RationalFunction(den_, num_);
}

}  // namespace srg
