#pragma once

#include <complex>
#include <vector>

namespace srg {

using Complex = std::complex<double>;

// Real polynomial in s, coefficients stored in ascending powers.
// The zero polynomial is the empty coefficient list; otherwise the
// highest stored coefficient is nonzero.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<double> coeffs);
    static Polynomial constant(double c);
    static Polynomial variable();  // s

    // Real polynomial with the given conjugate-closed root multiset.
    static Polynomial from_roots(const std::vector<Complex>& roots, double leading = 1.0);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero poly
    const std::vector<double>& coeffs() const { return coeffs_; }
    double coeff(int k) const;  // 0 outside stored range
    double leading() const { return coeffs_.empty() ? 0.0 : coeffs_.back(); }
    double max_abs_coeff() const;

    Complex eval(Complex s) const;
    double eval(double s) const;

    Polynomial derivative() const;
    Polynomial monic() const;

    // Long division: a = q*b + r with deg r < deg b. b must be nonzero.
    static void divmod(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r);

    // All complex roots (with multiplicity), conjugate-closed, sorted by
    // real part then imaginary part. Companion-matrix eigenvalues with
    // Parlett-Reinsch balancing; degrees 1 and 2 in closed form.
    std::vector<Complex> roots() const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(double k, const Polynomial& p);
    Polynomial operator-() const;

private:
    void trim();
    std::vector<double> coeffs_;
};

// Sort helper shared by root-producing routines: by real part, then imaginary.
void sort_complex(std::vector<Complex>& v);

// Force exact conjugate symmetry on a root set of a real polynomial:
// near-real roots are snapped to the axis, pairs are averaged.
std::vector<Complex> symmetrize_conjugate_pairs(std::vector<Complex> roots, double tol = 1e-7);

}  // namespace srg
