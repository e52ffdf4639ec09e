#pragma once

#include <Eigen/Core>

#include "srg/rational.hpp"

namespace srg {

// Square real rational transfer matrix G(s). Non-square grids are rejected
// on construction.
class TransferMatrix {
public:
    explicit TransferMatrix(std::vector<std::vector<RationalFunction>> entries);
    static TransferMatrix siso(RationalFunction g);
    static TransferMatrix identity(int p);

    int size() const { return p_; }
    bool is_siso() const { return p_ == 1; }
    const RationalFunction& at(int i, int j) const;
    const RationalFunction& scalar() const;  // SISO convenience

    Eigen::MatrixXcd eval(Complex s) const;

    // G - alpha*I on the diagonal, entries re-canonicalized.
    TransferMatrix shift_by_alpha(double alpha) const;
    // k1*I + k2*G.
    TransferMatrix affine(double k1, double k2) const;

    // Determinant over R(s) by cofactor expansion with canonicalization.
    RationalFunction determinant() const;

    // Algebraic inverse (adjugate/determinant). Throws rank_deficient when
    // the determinant vanishes identically. The result may be improper.
    TransferMatrix inverse() const;

    bool is_proper() const;
    bool is_biproper() const;  // proper with nonsingular feedthrough
    Eigen::MatrixXd feedthrough() const;  // D = G(inf); throws improper_system

    // Multiset of all denominator roots over all entries (used for grid
    // seeding; McMillan poles live in analysis.hpp).
    std::vector<Complex> entry_poles() const;

    friend TransferMatrix operator*(const TransferMatrix& a, const TransferMatrix& b);

private:
    int p_ = 0;
    std::vector<RationalFunction> entries_;  // row-major
};

}  // namespace srg
