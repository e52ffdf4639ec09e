#pragma once

#include <Eigen/Core>

#include "srg/transfer_matrix.hpp"

namespace srg {

// Real state-space realization (A,B,C,D); n = 0 encodes a static gain.
struct StateSpace {
    Eigen::MatrixXd A;
    Eigen::MatrixXd B;
    Eigen::MatrixXd C;
    Eigen::MatrixXd D;
    bool minimal = false;

    int states() const { return static_cast<int>(A.rows()); }
    int inputs() const { return static_cast<int>(B.cols()); }
    int outputs() const { return static_cast<int>(C.rows()); }

    Eigen::MatrixXcd eval(Complex s) const;
};

// Minimal realization of a proper G: per-column controllable canonical
// blocks, then Kalman rank truncation on both sides (cutoff 1e-9 * sigma_max).
// Throws improper_system for improper inputs.
StateSpace realize(const TransferMatrix& g);

// Exact rational transfer matrix of a realization (Faddeev-LeVerrier
// resolvent expansion; entries canonicalized, so non-minimal modes cancel).
TransferMatrix ss_to_tf(const StateSpace& ss);

}  // namespace srg
