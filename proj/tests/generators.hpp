#pragma once

#include <Eigen/Dense>

#include <random>

#include "srg/state_space.hpp"
#include "srg/transfer_matrix.hpp"

// Deterministic random-system generators for the property suites.
namespace generators {

using srg::Complex;
using srg::StateSpace;
using srg::TransferMatrix;

// Random poles/zeros away from the imaginary axis: real or conjugate pairs
// with |Re| in [margin, 3].
inline std::vector<Complex> random_root_set(std::mt19937_64& rng, int count, bool allow_rhp,
                                            double margin = 0.1) {
    std::uniform_real_distribution<double> mag(margin, 3.0);
    std::uniform_real_distribution<double> im(0.2, 3.0);
    std::bernoulli_distribution coin(0.5);
    std::vector<Complex> roots;
    while (static_cast<int>(roots.size()) < count) {
        double re = mag(rng) * ((allow_rhp && coin(rng)) ? 1.0 : -1.0);
        if (count - static_cast<int>(roots.size()) >= 2 && coin(rng)) {
            double b = im(rng);
            roots.emplace_back(re, b);
            roots.emplace_back(re, -b);
        } else {
            roots.emplace_back(re, 0.0);
        }
    }
    return roots;
}

inline TransferMatrix random_siso(std::mt19937_64& rng, bool allow_unstable = true,
                                  bool allow_nmp = true, int max_degree = 4) {
    std::uniform_int_distribution<int> deg(1, max_degree);
    std::uniform_real_distribution<double> gain_mag(0.2, 3.0);
    std::bernoulli_distribution coin(0.5);
    int n = deg(rng);
    std::uniform_int_distribution<int> mdist(0, n - 1);
    int m = mdist(rng);
    auto poles = random_root_set(rng, n, allow_unstable);
    auto zeros = random_root_set(rng, m, allow_nmp);
    double gain = gain_mag(rng) * (coin(rng) ? 1.0 : -1.0);
    return TransferMatrix::siso(srg::RationalFunction::from_factors(zeros, poles, gain));
}

// Random proper square system from a random realization; eigenvalues get a
// real shift to mix stable and unstable cases while staying off the axis.
inline TransferMatrix random_mimo(std::mt19937_64& rng, int p, int max_states = 4,
                                  bool allow_unstable = true, bool biproper = false) {
    std::uniform_int_distribution<int> nd(1, max_states);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> shift_dist(0.3, 2.0);
    std::bernoulli_distribution coin(0.5);

    const int n = nd(rng);
    for (int attempt = 0; attempt < 50; ++attempt) {
        StateSpace ss;
        ss.A = Eigen::MatrixXd::NullaryExpr(n, n, [&]() { return gauss(rng); });
        ss.B = Eigen::MatrixXd::NullaryExpr(n, p, [&]() { return gauss(rng); });
        ss.C = Eigen::MatrixXd::NullaryExpr(p, n, [&]() { return gauss(rng); });
        if (biproper)
            ss.D = Eigen::MatrixXd::NullaryExpr(p, p, [&]() { return gauss(rng); });
        else
            ss.D = Eigen::MatrixXd::Zero(p, p);
        if (biproper && std::abs(ss.D.determinant()) < 0.1) continue;

        // push the spectrum left (or leave a mix when unstable is allowed)
        Eigen::VectorXcd eigs = ss.A.eigenvalues();
        double max_re = eigs.real().maxCoeff();
        double target = (allow_unstable && coin(rng)) ? 0.5 : -0.3;
        ss.A -= (max_re - target + shift_dist(rng) * (target < 0 ? 1.0 : 0.0)) *
                Eigen::MatrixXd::Identity(n, n);

        // keep eigenvalues clear of the axis so classification is unambiguous
        bool near_axis = false;
        for (const auto& ev : ss.A.eigenvalues())
            if (std::abs(ev.real()) < 0.05) near_axis = true;
        if (near_axis) continue;
        return srg::ss_to_tf(ss);
    }
    // fall back to a benign diagonal system
    std::vector<std::vector<srg::RationalFunction>> e(static_cast<size_t>(p));
    for (int i = 0; i < p; ++i) {
        e[static_cast<size_t>(i)].resize(static_cast<size_t>(p));
        for (int j = 0; j < p; ++j)
            e[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                i == j ? srg::RationalFunction(srg::Polynomial({1.0}),
                                               srg::Polynomial({1.0 + i, 1.0}))
                       : srg::RationalFunction();
    }
    return TransferMatrix(std::move(e));
}

}  // namespace generators
