#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

// Independent brute-force oracles. These evaluate transfer functions through
// their own complex arithmetic (raw lambdas over std::complex), never through
// the library's extremization path.
namespace oracles {

using Cx = std::complex<double>;

// inf over a dense log-spaced grid [w_lo, w_hi] of |f(jw)|, plus the w = 0
// and w -> infinity candidates supplied by the caller.
inline double dense_min_abs(const std::function<Cx(Cx)>& f, double w_lo, double w_hi, int n,
                            std::vector<double> extra_candidates = {}) {
    double best = std::numeric_limits<double>::infinity();
    const double l0 = std::log10(w_lo), l1 = std::log10(w_hi);
    for (int i = 0; i < n; ++i) {
        double w = std::pow(10.0, l0 + (l1 - l0) * static_cast<double>(i) / (n - 1));
        double v = std::abs(f(Cx(0.0, w)));
        if (std::isfinite(v)) best = std::min(best, v);
    }
    for (double v : extra_candidates) best = std::min(best, v);
    return best;
}

inline double dense_max_abs(const std::function<Cx(Cx)>& f, double w_lo, double w_hi, int n,
                            std::vector<double> extra_candidates = {}) {
    double best = 0.0;
    const double l0 = std::log10(w_lo), l1 = std::log10(w_hi);
    for (int i = 0; i < n; ++i) {
        double w = std::pow(10.0, l0 + (l1 - l0) * static_cast<double>(i) / (n - 1));
        double v = std::abs(f(Cx(0.0, w)));
        if (std::isfinite(v)) best = std::max(best, v);
    }
    for (double v : extra_candidates) best = std::max(best, v);
    return best;
}

// Same sweeps for matrix-valued responses; singular values via Eigen's SVD
// (the library uses closed-form small-matrix formulas, so the routes differ).
inline double dense_min_sigma(const std::function<Eigen::MatrixXcd(Cx)>& f, double w_lo,
                              double w_hi, int n) {
    double best = std::numeric_limits<double>::infinity();
    const double l0 = std::log10(w_lo), l1 = std::log10(w_hi);
    for (int i = 0; i < n; ++i) {
        double w = std::pow(10.0, l0 + (l1 - l0) * static_cast<double>(i) / (n - 1));
        Eigen::MatrixXcd m = f(Cx(0.0, w));
        if (!m.allFinite()) continue;
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
        best = std::min(best, svd.singularValues().minCoeff());
    }
    return best;
}

inline double dense_max_sigma(const std::function<Eigen::MatrixXcd(Cx)>& f, double w_lo,
                              double w_hi, int n) {
    double best = 0.0;
    const double l0 = std::log10(w_lo), l1 = std::log10(w_hi);
    for (int i = 0; i < n; ++i) {
        double w = std::pow(10.0, l0 + (l1 - l0) * static_cast<double>(i) / (n - 1));
        Eigen::MatrixXcd m = f(Cx(0.0, w));
        if (!m.allFinite()) continue;
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
        best = std::max(best, svd.singularValues().maxCoeff());
    }
    return best;
}

// Fixture responses written out longhand.
inline Cx g1_of(Cx s) { return 1.0 / (s * s + s + 1.0); }
inline Cx g2_of(Cx s) { return 1.0 / (s * (s + 1.0)); }
inline Cx g3_of(Cx s) { return 3.0 / ((s - 2.0) * (s / 10.0 + 1.0)); }

inline Eigen::MatrixXcd g4_of(Cx s) {
    Eigen::MatrixXcd m(2, 2);
    m << 1.0 / (s + 1.0), 1.0 / (s + 2.0), 1.0 / (s + 4.0), 1.0 / (s + 3.0);
    return m;
}

}  // namespace oracles
