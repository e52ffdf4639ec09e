#include "srg/state_space.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "srg/errors.hpp"

namespace srg {

namespace {

// Greedy multiset LCM over clustered roots: per input multiset, count
// occurrences per cluster and keep the maximum.
struct RootClusters {
    std::vector<Complex> values;
    std::vector<int> max_count;

    void merge(const std::vector<Complex>& roots) {
        std::vector<int> local(values.size(), 0);
        for (const Complex& r : roots) {
            size_t best = values.size();
            double best_d = std::numeric_limits<double>::max();
            for (size_t i = 0; i < values.size(); ++i) {
                double d = std::abs(values[i] - r);
                if (d < best_d) {
                    best_d = d;
                    best = i;
                }
            }
            if (best < values.size() && best_d <= 1e-7 * (1.0 + std::abs(r))) {
                ++local[best];
            } else {
                values.push_back(r);
                max_count.push_back(0);
                local.push_back(1);
            }
        }
        for (size_t i = 0; i < local.size(); ++i)
            max_count[i] = std::max(max_count[i], local[i]);
    }

    std::vector<Complex> multiset() const {
        std::vector<Complex> out;
        for (size_t i = 0; i < values.size(); ++i)
            for (int k = 0; k < max_count[i]; ++k) out.push_back(values[i]);
        return symmetrize_conjugate_pairs(out);
    }
};

// Exact quotient den_lcm / den assuming den's roots are a sub-multiset of
// den_lcm's (both monic). Removal by nearest-root matching.
Polynomial root_quotient(const std::vector<Complex>& lcm_roots, const Polynomial& den) {
    std::vector<Complex> rest = lcm_roots;
    for (const Complex& r : den.roots()) {
        size_t best = rest.size();
        double best_d = std::numeric_limits<double>::max();
        for (size_t i = 0; i < rest.size(); ++i) {
            double d = std::abs(rest[i] - r);
            if (d < best_d) {
                best_d = d;
                best = i;
            }
        }
        if (best == rest.size()) throw NumericError("lcm_quotient", "root not found in LCM");
        rest.erase(rest.begin() + static_cast<long>(best));
    }
    return Polynomial::from_roots(symmetrize_conjugate_pairs(rest));
}

// Orthonormal basis of the column space, singular values above
// 1e-9 * sigma_max kept.
Eigen::MatrixXd orth(const Eigen::MatrixXd& m) {
    if (m.rows() == 0 || m.cols() == 0) return Eigen::MatrixXd(m.rows(), 0);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) <= 0.0) return Eigen::MatrixXd(m.rows(), 0);
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > 1e-9 * sv(0)) ++rank;
    return svd.matrixU().leftCols(rank);
}

// Basis of the smallest A-invariant subspace containing range(B).
Eigen::MatrixXd reachable_basis(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    Eigen::MatrixXd basis = orth(b);
    const int n = static_cast<int>(a.rows());
    for (int iter = 0; iter < n && basis.cols() < n; ++iter) {
        Eigen::MatrixXd grown(n, basis.cols() * 2);
        grown << basis, a * basis;
        Eigen::MatrixXd next = orth(grown);
        if (next.cols() == basis.cols()) break;
        basis = next;
    }
    return basis;
}

}  // namespace

Eigen::MatrixXcd StateSpace::eval(Complex s) const {
    const int n = states();
    if (n == 0) return D.cast<Complex>();
    Eigen::MatrixXcd resolvent =
        (s * Eigen::MatrixXcd::Identity(n, n) - A.cast<Complex>()).lu().solve(B.cast<Complex>());
    return C.cast<Complex>() * resolvent + D.cast<Complex>();
}

StateSpace realize(const TransferMatrix& g) {
    if (!g.is_proper()) throw improper_system_error("realize() requires a proper system");
    const int p = g.size();

    Eigen::MatrixXd d_mat = g.feedthrough();

    // Per-column blocks in controllable canonical form over the column's
    // least common denominator.
    struct Block {
        Polynomial den;
        std::vector<Complex> den_roots;
        std::vector<Polynomial> nums;  // strictly-proper numerators over den, one per output
    };
    std::vector<Block> blocks;
    int n_total = 0;
    for (int j = 0; j < p; ++j) {
        RootClusters lcm;
        for (int i = 0; i < p; ++i) {
            const auto& e = g.at(i, j);
            if (!e.is_zero()) lcm.merge(e.den().roots());
        }
        Block blk;
        blk.den_roots = lcm.multiset();
        blk.den = Polynomial::from_roots(blk.den_roots);
        const int m = blk.den.degree();
        blk.nums.resize(static_cast<size_t>(p));
        for (int i = 0; i < p; ++i) {
            const auto& e = g.at(i, j);
            if (e.is_zero() || m == 0) continue;
            // strictly proper remainder: num - D*den over the entry's den
            Polynomial strict = e.num() - d_mat(i, j) * e.den();
            Polynomial lifted = strict * root_quotient(blk.den_roots, e.den());
            blk.nums[static_cast<size_t>(i)] = std::move(lifted);
        }
        n_total += blk.den.degree();
        blocks.push_back(std::move(blk));
    }

    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n_total, n_total);
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n_total, p);
    Eigen::MatrixXd c = Eigen::MatrixXd::Zero(p, n_total);
    int offset = 0;
    for (int j = 0; j < p; ++j) {
        const Block& blk = blocks[static_cast<size_t>(j)];
        const int m = blk.den.degree();
        if (m == 0) continue;
        for (int k = 0; k + 1 < m; ++k) a(offset + k, offset + k + 1) = 1.0;
        for (int k = 0; k < m; ++k) a(offset + m - 1, offset + k) = -blk.den.coeff(k);
        b(offset + m - 1, j) = 1.0;
        for (int i = 0; i < p; ++i)
            for (int k = 0; k < m; ++k)
                c(i, offset + k) = blk.nums[static_cast<size_t>(i)].coeff(k);
        offset += m;
    }

    if (n_total == 0) {
        StateSpace gain;
        gain.A = a;
        gain.B = b;
        gain.C = c;
        gain.D = d_mat;
        gain.minimal = true;
        return gain;
    }

    // Kalman truncation: controllable then observable part.
    Eigen::MatrixXd v = reachable_basis(a, b);
    Eigen::MatrixXd a1 = v.transpose() * a * v;
    Eigen::MatrixXd b1 = v.transpose() * b;
    Eigen::MatrixXd c1 = c * v;

    Eigen::MatrixXd w = reachable_basis(a1.transpose(), c1.transpose());
    StateSpace ss;
    ss.A = w.transpose() * a1 * w;
    ss.B = w.transpose() * b1;
    ss.C = c1 * w;
    ss.D = d_mat;
    ss.minimal = true;
    return ss;
}

TransferMatrix ss_to_tf(const StateSpace& ss) {
    const int n = ss.states();
    const int p = ss.inputs();
    if (ss.outputs() != p) throw NonsquareSystemError("ss_to_tf requires square D");

    if (n == 0) {
        std::vector<std::vector<RationalFunction>> e(static_cast<size_t>(p));
        for (int i = 0; i < p; ++i) {
            e[static_cast<size_t>(i)].resize(static_cast<size_t>(p));
            for (int j = 0; j < p; ++j)
                e[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    RationalFunction::constant(ss.D(i, j));
        }
        return TransferMatrix(std::move(e));
    }

    // Faddeev-LeVerrier: adj(sI - A) = sum_k M_k s^{n-k}, char poly alongside.
    std::vector<double> char_coeffs(static_cast<size_t>(n) + 1, 0.0);
    char_coeffs[static_cast<size_t>(n)] = 1.0;
    std::vector<Eigen::MatrixXd> m_seq;
    Eigen::MatrixXd m_k = Eigen::MatrixXd::Identity(n, n);
    for (int k = 1; k <= n; ++k) {
        m_seq.push_back(m_k);
        Eigen::MatrixXd am = ss.A * m_k;
        double ck = -am.trace() / static_cast<double>(k);
        char_coeffs[static_cast<size_t>(n - k)] = ck;
        m_k = am + ck * Eigen::MatrixXd::Identity(n, n);
    }
    Polynomial den(char_coeffs);

    std::vector<std::vector<RationalFunction>> e(static_cast<size_t>(p));
    for (int i = 0; i < p; ++i) {
        e[static_cast<size_t>(i)].resize(static_cast<size_t>(p));
        for (int j = 0; j < p; ++j) {
            // numerator of entry (i,j): sum_k (C M_k B)_ij s^{n-k} + D_ij * den
            std::vector<double> num_coeffs(static_cast<size_t>(n), 0.0);
            for (int k = 1; k <= n; ++k) {
                num_coeffs[static_cast<size_t>(n - k)] =
                    (ss.C.row(i) * m_seq[static_cast<size_t>(k - 1)] * ss.B.col(j)).value();
            }
            Polynomial num(num_coeffs);
            num = num + ss.D(i, j) * den;
            e[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                RationalFunction(std::move(num), den);
        }
    }
    return TransferMatrix(std::move(e));
}

}  // namespace srg
