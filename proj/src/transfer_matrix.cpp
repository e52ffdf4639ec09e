#include "srg/transfer_matrix.hpp"

#include <Eigen/Dense>

#include <stdexcept>

#include "srg/errors.hpp"

namespace srg {

TransferMatrix::TransferMatrix(std::vector<std::vector<RationalFunction>> entries) {
    if (entries.empty()) throw SchemaError("empty transfer matrix");
    p_ = static_cast<int>(entries.size());
    for (const auto& row : entries)
        if (static_cast<int>(row.size()) != p_)
            throw NonsquareSystemError("transfer matrix must be square");
    entries_.reserve(static_cast<size_t>(p_) * static_cast<size_t>(p_));
    for (auto& row : entries)
        for (auto& e : row) entries_.push_back(std::move(e));
}

TransferMatrix TransferMatrix::siso(RationalFunction g) {
    return TransferMatrix({{std::move(g)}});
}

TransferMatrix TransferMatrix::identity(int p) {
    std::vector<std::vector<RationalFunction>> e(static_cast<size_t>(p));
    for (int i = 0; i < p; ++i) {
        e[static_cast<size_t>(i)].resize(static_cast<size_t>(p));
        for (int j = 0; j < p; ++j)
            e[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                RationalFunction::constant(i == j ? 1.0 : 0.0);
    }
    return TransferMatrix(std::move(e));
}

const RationalFunction& TransferMatrix::at(int i, int j) const {
    return entries_[static_cast<size_t>(i) * static_cast<size_t>(p_) + static_cast<size_t>(j)];
}

const RationalFunction& TransferMatrix::scalar() const {
    if (p_ != 1) throw std::logic_error("scalar() on MIMO system");
    return entries_[0];
}

Eigen::MatrixXcd TransferMatrix::eval(Complex s) const {
    Eigen::MatrixXcd m(p_, p_);
    for (int i = 0; i < p_; ++i)
        for (int j = 0; j < p_; ++j) m(i, j) = at(i, j).eval(s);
    return m;
}

TransferMatrix TransferMatrix::shift_by_alpha(double alpha) const { return affine(-alpha, 1.0); }

TransferMatrix TransferMatrix::affine(double k1, double k2) const {
    std::vector<std::vector<RationalFunction>> e(static_cast<size_t>(p_));
    for (int i = 0; i < p_; ++i) {
        e[static_cast<size_t>(i)].resize(static_cast<size_t>(p_));
        for (int j = 0; j < p_; ++j) {
            RationalFunction v = k2 * at(i, j);
            if (i == j) v = v + k1;
            e[static_cast<size_t>(i)][static_cast<size_t>(j)] = std::move(v);
        }
    }
    return TransferMatrix(std::move(e));
}

namespace {

RationalFunction det_recursive(const TransferMatrix& g, std::vector<int>& rows,
                               std::vector<int>& cols) {
    const size_t k = rows.size();
    if (k == 1) return g.at(rows[0], cols[0]);
    if (k == 2)
        return g.at(rows[0], cols[0]) * g.at(rows[1], cols[1]) -
               g.at(rows[0], cols[1]) * g.at(rows[1], cols[0]);
    RationalFunction acc;
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    for (size_t j = 0; j < k; ++j) {
        if (g.at(rows[0], cols[j]).is_zero()) continue;
        std::vector<int> sub_cols;
        sub_cols.reserve(k - 1);
        for (size_t m = 0; m < k; ++m)
            if (m != j) sub_cols.push_back(cols[m]);
        RationalFunction term = g.at(rows[0], cols[j]) * det_recursive(g, sub_rows, sub_cols);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace

RationalFunction TransferMatrix::determinant() const {
    std::vector<int> idx(static_cast<size_t>(p_));
    for (int i = 0; i < p_; ++i) idx[static_cast<size_t>(i)] = i;
    std::vector<int> idx2 = idx;
    return det_recursive(*this, idx, idx2);
}

TransferMatrix TransferMatrix::inverse() const {
    RationalFunction det = determinant();
    if (det.is_zero()) throw rank_deficient_error("inverse of rank-deficient transfer matrix");
    if (p_ == 1) return TransferMatrix::siso(scalar().inverse());

    std::vector<std::vector<RationalFunction>> inv(static_cast<size_t>(p_));
    for (auto& row : inv) row.resize(static_cast<size_t>(p_));
    for (int i = 0; i < p_; ++i) {
        for (int j = 0; j < p_; ++j) {
            // adjugate: cofactor of (j,i)
            std::vector<int> rows, cols;
            for (int r = 0; r < p_; ++r)
                if (r != j) rows.push_back(r);
            for (int c = 0; c < p_; ++c)
                if (c != i) cols.push_back(c);
            RationalFunction minor = det_recursive(*this, rows, cols);
            if ((i + j) % 2 != 0) minor = -minor;
            inv[static_cast<size_t>(i)][static_cast<size_t>(j)] = minor / det;
        }
    }
    TransferMatrix h(std::move(inv));

    // Spot-check G*H = I at a couple of generic points.
    for (Complex s : {Complex(0.31, 0.89), Complex(-1.7, 2.3)}) {
        Eigen::MatrixXcd prod = eval(s) * h.eval(s);
        if (!prod.allFinite()) continue;  // evaluation point hit a pole
        double err = (prod - Eigen::MatrixXcd::Identity(p_, p_)).cwiseAbs().maxCoeff();
        if (err > 1e-6 * std::max(1.0, prod.cwiseAbs().maxCoeff()))
            throw NumericError("inverse_check", "inverse verification failed");
    }
    return h;
}

bool TransferMatrix::is_proper() const {
    for (const auto& e : entries_)
        if (!e.is_proper()) return false;
    return true;
}

bool TransferMatrix::is_biproper() const {
    if (!is_proper()) return false;
    Eigen::MatrixXd d = feedthrough();
    return std::abs(Eigen::FullPivLU<Eigen::MatrixXd>(d).determinant()) >
           1e-12 * std::max(1.0, d.cwiseAbs().maxCoeff());
}

Eigen::MatrixXd TransferMatrix::feedthrough() const {
    Eigen::MatrixXd d(p_, p_);
    for (int i = 0; i < p_; ++i)
        for (int j = 0; j < p_; ++j) d(i, j) = at(i, j).at_infinity();
    return d;
}

std::vector<Complex> TransferMatrix::entry_poles() const {
    std::vector<Complex> all;
    for (const auto& e : entries_) {
        auto r = e.poles();
        all.insert(all.end(), r.begin(), r.end());
    }
    sort_complex(all);
    return all;
}

TransferMatrix operator*(const TransferMatrix& a, const TransferMatrix& b) {
    if (a.p_ != b.p_) throw NonsquareSystemError("dimension mismatch in product");
    const int p = a.p_;
    std::vector<std::vector<RationalFunction>> e(static_cast<size_t>(p));
    for (int i = 0; i < p; ++i) {
        e[static_cast<size_t>(i)].resize(static_cast<size_t>(p));
        for (int j = 0; j < p; ++j) {
            RationalFunction acc;
            for (int k = 0; k < p; ++k) acc = acc + a.at(i, k) * b.at(k, j);
            e[static_cast<size_t>(i)][static_cast<size_t>(j)] = std::move(acc);
        }
    }
    return TransferMatrix(std::move(e));
}

}  // namespace srg
