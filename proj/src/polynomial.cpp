#include "srg/polynomial.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace srg {

namespace {

// Parlett-Reinsch balancing, restricted to what a companion matrix needs.
void balance_companion(Eigen::MatrixXd& m) {
    const int n = static_cast<int>(m.rows());
    Eigen::MatrixXd off = m;
    off.diagonal().setZero();

    const double gamma = 0.9;
    bool changed;
    do {
        changed = false;
        for (int i = 0; i < n; ++i) {
            const double row_norm = off.row(i).lpNorm<1>();
            const double col_norm = off.col(i).lpNorm<1>();
            if (row_norm == 0.0 || col_norm == 0.0) continue;
            int exponent = 0;
            std::frexp(row_norm / col_norm, &exponent);
            exponent /= 2;
            if (exponent != 0) {
                const double scaled_col = std::ldexp(col_norm, exponent);
                const double scaled_row = std::ldexp(row_norm, -exponent);
                if (scaled_col + scaled_row < gamma * (col_norm + row_norm)) {
                    changed = true;
                    off.row(i) *= std::ldexp(1.0, -exponent);
                    off.col(i) *= std::ldexp(1.0, exponent);
                }
            }
        }
    } while (changed);

    off.diagonal() = m.diagonal();
    m = off;
}

}  // namespace

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(double c) {
    return c == 0.0 ? Polynomial() : Polynomial(std::vector<double>{c});
}

Polynomial Polynomial::variable() { return Polynomial({0.0, 1.0}); }

Polynomial Polynomial::from_roots(const std::vector<Complex>& roots, double leading) {
    if (leading == 0.0) return Polynomial();
    // Multiply real linear factors and conjugate-pair quadratics so the
    // result has exactly real coefficients.
    std::vector<Complex> pending = roots;
    Polynomial p = Polynomial::constant(leading);
    const double pair_tol = 1e-7;
    while (!pending.empty()) {
        Complex r = pending.back();
        pending.pop_back();
        if (std::abs(r.imag()) <= pair_tol * (1.0 + std::abs(r))) {
            p = p * Polynomial({-r.real(), 1.0});
            continue;
        }
        // find the conjugate partner
        auto best = pending.end();
        double best_d = std::numeric_limits<double>::max();
        for (auto it = pending.begin(); it != pending.end(); ++it) {
            double d = std::abs(*it - std::conj(r));
            if (d < best_d) {
                best_d = d;
                best = it;
            }
        }
        if (best == pending.end() || best_d > 1e-3 * (1.0 + std::abs(r))) {
            // Unpaired complex root: fall back to treating its real/imag parts
            // exactly via the quadratic with itself conjugated.
            p = p * Polynomial({std::norm(r), -2.0 * r.real(), 1.0});
            continue;
        }
        Complex rc = 0.5 * (r + std::conj(*best));
        pending.erase(best);
        p = p * Polynomial({std::norm(rc), -2.0 * rc.real(), 1.0});
    }
    return p;
}

void Polynomial::trim() {
    double scale = 0.0;
    for (double c : coeffs_) scale = std::max(scale, std::abs(c));
    if (scale == 0.0) {
        coeffs_.clear();
        return;
    }
    const double tol = 1e-12 * scale;
    while (!coeffs_.empty() && std::abs(coeffs_.back()) <= tol) coeffs_.pop_back();
}

double Polynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0.0;
    return coeffs_[static_cast<size_t>(k)];
}

double Polynomial::max_abs_coeff() const {
    double m = 0.0;
    for (double c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

Complex Polynomial::eval(Complex s) const {
    Complex acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * s + *it;
    return acc;
}

double Polynomial::eval(double s) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * s + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return Polynomial();
    std::vector<double> d(coeffs_.size() - 1);
    for (size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<double>(k);
    return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) throw std::invalid_argument("monic() of zero polynomial");
    std::vector<double> c = coeffs_;
    const double lead = c.back();
    for (double& x : c) x /= lead;
    c.back() = 1.0;
    return Polynomial(std::move(c));
}

void Polynomial::divmod(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r) {
    if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (a.degree() < b.degree()) {
        q = Polynomial();
        r = a;
        return;
    }
    std::vector<double> rem = a.coeffs_;
    std::vector<double> quot(static_cast<size_t>(a.degree() - b.degree()) + 1, 0.0);
    const double lead = b.coeffs_.back();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        double factor = rem[static_cast<size_t>(k + b.degree())] / lead;
        quot[static_cast<size_t>(k)] = factor;
        for (int i = 0; i <= b.degree(); ++i)
            rem[static_cast<size_t>(k + i)] -= factor * b.coeffs_[static_cast<size_t>(i)];
    }
    rem.resize(static_cast<size_t>(std::max(b.degree(), 0)));
    q = Polynomial(std::move(quot));
    r = Polynomial(std::move(rem));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<double> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0.0);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial Polynomial::operator-() const {
    std::vector<double> c = coeffs_;
    for (double& x : c) x = -x;
    return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<double> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(c));
}

Polynomial operator*(double k, const Polynomial& p) {
    std::vector<double> c = p.coeffs_;
    for (double& x : c) x *= k;
    return Polynomial(std::move(c));
}

void sort_complex(std::vector<Complex>& v) {
    std::sort(v.begin(), v.end(), [](const Complex& a, const Complex& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
}

std::vector<Complex> symmetrize_conjugate_pairs(std::vector<Complex> roots, double tol) {
    std::vector<Complex> out;
    out.reserve(roots.size());
    std::vector<bool> used(roots.size(), false);
    for (size_t i = 0; i < roots.size(); ++i) {
        if (used[i]) continue;
        Complex r = roots[i];
        const double scale = 1.0 + std::abs(r);
        if (std::abs(r.imag()) <= tol * scale) {
            out.emplace_back(r.real(), 0.0);
            used[i] = true;
            continue;
        }
        size_t partner = roots.size();
        double best = tol * scale;
        for (size_t j = i + 1; j < roots.size(); ++j) {
            if (used[j]) continue;
            double d = std::abs(roots[j] - std::conj(r));
            if (d <= best) {
                best = d;
                partner = j;
            }
        }
        if (partner < roots.size()) {
            Complex avg = 0.5 * (r + std::conj(roots[partner]));
            out.push_back(avg);
            out.push_back(std::conj(avg));
            used[i] = used[partner] = true;
        } else {
            out.push_back(r);
            used[i] = true;
        }
    }
    sort_complex(out);
    return out;
}

std::vector<Complex> Polynomial::roots() const {
    const int deg = degree();
    if (deg <= 0) return {};
    if (deg == 1) return {Complex(-coeffs_[0] / coeffs_[1], 0.0)};
    if (deg == 2) {
        const double a = coeffs_[2], b = coeffs_[1], c = coeffs_[0];
        const double disc = b * b - 4.0 * a * c;
        std::vector<Complex> r;
        if (disc >= 0.0) {
            // Numerically stable split: avoid cancellation in -b +/- sqrt.
            const double q = -0.5 * (b + (b >= 0 ? 1.0 : -1.0) * std::sqrt(disc));
            if (q != 0.0) {
                r = {Complex(q / a, 0.0), Complex(c / q, 0.0)};
            } else {
                r = {Complex(0.0, 0.0), Complex(-b / a, 0.0)};
            }
        } else {
            const double re = -b / (2.0 * a);
            const double im = std::sqrt(-disc) / (2.0 * a);
            r = {Complex(re, -std::abs(im)), Complex(re, std::abs(im))};
        }
        sort_complex(r);
        return r;
    }

    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(deg, deg);
    companion.diagonal(-1).setOnes();
    const double lead = coeffs_.back();
    for (int i = 0; i < deg; ++i) companion(i, deg - 1) = -coeffs_[static_cast<size_t>(i)] / lead;
    balance_companion(companion);

    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("companion eigenvalue iteration failed");

    std::vector<Complex> r(static_cast<size_t>(deg));
    for (int i = 0; i < deg; ++i) r[static_cast<size_t>(i)] = solver.eigenvalues()(i);
    return symmetrize_conjugate_pairs(std::move(r));
}

}  // namespace srg
