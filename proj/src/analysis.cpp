#include "srg/analysis.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cstdio>
#include <functional>

#include "srg/errors.hpp"

namespace srg {

namespace {

// Fixed generic evaluation points for rank probing; perturbed on the rare
// chance one lands on a pole.
const Complex kProbePoints[] = {
    {0.3178, 0.9424}, {-1.7320, 2.2360},  {2.6457, -0.5773},
    {-0.4142, -1.618}, {1.1447, 3.0777}, {-2.9031, 0.2113}, {0.7071, -2.4494},
};

bool is_safe_eval_point(const TransferMatrix& g, Complex s) {
    for (int i = 0; i < g.size(); ++i)
        for (int j = 0; j < g.size(); ++j) {
            const Polynomial& den = g.at(i, j).den();
            if (std::abs(den.eval(s)) < 1e-6 * std::max(1.0, den.max_abs_coeff())) return false;
        }
    return true;
}

int numeric_rank(const Eigen::MatrixXcd& m) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) <= 0.0) return 0;
    int r = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > 1e-10 * sv(0)) ++r;
    return r;
}

}  // namespace

// Entrywise strictly proper part: the polynomial summand of each entry is
// discarded. The finite McMillan pole structure is unchanged by dropping a
// polynomial matrix (minor denominators divide the same products either way).
TransferMatrix strictly_proper_part(const TransferMatrix& g) {
    const int p = g.size();
    std::vector<std::vector<RationalFunction>> e(static_cast<size_t>(p));
    for (int i = 0; i < p; ++i) {
        e[static_cast<size_t>(i)].resize(static_cast<size_t>(p));
        for (int j = 0; j < p; ++j) {
            const auto& entry = g.at(i, j);
            Polynomial q, r;
            Polynomial::divmod(entry.num(), entry.den(), q, r);
            e[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                RationalFunction(std::move(r), entry.den());
        }
    }
    return TransferMatrix(std::move(e));
}

ZeroSampler::ZeroSampler(const TransferMatrix& g, std::vector<Complex> mcmillan_poles) {
    p_ = g.size();
    const int n = static_cast<int>(mcmillan_poles.size());

    // degree bound for det(G - alpha I) * p(s): per-row worst relative
    // degree, with the diagonal clamped at 0 because of the alpha shift
    int excess = 0;
    for (int i = 0; i < p_; ++i) {
        int row = 0;
        for (int j = 0; j < p_; ++j) {
            int rd = g.at(i, j).is_zero() ? 0 : g.at(i, j).relative_degree();
            if (i == j) rd = std::max(rd, 0);
            row = std::max(row, rd);
        }
        excess += std::max(row, 0);
    }
    degree_bound_ = n + excess + 2;
    samples_ = degree_bound_ + 5;

    double pole_mag = 0.0;
    for (const Complex& pole : mcmillan_poles) pole_mag = std::max(pole_mag, std::abs(pole));
    rho_ = 2.0 + std::sqrt(pole_mag);

    // rotate the circle so no sample point sits near a pole
    double best_phase = 0.0, best_clearance = -1.0;
    for (int c = 0; c < 16; ++c) {
        double phase = 2.0 * M_PI * c / (16.0 * samples_);
        double clearance = std::numeric_limits<double>::max();
        for (int k = 0; k < samples_; ++k) {
            Complex s = rho_ * std::exp(Complex(0.0, 2.0 * M_PI * k / samples_ + phase));
            for (const Complex& pole : mcmillan_poles)
                clearance = std::min(clearance, std::abs(s - pole));
        }
        if (clearance > best_clearance) {
            best_clearance = clearance;
            best_phase = phase;
        }
    }

    s_.resize(static_cast<size_t>(samples_));
    g_at_s_.resize(static_cast<size_t>(samples_));
    pole_poly_at_s_.resize(static_cast<size_t>(samples_));
    for (int k = 0; k < samples_; ++k) {
        Complex s = rho_ * std::exp(Complex(0.0, 2.0 * M_PI * k / samples_ + best_phase));
        s_[static_cast<size_t>(k)] = s;
        g_at_s_[static_cast<size_t>(k)] = g.eval(s);
        entry_scale_ =
            std::max(entry_scale_, g_at_s_[static_cast<size_t>(k)].cwiseAbs().maxCoeff());
        Complex pv = 1.0;
        for (const Complex& pole : mcmillan_poles) pv *= (s - pole);
        pole_poly_at_s_[static_cast<size_t>(k)] = pv;
    }
}

std::vector<Complex> ZeroSampler::zeros(double alpha) const {
    std::vector<Complex> v(static_cast<size_t>(samples_));
    double vmax = 0.0, pmax = 0.0;
    for (int k = 0; k < samples_; ++k) {
        Eigen::MatrixXcd m = g_at_s_[static_cast<size_t>(k)] -
                             alpha * Eigen::MatrixXcd::Identity(p_, p_);
        Complex det = p_ == 1 ? m(0, 0) : Eigen::PartialPivLU<Eigen::MatrixXcd>(m).determinant();
        v[static_cast<size_t>(k)] = det * pole_poly_at_s_[static_cast<size_t>(k)];
        vmax = std::max(vmax, std::abs(v[static_cast<size_t>(k)]));
        pmax = std::max(pmax, std::abs(pole_poly_at_s_[static_cast<size_t>(k)]));
    }

    // identically-zero determinant test against the sampling noise floor
    const double mag = entry_scale_ + std::abs(alpha);
    double noise_scale = pmax * std::pow(mag, p_);
    if (vmax <= 1e-10 * noise_scale)
        throw rank_deficient_error("determinant of shifted system vanishes identically");

    // inverse DFT on the scaled circle: c_m = (1/M) Sum_k v_k s_k^{-m},
    // exact for degrees below the sample count
    std::vector<double> coeffs(static_cast<size_t>(degree_bound_) + 1, 0.0);
    std::vector<Complex> s_inv_pow(static_cast<size_t>(samples_), Complex(1.0, 0.0));
    double rho_pow = 1.0;
    for (int m = 0; m <= degree_bound_; ++m) {
        Complex acc = 0.0;
        for (int k = 0; k < samples_; ++k) acc += v[static_cast<size_t>(k)] * s_inv_pow[static_cast<size_t>(k)];
        double c = acc.real() / samples_;
        if (std::abs(c) < 1e-11 * vmax / rho_pow) c = 0.0;  // below recoverable accuracy
        coeffs[static_cast<size_t>(m)] = c;
        rho_pow *= rho_;
        for (int k = 0; k < samples_; ++k)
            s_inv_pow[static_cast<size_t>(k)] /= s_[static_cast<size_t>(k)];
    }

    Polynomial zero_poly(std::move(coeffs));
    if (zero_poly.is_zero())
        throw rank_deficient_error("determinant of shifted system vanishes identically");
    return zero_poly.roots();
}

// Finite generalized eigenvalues of the Rosenbrock pencil of a minimal
// realization: zeros of det([A - sI, B; C, D]).
std::vector<Complex> pencil_zeros(const StateSpace& ss) {
    const int n = ss.states();
    const int p = ss.inputs();
    const int m = n + p;
    Eigen::MatrixXd pencil_a(m, m), pencil_b(m, m);
    pencil_a << ss.A, ss.B, ss.C, ss.D;
    pencil_b.setZero();
    pencil_b.topLeftCorner(n, n).setIdentity();

    Eigen::GeneralizedEigenSolver<Eigen::MatrixXd> qz(pencil_a, pencil_b, false);
    if (qz.info() != Eigen::Success)
        throw NumericError("pencil_qz", "QZ iteration failed on Rosenbrock pencil");

    double scale = std::max(1.0, pencil_a.cwiseAbs().maxCoeff());
    std::vector<Complex> zeros;
    for (int i = 0; i < m; ++i) {
        Complex alpha = qz.alphas()(i);
        double beta = qz.betas()(i);
        if (std::abs(beta) <= 1e-10 * std::max(1.0, std::abs(alpha))) continue;  // infinite
        Complex z = alpha / beta;
        if (std::abs(z) > 1e8 * scale) continue;
        zeros.push_back(z);
    }
    return symmetrize_conjugate_pairs(std::move(zeros));
}

// Greedy one-to-one match between two zero multisets within
// 1e-5 * (1 + |z|); both routes must pair off completely.
bool zero_sets_agree(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    if (a.size() != b.size()) return false;
    std::vector<bool> used(b.size(), false);
    for (const Complex& z : a) {
        size_t best = b.size();
        double best_d = std::numeric_limits<double>::max();
        for (size_t i = 0; i < b.size(); ++i) {
            if (used[i]) continue;
            double d = std::abs(b[i] - z);
            if (d < best_d) {
                best_d = d;
                best = i;
            }
        }
        if (best == b.size() || best_d > 1e-5 * (1.0 + std::abs(z))) return false;
        used[best] = true;
    }
    return true;
}

}  // namespace

std::vector<Complex> poles(const TransferMatrix& g) {
    // McMillan poles = spectrum of a minimal realization; the minimal state
    // count makes pole multiplicities exact even for repeated poles, which
    // root-clustering of minor denominators cannot deliver.
    StateSpace ss = realize(g.is_proper() ? g : strictly_proper_part(g));
    const int n = ss.states();
    if (n == 0) return {};
    Eigen::EigenSolver<Eigen::MatrixXd> eig(ss.A, false);
    if (eig.info() != Eigen::Success)
        throw NumericError("pole_eig", "eigenvalue iteration failed on minimal realization");
    std::vector<Complex> out(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) out[static_cast<size_t>(i)] = eig.eigenvalues()(i);
    out = symmetrize_conjugate_pairs(std::move(out));
    sort_complex(out);
    return out;
}

int normal_rank(const TransferMatrix& g) {
    int best = 0;
    for (Complex s0 : kProbePoints) {
        Complex s = s0;
        for (int tries = 0; tries < 8 && !is_safe_eval_point(g, s); ++tries)
            s = s * Complex(1.1317, 0.0741) + Complex(0.013, 0.27);
        if (!is_safe_eval_point(g, s)) continue;
        best = std::max(best, numeric_rank(g.eval(s)));
        if (best == g.size()) break;
    }
    return best;
}

std::vector<Complex> transmission_zeros(const TransferMatrix& g) {
    if (normal_rank(g) < g.size())
        throw rank_deficient_error("transmission zeros of rank-deficient system");

    std::vector<Complex> det_route = determinant_route_zeros(g, poles(g));

    if (g.is_proper()) {
        std::vector<Complex> pencil_route = pencil_zeros(realize(g));
        if (!zero_sets_agree(det_route, pencil_route))
            throw NumericError("zero_route_disagreement",
                               "Rosenbrock-pencil and determinant zero routes disagree");
        sort_complex(pencil_route);
        return pencil_route;
    }
    sort_complex(det_route);
    return det_route;
}

SystemClassification classify(const TransferMatrix& g) {
    SystemClassification c;
    c.proper = g.is_proper();
    c.biproper = c.proper && g.is_biproper();
    c.poles = poles(g);
    c.normal_rank = normal_rank(g);

    bool all_strict_lhp = true;
    for (const Complex& pole : c.poles) {
        if (pole.real() > kTolAxis) ++c.n_p;
        if (std::abs(pole.real()) <= kTolAxis) c.has_axis_pole = true;
        if (pole.real() >= -kTolAxis) all_strict_lhp = false;
    }
    c.stable = c.proper && all_strict_lhp;

    if (c.normal_rank == g.size()) {
        c.transmission_zeros = transmission_zeros(g);
        c.minimum_phase = true;
        for (const Complex& z : c.transmission_zeros)
            if (z.real() >= -kTolAxis) c.minimum_phase = false;
    }
    return c;
}

Eigen::MatrixXcd freq_response(const TransferMatrix& g, double omega) {
    const Complex s(0.0, omega);
    for (const Complex& pole : g.entry_poles()) {
        if (std::abs(pole.real()) <= kTolAxis && std::abs(s - pole) <= kTolAxis)
            throw pole_on_grid_error("evaluation frequency coincides with an axis pole");
    }
    return g.eval(s);
}

std::string fingerprint(const TransferMatrix& g) {
    // FNV-1a over a fixed-format dump of the canonical coefficients.
    auto mix = [](uint64_t h, const void* data, size_t len) {
        const auto* bytes = static_cast<const unsigned char*>(data);
        for (size_t i = 0; i < len; ++i) {
            h ^= bytes[i];
            h *= 1099511628211ULL;
        }
        return h;
    };
    uint64_t h = 1469598103934665603ULL;
    int p = g.size();
    h = mix(h, &p, sizeof(p));
    char buf[64];
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) {
            const auto& e = g.at(i, j);
            for (double c : e.num().coeffs()) {
                int len = std::snprintf(buf, sizeof(buf), "%.17g,", c);
                h = mix(h, buf, static_cast<size_t>(len));
            }
            h = mix(h, "/", 1);
            for (double c : e.den().coeffs()) {
                int len = std::snprintf(buf, sizeof(buf), "%.17g,", c);
                h = mix(h, buf, static_cast<size_t>(len));
            }
            h = mix(h, ";", 1);
        }
    int len = std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf, static_cast<size_t>(len));
}

}  // namespace srg
