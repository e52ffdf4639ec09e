#include "srg/region.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <mutex>

#include "parallel.hpp"
#include "srg/errors.hpp"
#include "srg/state_space.hpp"

namespace srg {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void sv_range(const Eigen::MatrixXcd& m, double& lo, double& hi) {
    const int p = static_cast<int>(m.rows());
    if (p == 1) {
        lo = hi = std::abs(m(0, 0));
        return;
    }
    if (p == 2) {
        const double t = m.squaredNorm();
        const double d2 = std::norm(m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0));
        const double disc = std::sqrt(std::max(t * t - 4.0 * d2, 0.0));
        hi = std::sqrt(0.5 * (t + disc));
        lo = std::sqrt(std::max(0.5 * (t - disc), 0.0));
        return;
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    hi = svd.singularValues()(0);
    lo = svd.singularValues()(svd.singularValues().size() - 1);
}

// Golden-section minimization of f over [a, b]; returns the best value seen.
double golden_min(const std::function<double(double)>& f, double a, double b, int iters) {
    const double invphi = 0.6180339887498949;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    double best = std::min(f1, f2);
    for (int i = 0; i < iters; ++i) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        }
        best = std::min(best, std::min(f1, f2));
    }
    return best;
}

// Cached frequency sweep of G(jw); shared across all alpha.
struct FreqTable {
    const TransferMatrix* g = nullptr;
    int p = 0;
    std::vector<double> w;
    std::vector<Eigen::MatrixXcd> gw;
    std::vector<char> valid;
    bool improper = false;
    bool axis_pole = false;
    bool has_d = false;
    Eigen::MatrixXd d;
    int golden_iters = 50;
};

FreqTable build_freq_table(const TransferMatrix& g, const OmegaGrid& grid) {
    FreqTable tab;
    tab.g = &g;
    tab.p = g.size();
    tab.improper = !g.is_proper();
    tab.golden_iters = grid.golden_iters;

    std::vector<Complex> ep = g.entry_poles();
    for (const Complex& pole : ep)
        if (std::abs(pole.real()) <= kTolAxis) tab.axis_pole = true;

    std::vector<double> freqs;
    freqs.reserve(static_cast<size_t>(grid.count + grid.pole_refine * 4 + 8));
    freqs.push_back(0.0);
    const double lmin = std::log10(grid.omega_min);
    const double lmax = std::log10(grid.omega_max);
    for (int i = 0; i < grid.count; ++i) {
        double t = grid.count == 1 ? 0.0 : static_cast<double>(i) / (grid.count - 1);
        freqs.push_back(std::pow(10.0, lmin + t * (lmax - lmin)));
    }
    // линear refinement near resonance frequencies
    std::vector<double> centers;
    for (const Complex& pole : ep) {
        double c = std::abs(pole.imag());
        if (c <= 0.0) continue;
        bool dup = false;
        for (double x : centers)
            if (std::abs(x - c) <= 1e-9 * (1.0 + c)) dup = true;
        if (!dup) centers.push_back(c);
    }
    for (double c : centers) {
        freqs.push_back(c);
        for (int i = 0; i < grid.pole_refine; ++i) {
            double t = static_cast<double>(i) / std::max(1, grid.pole_refine - 1);
            freqs.push_back(c * (0.75 + 0.5 * t));
        }
    }
    std::sort(freqs.begin(), freqs.end());
    freqs.erase(std::unique(freqs.begin(), freqs.end(),
                            [](double a, double b) { return std::abs(a - b) <= 1e-13 * (1.0 + b); }),
                freqs.end());

    tab.w = std::move(freqs);
    tab.gw.resize(tab.w.size());
    tab.valid.assign(tab.w.size(), 1);
    detail::parallel_for(static_cast<int>(tab.w.size()), [&](int k) {
        Eigen::MatrixXcd m = g.eval(Complex(0.0, tab.w[static_cast<size_t>(k)]));
        if (!m.allFinite()) tab.valid[static_cast<size_t>(k)] = 0;
        tab.gw[static_cast<size_t>(k)] = std::move(m);
    });

    if (!tab.improper) {
        tab.d = g.feedthrough();
        tab.has_d = true;
    }
    return tab;
}

SigmaExtrema extrema_for_alpha(const FreqTable& tab, double alpha) {
    SigmaExtrema out;
    const Eigen::MatrixXcd shift =
        alpha * Eigen::MatrixXcd::Identity(tab.p, tab.p);

    double best_min = kInf, best_max = -1.0;
    int imin = -1, imax = -1;
    for (size_t k = 0; k < tab.w.size(); ++k) {
        if (!tab.valid[k]) continue;
        double lo, hi;
        sv_range(tab.gw[k] - shift, lo, hi);
        if (lo < best_min) {
            best_min = lo;
            imin = static_cast<int>(k);
        }
        if (hi > best_max) {
            best_max = hi;
            imax = static_cast<int>(k);
        }
    }

    auto eval_sv = [&](double w, bool want_min) -> double {
        Eigen::MatrixXcd m = tab.g->eval(Complex(0.0, w)) - shift;
        if (!m.allFinite()) return want_min ? kInf : -kInf;
        double lo, hi;
        sv_range(m, lo, hi);
        return want_min ? lo : hi;
    };
    auto polish = [&](int idx, bool want_min) -> double {
        const int n = static_cast<int>(tab.w.size());
        if (idx < 0) return want_min ? kInf : -kInf;
        double a = tab.w[static_cast<size_t>(std::max(idx - 1, 0))];
        double b = tab.w[static_cast<size_t>(std::min(idx + 1, n - 1))];
        if (!(b > a)) return want_min ? kInf : -kInf;
        if (want_min)
            return golden_min([&](double w) { return eval_sv(w, true); }, a, b, tab.golden_iters);
        return -golden_min([&](double w) { return -eval_sv(w, false); }, a, b, tab.golden_iters);
    };

    out.argmin_omega = imin >= 0 ? tab.w[static_cast<size_t>(imin)] : 0.0;
    out.argmax_omega = imax >= 0 ? tab.w[static_cast<size_t>(imax)] : 0.0;
    best_min = std::min(best_min, polish(imin, true));

    if (tab.improper || tab.axis_pole) {
        best_max = kInf;
    } else {
        best_max = std::max(best_max, polish(imax, false));
    }

    if (tab.has_d) {
        double lo, hi;
        sv_range(tab.d.cast<Complex>() - shift, lo, hi);
        if (lo < best_min) {
            best_min = lo;
            out.argmin_omega = kInf;
        }
        if (!tab.improper && !tab.axis_pole && hi > best_max) {
            best_max = hi;
            out.argmax_omega = kInf;
        }
    }

    out.sigma_min = best_min;
    out.sigma_max = best_max;
    return out;
}

// Per-system context reused across the alpha sweep: stability flags,
// McMillan poles, rank probes and the pencil realization.
struct SystemContext {
    const TransferMatrix* g = nullptr;
    int p = 0;
    bool proper = false;
    bool stable = false;
    bool axis_pole = false;
    std::vector<Complex> mcpoles;
    std::optional<StateSpace> ss;
    std::vector<Eigen::MatrixXcd> probe_vals;
};

const Complex kRankProbes[] = {
    {0.3178, 0.9424}, {-1.7320, 2.2360}, {2.6457, -0.5773},
    {-0.4142, -1.618}, {1.1447, 3.0777},
};

SystemContext make_context(const TransferMatrix& g) {
    SystemContext ctx;
    ctx.g = &g;
    ctx.p = g.size();
    ctx.proper = g.is_proper();
    ctx.mcpoles = poles(g);

    bool all_lhp = true;
    for (const Complex& pole : ctx.mcpoles) {
        if (std::abs(pole.real()) <= kTolAxis) ctx.axis_pole = true;
        if (pole.real() >= -kTolAxis) all_lhp = false;
    }
    ctx.stable = ctx.proper && all_lhp;
    if (ctx.proper) ctx.ss = realize(g);

    for (Complex s0 : kRankProbes) {
        Complex s = s0;
        bool safe = false;
        for (int tries = 0; tries < 8; ++tries) {
            safe = true;
            for (int i = 0; i < ctx.p && safe; ++i)
                for (int j = 0; j < ctx.p && safe; ++j) {
                    const Polynomial& den = g.at(i, j).den();
                    if (std::abs(den.eval(s)) < 1e-6 * std::max(1.0, den.max_abs_coeff()))
                        safe = false;
                }
            if (safe) break;
            s = s * Complex(1.1317, 0.0741) + Complex(0.013, 0.27);
        }
        if (safe) ctx.probe_vals.push_back(g.eval(s));
    }
    return ctx;
}

bool full_rank_shifted(const SystemContext& ctx, double alpha) {
    for (const auto& m : ctx.probe_vals) {
        Eigen::MatrixXcd shifted =
            m - alpha * Eigen::MatrixXcd::Identity(ctx.p, ctx.p);
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(shifted);
        const auto& sv = svd.singularValues();
        if (sv(0) > 0.0 && sv(sv.size() - 1) > 1e-10 * sv(0)) return true;
    }
    return false;
}

std::vector<Complex> pencil_zeros_shifted(const SystemContext& ctx, double alpha) {
    const StateSpace& ss = *ctx.ss;
    const int n = ss.states();
    const int p = ctx.p;
    const int m = n + p;
    Eigen::MatrixXd pa(m, m), pb(m, m);
    Eigen::MatrixXd d_shift = ss.D - alpha * Eigen::MatrixXd::Identity(p, p);
    pa << ss.A, ss.B, ss.C, d_shift;
    pb.setZero();
    pb.topLeftCorner(n, n).setIdentity();

    Eigen::GeneralizedEigenSolver<Eigen::MatrixXd> qz(pa, pb, false);
    if (qz.info() != Eigen::Success)
        throw NumericError("pencil_qz", "QZ iteration failed on shifted Rosenbrock pencil");

    double scale = std::max(1.0, pa.cwiseAbs().maxCoeff());
    std::vector<Complex> zeros;
    for (int i = 0; i < m; ++i) {
        Complex a = qz.alphas()(i);
        double b = qz.betas()(i);
        if (std::abs(b) <= 1e-10 * std::max(1.0, std::abs(a))) continue;
        Complex z = a / b;
        if (std::abs(z) > 1e8 * scale) continue;
        zeros.push_back(z);
    }
    return symmetrize_conjugate_pairs(std::move(zeros));
}

std::vector<Complex> det_zeros_shifted(const SystemContext& ctx, double alpha) {
    RationalFunction det = ctx.g->shift_by_alpha(alpha).determinant();
    if (det.is_zero())
        throw rank_deficient_error("determinant of shifted system vanishes identically");
    std::vector<Complex> zeros = det.num().roots();
    // restore pole/zero pairs cancelled inside the canonical determinant
    std::vector<Complex> rest = ctx.mcpoles;
    for (const Complex& r : det.den().roots()) {
        size_t best = rest.size();
        double best_d = std::numeric_limits<double>::max();
        for (size_t i = 0; i < rest.size(); ++i) {
            double d = std::abs(rest[i] - r);
            if (d < best_d) {
                best_d = d;
                best = i;
            }
        }
        if (best < rest.size()) rest.erase(rest.begin() + static_cast<long>(best));
    }
    zeros.insert(zeros.end(), rest.begin(), rest.end());
    return symmetrize_conjugate_pairs(std::move(zeros));
}

bool zero_multisets_agree(const std::vector<Complex>& a, const std::vector<Complex>& b) {
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

std::vector<Complex> zeros_shifted(const SystemContext& ctx, double alpha) {
    std::vector<Complex> det_route = det_zeros_shifted(ctx, alpha);
    if (!ctx.proper) return det_route;
    std::vector<Complex> pencil_route = pencil_zeros_shifted(ctx, alpha);
    if (!zero_multisets_agree(det_route, pencil_route))
        throw NumericError("zero_route_disagreement",
                           "Rosenbrock-pencil and determinant zero routes disagree");
    return pencil_route;
}

struct InnerState {
    bool positive = false;
    InnerReason reason = InnerReason::sigma_min;
};

InnerState inner_state(const SystemContext& ctx, double alpha) {
    if (!full_rank_shifted(ctx, alpha)) return {false, InnerReason::rank_deficient};
    for (const Complex& z : zeros_shifted(ctx, alpha))
        if (z.real() >= -kTolAxis) return {false, InnerReason::non_minimum_phase};
    return {true, InnerReason::sigma_min};
}

RadiusPair hard_pair(const SystemContext& ctx, const FreqTable& tab, double alpha,
                     bool* state_out = nullptr) {
    RadiusPair pair;
    pair.alpha = alpha;

    InnerState st = inner_state(ctx, alpha);
    if (state_out) *state_out = st.positive;
    if (!st.positive) {
        pair.r = 0.0;
        pair.r_reason = st.reason;
        if (ctx.stable) {
            pair.R = extrema_for_alpha(tab, alpha).sigma_max;
            pair.R_reason = OuterReason::sigma_max;
        } else {
            pair.R = kInf;
            pair.R_reason = ctx.proper ? OuterReason::unstable : OuterReason::improper;
        }
        return pair;
    }

    SigmaExtrema ext = extrema_for_alpha(tab, alpha);
    pair.r = ext.sigma_min;
    pair.r_reason = InnerReason::sigma_min;
    if (ctx.stable) {
        pair.R = ext.sigma_max;
        pair.R_reason = OuterReason::sigma_max;
    } else {
        pair.R = kInf;
        pair.R_reason = ctx.proper ? OuterReason::unstable : OuterReason::improper;
    }
    return pair;
}

RadiusPair soft_pair(const SystemContext& ctx, const FreqTable& tab, double alpha) {
    RadiusPair pair;
    pair.alpha = alpha;
    SigmaExtrema ext = extrema_for_alpha(tab, alpha);
    pair.r = ext.sigma_min;
    pair.r_reason = InnerReason::sigma_min;
    pair.R = ext.sigma_max;
    if (std::isinf(pair.R))
        pair.R_reason = ctx.proper ? OuterReason::unstable : OuterReason::improper;
    else
        pair.R_reason = OuterReason::sigma_max;
    return pair;
}

AlphaGrid auto_alpha_range(const FreqTable& tab) {
    double lo = kInf, hi = -kInf;
    for (size_t k = 0; k < tab.w.size(); ++k) {
        if (!tab.valid[k]) continue;
        if (tab.p == 1) {
            double re = tab.gw[k](0, 0).real();
            if (std::isfinite(re)) {
                lo = std::min(lo, re);
                hi = std::max(hi, re);
            }
            continue;
        }
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> eig(tab.gw[k], false);
        if (eig.info() != Eigen::Success) continue;
        for (int i = 0; i < tab.p; ++i) {
            double re = eig.eigenvalues()(i).real();
            if (std::isfinite(re)) {
                lo = std::min(lo, re);
                hi = std::max(hi, re);
            }
        }
    }
    if (!(lo <= hi)) {
        lo = -1.0;
        hi = 1.0;
    }
    const double pad = 0.25 * (hi - lo);
    AlphaGrid grid;
    grid.alpha_min = std::min(lo - pad, -2.0);
    grid.alpha_max = std::max(hi + pad, 2.0);
    grid.count = 801;
    return grid;
}

}  // namespace

AffineGains::AffineGains(double k1_, double k2_) : k1(k1_), k2(k2_) {
    if (k2 == 0.0) throw SchemaError("affine gain k2 must be nonzero");
}

SigmaExtrema sigma_extrema(const TransferMatrix& g, double alpha, const OmegaGrid& grid) {
    FreqTable tab = build_freq_table(g, grid);
    return extrema_for_alpha(tab, alpha);
}

RadiusPair hard_radius_pair(const TransferMatrix& g, double alpha, const OmegaGrid& grid) {
    SystemContext ctx = make_context(g);
    FreqTable tab = build_freq_table(g, grid);
    return hard_pair(ctx, tab, alpha);
}

SrgRegion build_region(const TransferMatrix& g, RegionKind kind, const BuildOptions& opts) {
    SystemContext ctx = make_context(g);
    if (kind == RegionKind::soft && opts.soft_stability_gate && !ctx.stable)
        throw soft_requires_stable_error("soft region of an unstable system");

    FreqTable tab = build_freq_table(g, opts.omega);
    AlphaGrid agrid = opts.alpha ? *opts.alpha : auto_alpha_range(tab);
    if (agrid.count < 2) throw SchemaError("alpha grid needs at least 2 points");
    if (!(agrid.alpha_min < agrid.alpha_max)) throw SchemaError("alpha grid range is empty");

    std::vector<double> alphas(static_cast<size_t>(agrid.count));
    for (int i = 0; i < agrid.count; ++i)
        alphas[static_cast<size_t>(i)] =
            agrid.alpha_min +
            (agrid.alpha_max - agrid.alpha_min) * static_cast<double>(i) / (agrid.count - 1);

    std::vector<RadiusPair> pairs(alphas.size());
    std::vector<char> states(alphas.size(), 0);
    std::exception_ptr first_error;
    std::mutex error_mutex;
    detail::parallel_for(static_cast<int>(alphas.size()), [&](int i) {
        try {
            double a = alphas[static_cast<size_t>(i)];
            if (kind == RegionKind::hard) {
                bool positive = false;
                pairs[static_cast<size_t>(i)] = hard_pair(ctx, tab, a, &positive);
                states[static_cast<size_t>(i)] = positive ? 1 : 0;
            } else {
                pairs[static_cast<size_t>(i)] = soft_pair(ctx, tab, a);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!first_error) first_error = std::current_exception();
        }
    });
    if (first_error) std::rethrow_exception(first_error);

    if (kind == RegionKind::hard) {
        // Insert the alphas where the inner radius collapses: minimum-phase
        // (or rank) transitions located by bisection between flipping
        // neighbors.
        std::vector<RadiusPair> extra;
        for (size_t i = 0; i + 1 < pairs.size(); ++i) {
            bool lo_state = states[i] != 0;
            bool hi_state = states[i + 1] != 0;
            if (lo_state == hi_state) continue;
            double a = pairs[i].alpha, b = pairs[i + 1].alpha;
            bool state_a = lo_state;
            for (int it = 0; it < 60; ++it) {
                double mid = 0.5 * (a + b);
                if (inner_state(ctx, mid).positive == state_a)
                    a = mid;
                else
                    b = mid;
            }
            double star = 0.5 * (a + b);
            double delta = 1e-9 * std::max(1.0, std::abs(star));
            for (double cand : {star - delta, star, star + delta}) {
                if (cand <= agrid.alpha_min || cand >= agrid.alpha_max) continue;
                extra.push_back(hard_pair(ctx, tab, cand));
            }
        }
        pairs.insert(pairs.end(), extra.begin(), extra.end());
    }

    std::sort(pairs.begin(), pairs.end(),
              [](const RadiusPair& a, const RadiusPair& b) { return a.alpha < b.alpha; });

    SrgRegion region;
    region.kind = kind;
    region.meta.alpha_min = agrid.alpha_min;
    region.meta.alpha_max = agrid.alpha_max;
    region.meta.alpha_count = agrid.count;
    region.meta.omega = opts.omega;
    region.meta.system_fingerprint = fingerprint(g);
    region.alphas.reserve(pairs.size());
    for (const RadiusPair& pr : pairs) {
        if (!region.alphas.empty() &&
            pr.alpha - region.alphas.back() <= 1e-15 * (1.0 + std::abs(pr.alpha)))
            continue;
        region.alphas.push_back(pr.alpha);
        region.r.push_back(pr.r);
        region.R.push_back(pr.R);
    }
    return region;
}

MembershipVerdict membership(const SrgRegion& region, Complex z) {
    bool on_band = false;
    for (size_t i = 0; i < region.alphas.size(); ++i) {
        const double d = std::abs(z - Complex(region.alphas[i], 0.0));
        const double r = region.r[i];
        const double R = region.R[i];
        if (std::isfinite(R)) {
            if (d > R + kTolBand) return {MembershipStatus::outside, region.alphas[i]};
            if (std::abs(d - R) <= kTolBand) on_band = true;
        }
        if (r > 0.0) {
            if (d < r - kTolBand) return {MembershipStatus::outside, region.alphas[i]};
            if (std::abs(d - r) <= kTolBand) on_band = true;
        }
    }
    return {on_band ? MembershipStatus::boundary_band : MembershipStatus::inside, 0.0};
}

SrgRegion transform(const SrgRegion& region, const AffineGains& gains) {
    if (gains.k2 == 0.0) throw SchemaError("affine gain k2 must be nonzero");
    SrgRegion out = region;
    const size_t n = region.alphas.size();
    const double scale = std::abs(gains.k2);
    for (size_t i = 0; i < n; ++i) {
        size_t src = gains.k2 > 0 ? i : n - 1 - i;
        out.alphas[i] = gains.k1 + gains.k2 * region.alphas[src];
        out.r[i] = scale * region.r[src];
        out.R[i] = scale * region.R[src];
    }
    double a = gains.k1 + gains.k2 * region.meta.alpha_min;
    double b = gains.k1 + gains.k2 * region.meta.alpha_max;
    out.meta.alpha_min = std::min(a, b);
    out.meta.alpha_max = std::max(a, b);
    char buf[96];
    std::snprintf(buf, sizeof(buf), "|affine(%.17g,%.17g)", gains.k1, gains.k2);
    out.meta.system_fingerprint = region.meta.system_fingerprint + buf;
    return out;
}

MembershipVerdict mobius_inverse_membership(const SrgRegion& region, Complex z) {
    const double mag2 = std::norm(z);
    if (mag2 == 0.0) {
        // inv(0) is the point at infinity: a member iff no annulus has a
        // finite outer radius.
        for (size_t i = 0; i < region.alphas.size(); ++i)
            if (std::isfinite(region.R[i])) return {MembershipStatus::outside, region.alphas[i]};
        return {MembershipStatus::inside, 0.0};
    }
    // ray-preserving inversion: r e^{j phi} -> (1/r) e^{j phi}
    return membership(region, z / mag2);
}

double distance_to_point(const SrgRegion& region, Complex z0, bool inverse) {
    auto is_in = [&](Complex z) {
        MembershipVerdict v = inverse ? mobius_inverse_membership(region, z) : membership(region, z);
        return v.status != MembershipStatus::outside;
    };
    if (is_in(z0)) return 0.0;

    double alpha_reach = std::max(std::abs(region.alphas.front()), std::abs(region.alphas.back()));
    double max_finite_r = 0.0;
    for (double r : region.r)
        if (std::isfinite(r)) max_finite_r = std::max(max_finite_r, r);
    const double rho_max = 8.0 * (1.0 + std::abs(z0) + alpha_reach + max_finite_r);

    std::vector<double> dir_best(kNumDirections, kInf);
    detail::parallel_for(kNumDirections, [&](int k) {
        const double theta = 2.0 * M_PI * k / kNumDirections;
        const Complex dir(std::cos(theta), std::sin(theta));
        double lo = 0.0, hi = -1.0;
        for (double rho = kTolDist; rho <= rho_max; rho *= 1.3) {
            if (is_in(z0 + rho * dir)) {
                hi = rho;
                break;
            }
            lo = rho;
        }
        if (hi < 0.0) return;
        while (hi - lo > kTolDist) {
            double mid = 0.5 * (lo + hi);
            if (is_in(z0 + mid * dir))
                hi = mid;
            else
                lo = mid;
        }
        dir_best[static_cast<size_t>(k)] = hi;
    });
    double best = kInf;
    for (double v : dir_best) best = std::min(best, v);
    return std::isfinite(best) ? best : rho_max;
}

StabilityReport stability_report(const TransferMatrix& loop, const AffineGains& gains,
                                 const BuildOptions& opts) {
    SrgRegion region = build_region(loop, RegionKind::hard, opts);
    return stability_report(loop, region, gains);
}

StabilityReport stability_report(const TransferMatrix& loop, const SrgRegion& hard_region,
                                 const AffineGains& gains) {
    if (hard_region.kind != RegionKind::hard)
        throw SchemaError("stability_report requires a hard region");

    StabilityReport report;
    SrgRegion transformed = transform(hard_region, gains);
    MembershipVerdict verdict = membership(transformed, Complex(-1.0, 0.0));
    report.margin = distance_to_point(transformed, Complex(-1.0, 0.0));
    report.stable_certified =
        verdict.status == MembershipStatus::outside && report.margin > kTolMargin;

    // r_{-1} of the transformed loop k1*I + k2*L, computed exactly:
    // L' + I = k2 * (L - alpha* I) with alpha* = -(1 + k1) / k2.
    const double alpha_star = -(1.0 + gains.k1) / gains.k2;
    RadiusPair pr = hard_radius_pair(loop, alpha_star, hard_region.meta.omega);
    report.r_minus_one = std::abs(gains.k2) * pr.r;
    report.sensitivity_bound = report.r_minus_one > 0.0 ? 1.0 / report.r_minus_one : kInf;

    double dist_inv = distance_to_point(transformed, Complex(-1.0, 0.0), /*inverse=*/true);
    report.gain_bound = dist_inv > 0.0 ? 1.0 / dist_inv : kInf;
    return report;
}

std::vector<std::pair<double, double>> real_axis_exclusions(const SrgRegion& region, double lo,
                                                            double hi, int n) {
    std::vector<std::pair<double, double>> holes;
    bool in_hole = false;
    double start = 0.0;
    for (int i = 0; i < n; ++i) {
        double x = lo + (hi - lo) * static_cast<double>(i) / (n - 1);
        bool outside = membership(region, Complex(x, 0.0)).status == MembershipStatus::outside;
        if (outside && !in_hole) {
            in_hole = true;
            start = x;
        } else if (!outside && in_hole) {
            in_hole = false;
            holes.emplace_back(start, x);
        }
    }
    if (in_hole) holes.emplace_back(start, hi);
    return holes;
}

}  // namespace srg
