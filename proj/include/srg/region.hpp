#pragma once

#include <optional>
#include <string>

#include "srg/analysis.hpp"
#include "srg/transfer_matrix.hpp"

namespace srg {

inline constexpr double kTolBand = 1e-6;    // membership boundary band
inline constexpr double kTolDist = 1e-6;    // radial bisection resolution
inline constexpr double kTolMargin = 1e-6;  // certification threshold
inline constexpr int kNumDirections = 720;  // radial probe directions

struct OmegaGrid {
    double omega_min = 1e-4;
    double omega_max = 1e6;
    int count = 2000;        // log-spaced base points
    int pole_refine = 200;   // linear points around each resonance |Im(pole)|
    int golden_iters = 50;   // local polish around discrete extremizers
};

struct AlphaGrid {
    double alpha_min = -2.0;
    double alpha_max = 2.0;
    int count = 801;
};

enum class RegionKind { soft, hard };

enum class InnerReason { sigma_min, non_minimum_phase, rank_deficient };
enum class OuterReason { sigma_max, unstable, improper };

// One annulus of the disk representation: center alpha, inner/outer radii
// with the rule that produced each.
struct RadiusPair {
    double alpha = 0.0;
    double r = 0.0;
    double R = 0.0;  // may be +infinity
    InnerReason r_reason = InnerReason::sigma_min;
    OuterReason R_reason = OuterReason::sigma_max;
};

struct RegionMeta {
    double alpha_min = 0.0;
    double alpha_max = 0.0;
    int alpha_count = 0;  // base grid size before transition augmentation
    OmegaGrid omega;
    std::string system_fingerprint;
};

// Intersection-of-annuli region over a sorted alpha grid. For hard regions
// the outer radii are all finite or all infinite.
struct SrgRegion {
    RegionKind kind = RegionKind::hard;
    std::vector<double> alphas;
    std::vector<double> r;
    std::vector<double> R;
    RegionMeta meta;
};

enum class MembershipStatus { inside, outside, boundary_band };

struct MembershipVerdict {
    MembershipStatus status = MembershipStatus::inside;
    double witness_alpha = 0.0;  // first violating annulus center, when outside
};

struct AffineGains {
    double k1 = 0.0;
    double k2 = 1.0;
    AffineGains() = default;
    AffineGains(double k1_, double k2_);  // throws on k2 == 0
};

struct SigmaExtrema {
    double sigma_min = 0.0;
    double sigma_max = 0.0;  // +infinity for improper systems or axis poles
    double argmin_omega = 0.0;
    double argmax_omega = 0.0;
};

struct BuildOptions {
    std::optional<AlphaGrid> alpha;  // auto range from the Nyquist scan extent when absent
    OmegaGrid omega;
    // Prop. 1 requires stability for soft regions; the SISO extended-SRG
    // path evaluates the same extremization without the gate.
    bool soft_stability_gate = true;
};

// inf/sup of the smallest/largest singular value of (G - alpha*I)(jw) over
// w in [0, inf], including the feedthrough limit for proper systems.
SigmaExtrema sigma_extrema(const TransferMatrix& g, double alpha, const OmegaGrid& grid = {});

// Prop. 2 / Prop. 3 radii at a single center.
RadiusPair hard_radius_pair(const TransferMatrix& g, double alpha, const OmegaGrid& grid = {});

SrgRegion build_region(const TransferMatrix& g, RegionKind kind, const BuildOptions& opts = {});

MembershipVerdict membership(const SrgRegion& region, Complex z);

// Exact affine image: centers k1 + k2*alpha, radii scaled by |k2|.
SrgRegion transform(const SrgRegion& region, const AffineGains& gains);

// Verdict of z under the Mobius-inverted region: r e^{j phi} -> (1/r) e^{j phi}.
// z = 0 queries the point at infinity, which is a member iff every annulus
// has infinite outer radius.
MembershipVerdict mobius_inverse_membership(const SrgRegion& region, Complex z);

// Lower-bound distance from z0 to the (optionally inverted) region by
// radial bisection over kNumDirections directions; 0 when z0 is not outside.
double distance_to_point(const SrgRegion& region, Complex z0, bool inverse = false);

struct StabilityReport {
    bool stable_certified = false;
    double margin = 0.0;
    double sensitivity_bound = 0.0;  // 1 / r_{-1}, +infinity when r_{-1} = 0
    double gain_bound = 0.0;         // 1 / dist(-1, region^{-1}), +infinity when 0
    double r_minus_one = 0.0;        // inner radius at -1 of the transformed loop
};

// Certifies the unit-feedback loop with loop transfer k1*I + k2*L via
// separation of -1 from the transformed hard region.
StabilityReport stability_report(const TransferMatrix& loop, const AffineGains& gains = {},
                                 const BuildOptions& opts = {});
// Same, reusing a prebuilt hard region of `loop`.
StabilityReport stability_report(const TransferMatrix& loop, const SrgRegion& hard_region,
                                 const AffineGains& gains = {});

// Maximal real-axis intervals of outside verdicts in [lo, hi], scanned at n
// points (hole detection for reporting).
std::vector<std::pair<double, double>> real_axis_exclusions(const SrgRegion& region, double lo,
                                                            double hi, int n = 2001);

}  // namespace srg
