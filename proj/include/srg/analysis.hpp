#pragma once

#include <string>

#include "srg/state_space.hpp"
#include "srg/transfer_matrix.hpp"

namespace srg {

// Closed-RHP bookkeeping tolerance on real parts. A pole/zero with
// |Re| <= kTolAxis sits on the axis: it defeats stability and minimum
// phase but is excluded from n_p.
inline constexpr double kTolAxis = 1e-9;

struct SystemClassification {
    bool proper = false;
    bool biproper = false;
    bool stable = false;
    bool has_axis_pole = false;
    int n_p = 0;  // open-RHP McMillan poles
    std::vector<Complex> poles;
    int normal_rank = 0;
    std::vector<Complex> transmission_zeros;  // empty when rank deficient
    bool minimum_phase = false;
};

// McMillan poles with multiplicity: roots of the least common denominator
// of all non-vanishing minors, conjugate-closed, sorted.
std::vector<Complex> poles(const TransferMatrix& g);

// Rank of G(s) over R(s), by maximum numeric rank at generic sample points.
int normal_rank(const TransferMatrix& g);

// Finite Smith-McMillan transmission zeros. Two routes: Rosenbrock pencil
// of a minimal realization (proper systems) and the determinant route
// below (any square system); they must agree within 1e-5 or a hard error
// is raised. Throws rank_deficient when normal rank < p.
std::vector<Complex> transmission_zeros(const TransferMatrix& g);

// Determinant-route zero finder, shared by transmission_zeros and the
// region builder's alpha sweep. The finite zeros of G - alpha*I are the
// roots of the polynomial det(G(s) - alpha*I) * p(s), where p is the pole
// polynomial; that product is sampled on a scaled DFT circle and its
// coefficients recovered by the inverse transform, which stays exact for
// repeated poles where rational gcd cancellation falls apart.
class ZeroSampler {
public:
    ZeroSampler(const TransferMatrix& g, std::vector<Complex> mcmillan_poles);
    // throws rank_deficient when det(G - alpha*I) vanishes identically
    std::vector<Complex> zeros(double alpha) const;

private:
    int p_ = 0;
    int degree_bound_ = 0;
    int samples_ = 0;
    double rho_ = 2.0;
    std::vector<Complex> s_;                 // circle points
    std::vector<Eigen::MatrixXcd> g_at_s_;   // G(s_k)
    std::vector<Complex> pole_poly_at_s_;    // p(s_k)
    double entry_scale_ = 1.0;               // max |G(s_k)| entry, for the zero test
};

// Entrywise strictly proper part (polynomial summands dropped).
TransferMatrix strictly_proper_part(const TransferMatrix& g);

SystemClassification classify(const TransferMatrix& g);

// Entrywise G(j*omega). Throws pole_on_grid when j*omega is within
// kTolAxis of an imaginary-axis pole.
Eigen::MatrixXcd freq_response(const TransferMatrix& g, double omega);

// Stable content hash of the canonical transfer-function representation.
std::string fingerprint(const TransferMatrix& g);

}  // namespace srg
