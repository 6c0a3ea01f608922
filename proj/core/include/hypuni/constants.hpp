#pragma once

#include <cmath>

namespace hypuni {

// Comparison constants used by the estimate machinery. Each function
// returns the explicit bound a report asserts, assembled from the same
// factors the underlying argument uses, so a violated assertion names the
// step that broke. All bounds are conservative: they hold with room to
// spare on valid inputs.

// Density ratio across distance d.
inline double harnack_bound(double eps, double d) { return std::exp(eps * d); }

// Integral of e^{-eps t} dt over an edge of length w whose endpoint base
// distances are a and b, with t interpolated linearly. Stable for a ~ b.
inline double exp_edge_integral(double eps, double a, double b, double w) {
    double h = eps * (b - a);
    if (std::abs(h) < 1e-12) return w * std::exp(-eps * a) * (1.0 - 0.5 * h + h * h / 6.0);
    return w * std::exp(-eps * a) * (-std::expm1(-h)) / h;
}

// Unit-step discretization of a curve of length > 1 versus its density
// integral: the sum of point densities matches the integral within this
// factor (both directions).
inline double discrete_path_bound(double eps) { return 2.0 * std::exp(2.0 * eps); }

// Same comparison for a curve of length between 1 and Q.
inline double short_curve_bound(double eps, double Q) { return std::exp(eps * (Q + 1.0)); }

// Uniformized distance between points at graph distance d <= s satisfies
//   d_eps(x,y) / (rho(x) d(x,y)) within [1/close_points_bound, close_points_bound].
inline double close_points_bound(double eps, double s) { return std::exp(eps * s); }

// Boundary distance versus density: rho/eps <= delta_eps <= factor * rho.
inline double boundary_upper_factor(double eps, double M) {
    return (M + 1.0 / eps) * std::exp(eps * M);
}

// Quasihyperbolic versus graph distance: k/d lands in a band whose
// max/min ratio is at most the square of this factor.
inline double bilipschitz_factor(double eps, double M) {
    return eps * boundary_upper_factor(eps, M);
}

// Pushing a curve discretization through a tau-rough isometry: the
// uniformized length of the curve matches the image point-density sum
// within this factor.
inline double phi_sum_bound(double eps, double tau) { return 2.0 * std::exp((2.0 + tau) * eps); }

// Variant where the last sample is replaced by the curve endpoint: the
// swapped term moves by at most a (2+tau) Harnack step, on top of the
// plain bound.
inline double phi_sum_tail_bound(double eps, double tau) {
    return phi_sum_bound(eps, tau) * std::exp((2.0 + tau) * eps);
}

// One direction of the uniformized-distance comparison across a
// tau-rough isometry: image distance <= forward * source distance.
inline double d_eps_comparison_forward(double eps, double tau) {
    return 2.0 * (4.0 + tau) * std::exp((6.0 + 2.0 * tau) * eps);
}

// Two-sided band for d_eps ratios across a rough isometry: the reverse
// direction picks up endpoint corrections of order tau rho, each
// controlled by the distance itself.
inline double d_eps_comparison_bound(double eps, double tau) {
    double endpoint_terms =
        tau * std::exp(2.0 * eps * tau) * (std::exp(2.0 * eps) + std::exp(4.0 * eps));
    return d_eps_comparison_forward(eps, tau) + endpoint_terms;
}

// Boundary-distance ratio band across a rough isometry, with the escape
// path discretized at steps of 1 + tau and bridged by target geodesics.
// `snap` is the largest discretization snap offset in play.
struct DeltaComparisonBound {
    double bridge;     // target bridges between consecutive mapped samples
    double transport;  // per-sample density transport through the map
    double escape;     // source escape-path discretization
    double safety;     // partial trailing segment
    double tail_term;  // frontier hop and ray tail, additive
    double total;
};
inline DeltaComparisonBound delta_comparison_bound(double eps, double tau, double snap = 0.0) {
    DeltaComparisonBound b;
    double step = 1.0 + tau;
    double gap = step + tau + 2.0 * snap;
    b.bridge = gap * std::exp(eps * gap);
    b.transport = std::exp(eps * tau);
    b.escape = std::exp(eps * (step + snap)) / step;
    b.safety = std::exp(eps * step);
    b.tail_term = (1.0 + eps * tau) * std::exp(2.0 * eps * tau);
    b.total = b.bridge * b.transport * b.escape * b.safety + b.tail_term;
    return b;
}

// Uniformity constant of a geodesic between points at distance <= s.
inline double short_branch_lambda(double eps, double s) {
    return std::exp(2.0 * eps * s) * std::max(1.0, eps * s);
}

// Sample gap along a transferred curve: discretization steps below 2 plus
// the map's additive slack on both ends plus snapping.
inline double transfer_gap(double tau, double snap) { return 2.0 + 2.0 * tau + 2.0 * snap; }

// Uniformity constant carried through the transfer construction.
struct TransferBound {
    double quasiconvexity;
    double cigar;
    double total;  // max of the two
};
inline TransferBound transfer_lambda_bound(double lambda_x, double eps, double tau,
                                           double snap = 0.0) {
    TransferBound t;
    double G = transfer_gap(tau, snap);
    double segments = G * std::exp(eps * G);
    t.quasiconvexity = 2.0 * segments * std::exp(eps * (2.0 + tau + snap)) *
                       d_eps_comparison_forward(eps, tau) * lambda_x;
    double vertex_shift = 1.0 + eps * G * std::exp(2.0 * eps * G);
    t.cigar = 2.0 * segments * std::exp(eps * (2.0 + tau + 2.0 * snap)) *
              delta_comparison_bound(eps, tau, snap).total * vertex_shift * lambda_x;
    t.total = std::max(t.quasiconvexity, t.cigar);
    return t;
}

}  // namespace hypuni
