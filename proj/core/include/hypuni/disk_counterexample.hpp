#pragma once

#include <string>
#include <vector>

namespace hypuni {

// Closed-form quantities for the hyperbolic unit disk, where the
// exponential-density change of metric can be computed exactly. They show
// that no finite comparison constant works for similarity maps: a map that
// scales the hyperbolic metric by L > 1 forces the constant to grow without
// bound as the base point recedes.
//
// Every function taking eps requires eps > 2 (the regime where the circle
// growth e^{2R} fights the density decay e^{-eps R} and loses pointwise but
// wins on arcs) and throws std::invalid_argument otherwise.

// Length of the hyperbolic circle of radius R about the origin:
// (pi/2) (e^{2R} - e^{-2R}).
double circle_length(double R);

// Upper bound (2/eps) e^{-eps R} for the uniformized distance between any
// two points on the radius-R circle: each point reaches distance ~R + t
// along its own radial ray cheaply, and the density decays like e^{-eps t}.
double dist_eps_upper(double eps, double R);

// Radial band a curve must cross when it connects two opposite points of
// the radius-R circle while staying A-uniform: below inner_tau the cigar
// condition fails, above outer_T the length condition fails.
struct AnnulusBounds {
    double inner_tau = 0.0;
    double outer_T = 0.0;
};
AnnulusBounds annulus_bounds(double eps, double R, double A);

// Lower bound for the uniformized length of the arc an A-uniform curve
// must spend inside the annulus: uniformity_prefactor(eps, A) times
// e^{-(eps-2) R}. Decays slower than dist_eps_upper by the factor e^{2R},
// which is what forces A to grow with R.
double trapping_length_lower(double eps, double R, double A);

// Constant prefactor (A+1) (pi/8) (2A+1)^{-2/eps} of the trapped-length
// lower bound.
double uniformity_prefactor(double eps, double A);

// Smallest A for which an A-uniform curve between opposite points of the
// radius-R circle is not ruled out by the trapping bound, found by
// bisection in log A. Returns +infinity if no A <= a_cap works.
double required_constant_lower_bound(double eps, double R, double a_cap = 1e12);

// One row of the divergence table: how the required constant grows with R.
struct DivergenceRow {
    double R = 0.0;
    double a_min = 0.0;
    AnnulusBounds annulus{};
};
std::vector<DivergenceRow> divergence_table(double eps, const std::vector<double>& radii,
                                            double a_cap = 1e12);

// Explains, for 0 < eps1 < eps, why no analogue of the isometry comparison
// can hold for similarity maps: scaling the disk metric by L = eps1/eps
// turns uniformization at eps into uniformization at eps1, which is a
// uniform space for small eps1, while the table above shows the unscaled
// space at eps is not.
std::string scaled_space_note(double eps, double eps1);

// Sanity relations the closed forms must satisfy at the given parameters:
// inner_tau < R < outer_T, trapped length exceeding dist_eps_upper at A
// slightly below a_min, and monotone growth of a_min in R.
bool scenario_consistency(double eps, double R);

}  // namespace hypuni
