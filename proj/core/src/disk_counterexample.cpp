#include "hypuni/disk_counterexample.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace hypuni {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_eps(double eps) {
    if (!(eps > 2.0)) throw std::invalid_argument("requires eps > 2");
}
void require_radius(double R) {
    if (!(R > 0)) throw std::invalid_argument("requires R > 0");
}
void require_A(double A) {
    if (!(A >= 1.0)) throw std::invalid_argument("requires A >= 1");
}

// Whether constant A survives the obstruction: the trapped-arc length must
// fit under A times the distance bound. The left side shrinks in A slower
// than the right side grows, so feasibility is monotone in A.
bool feasible(double eps, double R, double A) {
    return trapping_length_lower(eps, R, A) <= A * dist_eps_upper(eps, R);
}

}  // namespace

double circle_length(double R) {
    if (R < 0) throw std::invalid_argument("requires R >= 0");
    return 0.5 * kPi * (std::exp(2.0 * R) - std::exp(-2.0 * R));
}

double dist_eps_upper(double eps, double R) {
    require_eps(eps);
    require_radius(R);
    return (2.0 / eps) * std::exp(-eps * R);
}

AnnulusBounds annulus_bounds(double eps, double R, double A) {
    require_eps(eps);
    require_radius(R);
    require_A(A);
    return {R - std::log(2.0 * A + 1.0) / eps, R + std::log(A + 1.0) / eps};
}

double uniformity_prefactor(double eps, double A) {
    require_eps(eps);
    require_A(A);
    return (A + 1.0) * (kPi / 8.0) * std::pow(2.0 * A + 1.0, -2.0 / eps);
}

double trapping_length_lower(double eps, double R, double A) {
    require_eps(eps);
    require_radius(R);
    require_A(A);
    return uniformity_prefactor(eps, A) * std::exp(-(eps - 2.0) * R);
}

double required_constant_lower_bound(double eps, double R, double a_cap) {
    require_eps(eps);
    require_radius(R);
    if (!(a_cap >= 1.0)) throw std::invalid_argument("requires a_cap >= 1");
    if (feasible(eps, R, 1.0)) return 1.0;
    if (!feasible(eps, R, a_cap)) return std::numeric_limits<double>::infinity();
    double lo = 0.0;               // log A, infeasible end
    double hi = std::log(a_cap);   // feasible end
    while (hi - lo > 1e-13 * (1.0 + hi)) {
        double mid = 0.5 * (lo + hi);
        (feasible(eps, R, std::exp(mid)) ? hi : lo) = mid;
    }
    return std::exp(hi);
}

std::vector<DivergenceRow> divergence_table(double eps, const std::vector<double>& radii,
                                            double a_cap) {
    std::vector<DivergenceRow> rows;
    rows.reserve(radii.size());
    for (double R : radii) {
        DivergenceRow row;
        row.R = R;
        row.a_min = required_constant_lower_bound(eps, R, a_cap);
        if (std::isfinite(row.a_min)) {
            row.annulus = annulus_bounds(eps, R, row.a_min);
        } else {
            double nan = std::numeric_limits<double>::quiet_NaN();
            row.annulus = {nan, nan};
        }
        rows.push_back(row);
    }
    return rows;
}

std::string scaled_space_note(double eps, double eps1) {
    require_eps(eps);
    if (!(eps1 > 0.0 && eps1 < eps)) throw std::invalid_argument("requires 0 < eps1 < eps");
    double L = eps1 / eps;
    std::ostringstream out;
    out << "scale L = eps1/eps = " << L << "\n"
        << "Multiplying the disk metric by L turns the density exp(-" << eps
        << " * d_scaled) into exp(-" << eps1 << " * d), so uniformizing the scaled space at "
        << eps << " produces the same metric space as uniformizing the original at " << eps1
        << ".\n"
        << "For eps1 small enough that space is uniform, while the divergence table shows the "
           "original at "
        << eps
        << " is not. The identity is a rough similarity with scale != 1 between the two, so no "
           "finite constant can carry uniformity across similarity maps; the isometry "
           "hypothesis in the distance comparison is sharp.\n";
    return out.str();
}

bool scenario_consistency(double eps, double R) {
    require_eps(eps);
    require_radius(R);
    bool ok = circle_length(R) > 0.0 && dist_eps_upper(eps, R) > 0.0;

    double a_min = required_constant_lower_bound(eps, R);
    if (std::isfinite(a_min)) {
        AnnulusBounds ab = annulus_bounds(eps, R, a_min);
        ok = ok && ab.inner_tau < R && R < ab.outer_T;
        ok = ok && feasible(eps, R, a_min * (1.0 + 1e-6));
        if (a_min > 1.0) ok = ok && !feasible(eps, R, a_min * (1.0 - 1e-6));
    }
    double a_next = required_constant_lower_bound(eps, R + 1.0);
    if (std::isfinite(a_min) && std::isfinite(a_next)) ok = ok && a_next >= a_min;
    return ok;
}

}  // namespace hypuni
