#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypuni/boundary.hpp"
#include "hypuni/constants.hpp"
#include "hypuni/curve.hpp"
#include "hypuni/rough_map.hpp"
#include "hypuni/uniformity.hpp"
#include "hypuni/uniformize.hpp"

namespace hypuni {

// Unit-scale discretization of a curve of graph length L > 1: N = floor(L)
// samples spaced q = L/N in [1, 2), snapped to the nearest curve vertex.
// Both endpoints are sampled exactly.
struct Discretization {
    int N = 0;
    double q = 0.0;
    double L = 0.0;
    std::vector<int> curve_index;        ///< N+1 curve vertex indices
    std::vector<double> snap_offset;     ///< |arclength(sample) - i q|
    double max_snap_offset = 0.0;
};

// Empty when L <= 1 (short-curve case, handled by close-point bounds).
std::optional<Discretization> discretize(const Curve& c);

// Sum of vertex densities over samples a_0 .. a_{N-1}.
double discrete_sum(const UniformizedGraph& ug, const Curve& c, const Discretization& d);

// Compares the snapped sample sum against ell_eps(c). The guaranteed band
// is discrete_path_bound(eps) widened by the measured snap deviation
// (snapped sum versus the exact-arclength sum).
struct DiscretePathCheck {
    int N = 0;
    double sum_snapped = 0.0;
    double sum_exact = 0.0;
    double integral = 0.0;
    double ratio = 0.0;           ///< sum_snapped / integral
    double bound = 0.0;           ///< discrete_path_bound(eps)
    double snap_tolerance = 0.0;  ///< |sum_snapped/sum_exact - 1|
    double max_snap_offset = 0.0;
    bool ok = false;  ///< ratio inside [1/bound, bound] * (1 +- snap_tolerance)
};
DiscretePathCheck discrete_path_check(const UniformizedGraph& ug, const Curve& c);

// Uniformized length of a curve in the source against the density sums of
// its mapped samples in the target. sum_tail replaces the last sample with
// the mapped curve endpoint (empty leading sum when N = 1).
struct PhiSumComparison {
    int N = 0;
    double integral_source = 0.0;
    double sum_image = 0.0;
    double sum_image_tail = 0.0;
    double ratio = 0.0;
    double ratio_tail = 0.0;
    double bound = 0.0;       ///< phi_sum_bound(eps, tau) * snap factor
    double bound_tail = 0.0;  ///< phi_sum_tail_bound(eps, tau) * snap factor
    double snap_factor = 1.0;
    bool ok = false;
};
PhiSumComparison phi_sum_compare(const UniformizedGraph& ug_source,
                                 const UniformizedGraph& ug_target, const RoughMap& m,
                                 const Curve& c);

struct PairRatio {
    VertexId u = -1;
    VertexId v = -1;
    double value_source = 0.0;
    double value_target = 0.0;
    double ratio = 0.0;
};

// Per-pair d_eps ratios across the map, for pairs at source distance
// >= 2 + tau (closer pairs are a hypothesis violation and rejected).
// A similarity-kind map sets hypothesis_violation instead of asserting
// the band: the comparison constant exists only for isometries.
struct DistanceComparison {
    std::vector<PairRatio> pairs;
    double min_ratio = 0.0;
    double max_ratio = 0.0;
    double bound = 0.0;  ///< d_eps_comparison_bound(eps, tau)
    bool within_bound = false;
    bool hypothesis_violation = false;
    std::string note;
};
DistanceComparison compare_d_eps(const UniformizedGraph& ug_source,
                                 const UniformizedGraph& ug_target, const RoughMap& m,
                                 const std::vector<std::pair<VertexId, VertexId>>& pairs);

// Per-vertex delta_eps ratios across the map. Requires the frontiers to
// correspond within tau under the map.
struct DeltaComparison {
    std::vector<PairRatio> values;  ///< u = source vertex, v = its image
    double min_ratio = 0.0;
    double max_ratio = 0.0;
    double bound = 0.0;  ///< delta_comparison_bound(...).total
    DeltaComparisonBound bound_factors{};
    double frontier_mismatch = 0.0;
    bool within_bound = false;
};
DeltaComparison compare_delta_eps(const UniformizedGraph& ug_source,
                                  const UniformizedGraph& ug_target, const RoughMap& m);

// Verified map, its quasi-inverse, and the single constant controlling
// both directions and both round trips.
struct TransferContext {
    const UniformizedGraph* source;  ///< where curves are produced
    const UniformizedGraph* target;  ///< where the known-uniform curve lives
    RoughMap phi;                    ///< source graph -> target graph
    RoughMap phi_inv;
    double tau = 0.0;
    BoundaryDistance bd_source;
    BoundaryDistance bd_target;
};
TransferContext make_transfer_context(const UniformizedGraph& source,
                                      const UniformizedGraph& target, const RoughMap& m);

// Builds a curve between x and y in the source space out of a uniform
// curve between their images: close pairs (d <= 4 + tau) take the source
// geodesic; otherwise the target d_eps-geodesic is discretized, its
// interior samples pulled back through the quasi-inverse, and consecutive
// pullbacks joined by source geodesics. Sample gaps obey
//   interior <= 2 + tau + snap allowance,
//   endpoint <= 2 + 2 tau + snap allowance,
// and the resulting lambda is at most transfer_lambda_bound(lambda_target, ...).
struct TransferResult {
    Curve curve;
    UniformityReport report;          ///< source-side uniformity of the built curve
    UniformityReport report_target;   ///< target-side uniformity of the guide curve
    double lambda_source = 0.0;
    double lambda_target = 0.0;
    TransferBound bound{};
    bool short_branch = false;
    int N = 0;
    double max_gap = 0.0;
    double max_snap_offset = 0.0;
    bool gaps_ok = false;
    bool lambda_ok = false;
};
TransferResult transfer_uniform_curve(const TransferContext& ctx, VertexId x, VertexId y);

}  // namespace hypuni
