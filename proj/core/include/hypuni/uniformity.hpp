#pragma once

#include <limits>
#include <vector>

#include "hypuni/boundary.hpp"
#include "hypuni/sampling.hpp"
#include "hypuni/uniformize.hpp"

namespace hypuni {

// Uniformity data of one curve in the uniformized metric.
//
// quasiconvexity_ratio: ell_eps(curve) / d_eps(endpoints).
// cigar_ratio: worst over curve vertices z of
//   min(ell_eps to either endpoint along the curve) / delta(z).
// lambda = max of the two; a curve is lambda-uniform when both conditions
// hold with that constant.
//
// The cigar condition is evaluated at curve vertices. Between vertices it
// can only exceed the vertex values within the per-edge envelope reported
// as cigar_ratio_interior_bound (infinite when an edge is long enough to
// exhaust the boundary distance).
struct UniformityReport {
    double quasiconvexity_ratio = 1.0;
    double cigar_ratio = 0.0;
    double cigar_ratio_interior_bound = 0.0;
    double lambda = 1.0;
    int witness_index = -1;  ///< curve vertex index realizing cigar_ratio
    VertexId witness_vertex = -1;
    double ell_eps_curve = 0.0;
    double d_eps_endpoints = 0.0;
};

UniformityReport check_uniform_curve(const UniformizedGraph& ug, const BoundaryDistance& bd,
                                     const Curve& c);

double cigar_ratio_at(const UniformizedGraph& ug, const BoundaryDistance& bd, const Curve& c,
                      int vertex_index);

struct DomainPairResult {
    VertexId u = -1;
    VertexId v = -1;
    double d_eps = 0.0;
    double lambda = 0.0;
    VertexId witness = -1;
};

// Scans d_eps-geodesics as candidate curves. lambda_hat is the worst
// lambda seen; pairs whose candidate exceeds lambda_cap are listed as
// failures. Candidates are the chosen geodesics only, so lambda_hat is a
// lower bound for the true domain constant and an upper bound certificate
// when all candidates pass.
struct DomainUniformityEstimate {
    double lambda_hat = 0.0;
    std::vector<DomainPairResult> pairs;
    std::vector<int> failures;  ///< indices into pairs
};

DomainUniformityEstimate estimate_domain_uniformity(
    const UniformizedGraph& ug, const BoundaryDistance& bd, const PairSpec& spec,
    double lambda_cap = std::numeric_limits<double>::infinity());

}  // namespace hypuni
