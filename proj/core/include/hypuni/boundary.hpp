#pragma once

#include <vector>

#include "hypuni/uniformize.hpp"

namespace hypuni {

// Distance to the ideal boundary in the uniformized metric. The graph is
// a truncation, so each frontier vertex f carries the tail density(f)/eps
// of the ray continuing past it, and
//   delta(v) = min over frontier f of d_eps(v, f) + density(f)/eps.
// This makes delta(v) >= density(v)/eps exact, with equality whenever v
// lies on a geodesic from the base to the frontier.
struct BoundaryDistance {
    double eps = 0.0;
    std::vector<double> delta;
    std::vector<VertexId> escape;  ///< frontier vertex realizing the minimum
};

BoundaryDistance delta_eps(const UniformizedGraph& ug);

// log(1 + d_eps(u,v) / min(delta(u), delta(v)))
double j_metric(const UniformizedGraph& ug, const BoundaryDistance& bd, VertexId u, VertexId v);

}  // namespace hypuni
