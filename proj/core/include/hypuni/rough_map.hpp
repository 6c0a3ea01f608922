#pragma once

#include <memory>
#include <vector>

#include "hypuni/metric_graph.hpp"
#include "hypuni/uniformize.hpp"

namespace hypuni {

// Vertex map between two graphs with additive metric control.
//
// Isometry kind:   |d(phi u, phi v) - d(u, v)| <= tau and the image is
//                  tau-dense in the target.
// Similarity kind: |d(phi u, phi v) - scale * d(u, v)| <= tau, image
//                  tau-dense.
//
// tau is the declared constant; verify_rough_map measures the actual
// distortion and density gap and tightens tau to their maximum.
struct RoughMap {
    GraphPtr source;
    GraphPtr target;
    std::vector<VertexId> map;
    bool similarity = false;
    double scale = 1.0;
    double tau = 0.0;
    double tau_distortion = -1.0;
    double tau_density = -1.0;
    bool verified = false;
};

RoughMap identity_map(GraphPtr g);
RoughMap make_rough_map(GraphPtr source, GraphPtr target, std::vector<VertexId> map,
                        double declared_tau = 0.0, bool similarity = false, double scale = 1.0);

RoughMap verify_rough_map(RoughMap m);

// Nearest-image preimage: each target vertex is sent to the lowest-index
// source vertex whose image is closest. Requires a verified isometry-kind
// map. The result is verified and satisfies tau(inverse) <= 3 tau(m).
RoughMap quasi_inverse(const RoughMap& m);

struct RoundTripGaps {
    double source_gap;  ///< max over y of d(y, inv(phi(y))), at most 2 tau
    double target_gap;  ///< max over x of d(x, phi(inv(x))), at most tau
};
RoundTripGaps round_trip_gaps(const RoughMap& m, const RoughMap& inverse);

// Same map with the declared constant tripled. After roughening, the map,
// its quasi-inverse, and both round trips are controlled by one constant.
RoughMap roughen(const RoughMap& m);

// apply first, then second (first.target must be second.source)
RoughMap compose(const RoughMap& first, const RoughMap& second);

}  // namespace hypuni
