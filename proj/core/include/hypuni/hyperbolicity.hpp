#pragma once

#include <array>
#include <cstdint>

#include "hypuni/metric_graph.hpp"

namespace hypuni {

struct HyperbolicityMode {
    bool exhaustive = true;
    long samples = 0;
    std::uint64_t seed = 0;

    static HyperbolicityMode all() { return {true, 0, 0}; }
    static HyperbolicityMode sampled(long n, std::uint64_t seed = 0) { return {false, n, seed}; }
};

struct HyperbolicityReport {
    double delta_thin = 0.0;        ///< worst thin-triangle excess over chosen geodesics
    double delta_four_point = 0.0;  ///< worst Gromov product deficit over quadruples
    std::array<VertexId, 3> witness_thin{-1, -1, -1};
    std::array<VertexId, 4> witness_four{-1, -1, -1, -1};
    bool exhaustive = true;  ///< false means both values are lower bounds
    long samples = 0;
    double sampling_resolution = 0.0;  ///< spacing of sub-edge sample points
};

// delta_thin: for each triple, points sampled along one side (at every
// vertex plus sub-edge points every min-edge-length) are measured against
// the vertex sets of the other two sides; the excess of the worst point is
// maximized over sides and triples. Sub-edge maxima between sample points
// are off by at most half the sampling resolution.
//
// delta_four_point: max over (x, y, z, w) of
//   min((x|z)_w, (z|y)_w) - (x|y)_w, clamped at zero.
HyperbolicityReport hyperbolicity(const MetricGraph& g,
                                  HyperbolicityMode mode = HyperbolicityMode::all());

// Re-evaluation hooks for report witnesses.
double thin_triangle_excess(const MetricGraph& g, VertexId x, VertexId y, VertexId z);
double four_point_deficit(const MetricGraph& g, VertexId x, VertexId y, VertexId z, VertexId w);

}  // namespace hypuni
