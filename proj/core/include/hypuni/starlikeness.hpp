#pragma once

#include <vector>

#include "hypuni/curve.hpp"
#include "hypuni/metric_graph.hpp"

namespace hypuni {

struct StarlikenessReport {
    double M = 0.0;  ///< worst distance from a vertex to the ray family
    VertexId witness = -1;
    std::vector<Curve> rays;  ///< geodesics from the base to each frontier vertex
};

// Every vertex is measured against the nearest vertex of the nearest ray,
// where the rays run from the base to the frontier. Throws if the frontier
// is empty: with no marked directions to infinity the quantity is
// undefined ("unbounded directions unspecified").
StarlikenessReport starlikeness(const MetricGraph& g);

}  // namespace hypuni
