#pragma once

#include <vector>

#include "hypuni/metric_graph.hpp"

namespace hypuni {

// Path in a graph, stored as the vertex sequence together with the
// cumulative arclength at each vertex. cumulative.front() is 0 and
// consecutive differences equal the lengths of the traversed edges.
struct Curve {
    std::vector<VertexId> vertices;
    std::vector<double> cumulative;

    double length() const { return cumulative.empty() ? 0.0 : cumulative.back(); }
    int segment_count() const { return static_cast<int>(vertices.size()) - 1; }
    VertexId first() const { return vertices.front(); }
    VertexId last() const { return vertices.back(); }

    // Builds the curve along a vertex walk, checking edge consistency.
    static Curve along(const MetricGraph& g, const std::vector<VertexId>& walk);

    // Index of the curve vertex closest in arclength to s, and the
    // snap offset |cumulative[i] - s|.
    std::pair<int, double> nearest_vertex(double s) const;

    // Portion between curve vertex indices i <= j, re-based to start at 0.
    Curve slice(int i, int j) const;

    Curve reversed() const;

    // Appends other, whose first vertex must equal this->last().
    Curve concat(const Curve& other) const;
};

Curve geodesic(const MetricGraph& g, VertexId u, VertexId v);

}  // namespace hypuni
