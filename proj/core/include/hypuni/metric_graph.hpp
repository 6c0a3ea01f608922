#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <unordered_map>
#include <vector>

namespace hypuni {

using VertexId = int;

struct Edge {
    VertexId u;
    VertexId v;
    double length;
};

// Finite connected weighted graph viewed as a geodesic metric space.
// Carries a base vertex (the uniformization center) and a frontier set
// marking the directions in which the graph has been truncated.
//
// Immutable after construction. Shortest-path distances between all
// vertex pairs are computed once up front, so distance queries are O(1)
// and geodesic extraction walks the distance table. Geodesics are made
// deterministic by always preferring the lowest-index next vertex among
// shortest-path candidates.
class MetricGraph {
public:
    MetricGraph(std::vector<std::string> names,
                std::vector<Edge> edges,
                VertexId base,
                std::vector<VertexId> frontier);

    int vertex_count() const { return static_cast<int>(names_.size()); }
    const std::string& name(VertexId v) const { return names_.at(v); }
    const std::vector<std::string>& names() const { return names_; }
    VertexId id_of(const std::string& name) const;

    const std::vector<Edge>& edges() const { return edges_; }
    VertexId base() const { return base_; }
    const std::vector<VertexId>& frontier() const { return frontier_; }
    bool is_frontier(VertexId v) const;

    struct Arc {
        VertexId to;
        double length;
        int edge_index;
    };
    const std::vector<Arc>& neighbors(VertexId v) const { return adj_.at(v); }

    // -1 when u and v are not adjacent
    int edge_between(VertexId u, VertexId v) const;
    double edge_length(VertexId u, VertexId v) const;

    double shortest_dist(VertexId u, VertexId v) const;
    const std::vector<double>& dist_row(VertexId u) const;
    double diameter() const;
    double min_edge_length() const { return min_edge_length_; }

    // Vertex sequence of the deterministic geodesic from u to v.
    std::vector<VertexId> geodesic_vertices(VertexId u, VertexId v) const;

    // (x|y)_w = (d(x,w) + d(y,w) - d(x,y)) / 2
    double gromov_product(VertexId x, VertexId y, VertexId w) const;

    // Same vertices and edges, different frontier marking.
    MetricGraph with_frontier(std::vector<VertexId> frontier) const;

private:
    std::vector<std::string> names_;
    std::vector<Edge> edges_;
    VertexId base_ = 0;
    std::vector<VertexId> frontier_;
    std::vector<std::vector<Arc>> adj_;
    std::unordered_map<std::int64_t, int> edge_lookup_;
    std::vector<std::vector<double>> dist_;
    double min_edge_length_ = 0;

    void validate_and_index();
    void compute_all_distances();
};

// Splits every edge longer than h_max into equal pieces short enough to
// fit. Original vertices keep their ids; cut vertices are appended with
// derived names. Base and frontier are preserved.
MetricGraph subdivide(const MetricGraph& g, double h_max);

// Deterministic single-source shortest-path walk used by both the graph
// metric and the uniformized metric: returns the vertex sequence of the
// lexicographically first (by vertex index) shortest path from u to v,
// given per-vertex distance rows and an edge-weight accessor.
struct WeightedView {
    const MetricGraph* graph;
    // weight of edge i under the metric being traced
    const std::vector<double>* edge_weight;
    const std::vector<std::vector<double>>* dist;
};
std::vector<VertexId> trace_shortest_path(const WeightedView& view, VertexId u, VertexId v);

// Dijkstra over arbitrary positive edge weights; fills one distance row.
void dijkstra_row(const MetricGraph& g, const std::vector<double>& edge_weight,
                  VertexId source, std::vector<double>& out);

}  // namespace hypuni
