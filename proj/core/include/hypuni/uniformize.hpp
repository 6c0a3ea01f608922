#pragma once

#include <iosfwd>
#include <memory>
#include <vector>

#include "hypuni/curve.hpp"
#include "hypuni/metric_graph.hpp"

namespace hypuni {

using GraphPtr = std::shared_ptr<const MetricGraph>;

// The graph reweighted by the density e^{-eps d(., base)}. Each edge gets
// the exact integral of the density along it, with the base distance
// interpolated linearly between the endpoints; this is exact on edges
// lying along shortest paths through the base and a declared modeling
// choice elsewhere. Uniformized distances between all pairs are computed
// at construction.
class UniformizedGraph {
public:
    UniformizedGraph(GraphPtr g, double eps);

    const MetricGraph& graph() const { return *graph_; }
    GraphPtr graph_ptr() const { return graph_; }
    double epsilon() const { return eps_; }

    double dist_to_base(VertexId v) const { return dist_to_base_[v]; }
    double density(VertexId v) const { return density_[v]; }
    double edge_len_eps(int edge_index) const { return edge_len_eps_[edge_index]; }
    const std::vector<double>& edge_lengths_eps() const { return edge_len_eps_; }

    double d_eps(VertexId u, VertexId v) const { return dist_eps_[u][v]; }
    const std::vector<double>& d_eps_row(VertexId u) const { return dist_eps_[u]; }

    double ell_eps(const Curve& c) const;

    // Uniformized length of the curve portion between arclengths s0 <= s1,
    // measured in graph arclength. Fractional edge parts use the same
    // linear interpolation as edge_len_eps.
    double ell_eps_between(const Curve& c, double s0, double s1) const;

    // Density at the point of c sitting at graph arclength s.
    double density_at(const Curve& c, double s) const;

    // Deterministic d_eps-shortest path.
    Curve geodesic_eps(VertexId u, VertexId v) const;

private:
    GraphPtr graph_;
    double eps_;
    std::vector<double> dist_to_base_;
    std::vector<double> density_;
    std::vector<double> edge_len_eps_;
    std::vector<std::vector<double>> dist_eps_;
};

UniformizedGraph uniformize(GraphPtr g, double eps);

// Edge list plus an "epsilon" header and a fourth column carrying
// edge_len_eps.
void write_uniformized(std::ostream& out, const UniformizedGraph& ug);
void write_uniformized_file(const std::string& path, const UniformizedGraph& ug);

}  // namespace hypuni
