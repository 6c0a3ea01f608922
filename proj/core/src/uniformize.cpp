#include "hypuni/uniformize.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "hypuni/constants.hpp"
#include "hypuni/graph_io.hpp"
#include "hypuni/parallel.hpp"

namespace hypuni {

UniformizedGraph::UniformizedGraph(GraphPtr g, double eps) : graph_(std::move(g)), eps_(eps) {
    if (!graph_) throw std::invalid_argument("uniformize needs a graph");
    if (!(eps_ > 0)) throw std::invalid_argument("eps must be positive");
    const MetricGraph& G = *graph_;
    const int n = G.vertex_count();

    dist_to_base_ = G.dist_row(G.base());
    density_.resize(n);
    for (int v = 0; v < n; ++v) density_[v] = std::exp(-eps_ * dist_to_base_[v]);

    const auto& E = G.edges();
    edge_len_eps_.resize(E.size());
    for (size_t i = 0; i < E.size(); ++i)
        edge_len_eps_[i] =
            exp_edge_integral(eps_, dist_to_base_[E[i].u], dist_to_base_[E[i].v], E[i].length);

    dist_eps_.assign(n, {});
    parallel_for(n, [&](int s) { dijkstra_row(G, edge_len_eps_, s, dist_eps_[s]); });
}

double UniformizedGraph::ell_eps(const Curve& c) const {
    double sum = 0.0;
    for (size_t i = 0; i + 1 < c.vertices.size(); ++i) {
        int e = graph_->edge_between(c.vertices[i], c.vertices[i + 1]);
        if (e < 0) throw std::invalid_argument("curve leaves the graph");
        sum += edge_len_eps_[e];
    }
    return sum;
}

double UniformizedGraph::ell_eps_between(const Curve& c, double s0, double s1) const {
    s0 = std::max(s0, 0.0);
    s1 = std::min(s1, c.length());
    if (s1 <= s0) return 0.0;
    double sum = 0.0;
    for (size_t i = 0; i + 1 < c.vertices.size(); ++i) {
        double lo = c.cumulative[i];
        double hi = c.cumulative[i + 1];
        double a0 = std::max(lo, s0);
        double a1 = std::min(hi, s1);
        if (a1 <= a0) continue;
        double w = hi - lo;
        double ru = dist_to_base_[c.vertices[i]];
        double rv = dist_to_base_[c.vertices[i + 1]];
        auto base_dist_at = [&](double s) { return ru + (rv - ru) * (s - lo) / w; };
        sum += exp_edge_integral(eps_, base_dist_at(a0), base_dist_at(a1), a1 - a0);
    }
    return sum;
}

double UniformizedGraph::density_at(const Curve& c, double s) const {
    s = std::clamp(s, 0.0, c.length());
    for (size_t i = 0; i + 1 < c.vertices.size(); ++i) {
        double hi = c.cumulative[i + 1];
        if (s > hi) continue;
        double lo = c.cumulative[i];
        double t = (s - lo) / (hi - lo);
        double r = dist_to_base_[c.vertices[i]] * (1.0 - t) + dist_to_base_[c.vertices[i + 1]] * t;
        return std::exp(-eps_ * r);
    }
    return density_[c.vertices.back()];
}

Curve UniformizedGraph::geodesic_eps(VertexId u, VertexId v) const {
    WeightedView view{graph_.get(), &edge_len_eps_, &dist_eps_};
    return Curve::along(*graph_, trace_shortest_path(view, u, v));
}

UniformizedGraph uniformize(GraphPtr g, double eps) { return UniformizedGraph(std::move(g), eps); }

void write_uniformized(std::ostream& out, const UniformizedGraph& ug) {
    const MetricGraph& g = ug.graph();
    out << "epsilon " << io_double(ug.epsilon()) << "\n";
    out << "base " << g.name(g.base()) << "\n";
    if (!g.frontier().empty()) {
        out << "frontier";
        for (VertexId f : g.frontier()) out << " " << g.name(f);
        out << "\n";
    }
    const auto& E = g.edges();
    for (size_t i = 0; i < E.size(); ++i)
        out << g.name(E[i].u) << " " << g.name(E[i].v) << " " << io_double(E[i].length) << " "
            << io_double(ug.edge_len_eps(static_cast<int>(i))) << "\n";
}

void write_uniformized_file(const std::string& path, const UniformizedGraph& ug) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    write_uniformized(out, ug);
}

}  // namespace hypuni
