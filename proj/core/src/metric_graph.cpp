#include "hypuni/metric_graph.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

#include "hypuni/parallel.hpp"

namespace hypuni {

namespace {

std::int64_t pair_key(VertexId u, VertexId v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::int64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

MetricGraph::MetricGraph(std::vector<std::string> names,
                         std::vector<Edge> edges,
                         VertexId base,
                         std::vector<VertexId> frontier)
    : names_(std::move(names)),
      edges_(std::move(edges)),
      base_(base),
      frontier_(std::move(frontier)) {
    validate_and_index();
    compute_all_distances();
}

void MetricGraph::validate_and_index() {
    const int n = vertex_count();
    if (n == 0) throw std::invalid_argument("graph has no vertices");
    if (base_ < 0 || base_ >= n) throw std::invalid_argument("base vertex out of range");

    adj_.assign(n, {});
    edge_lookup_.clear();
    min_edge_length_ = edges_.empty() ? 0.0 : kInf;
    for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
        const Edge& e = edges_[i];
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (e.u == e.v)
            throw std::invalid_argument("self loop at vertex " + names_[e.u]);
        if (!(e.length > 0))
            throw std::invalid_argument("edge length must be positive: " +
                                        names_[e.u] + " " + names_[e.v]);
        if (!edge_lookup_.emplace(pair_key(e.u, e.v), i).second)
            throw std::invalid_argument("duplicate edge: " + names_[e.u] + " " + names_[e.v]);
        adj_[e.u].push_back({e.v, e.length, i});
        adj_[e.v].push_back({e.u, e.length, i});
        min_edge_length_ = std::min(min_edge_length_, e.length);
    }
    for (auto& arcs : adj_)
        std::sort(arcs.begin(), arcs.end(),
                  [](const Arc& a, const Arc& b) { return a.to < b.to; });

    std::vector<char> seen(n, 0);
    std::vector<VertexId> stack{base_};
    seen[base_] = 1;
    int reached = 0;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        ++reached;
        for (const Arc& a : adj_[v])
            if (!seen[a.to]) {
                seen[a.to] = 1;
                stack.push_back(a.to);
            }
    }
    if (reached != n) throw std::invalid_argument("graph is not connected");

    std::vector<char> mark(n, 0);
    for (VertexId f : frontier_) {
        if (f < 0 || f >= n) throw std::invalid_argument("frontier vertex out of range");
        if (mark[f]) throw std::invalid_argument("repeated frontier vertex " + names_[f]);
        mark[f] = 1;
        if (adj_[f].empty())
            throw std::invalid_argument("frontier vertex has no edges: " + names_[f]);
    }
    std::sort(frontier_.begin(), frontier_.end());
}

void MetricGraph::compute_all_distances() {
    const int n = vertex_count();
    std::vector<double> weights(edges_.size());
    for (size_t i = 0; i < edges_.size(); ++i) weights[i] = edges_[i].length;
    dist_.assign(n, {});
    parallel_for(n, [&](int s) { dijkstra_row(*this, weights, s, dist_[s]); });
}

VertexId MetricGraph::id_of(const std::string& name) const {
    for (int i = 0; i < vertex_count(); ++i)
        if (names_[i] == name) return i;
    throw std::invalid_argument("unknown vertex name: " + name);
}

bool MetricGraph::is_frontier(VertexId v) const {
    return std::binary_search(frontier_.begin(), frontier_.end(), v);
}

int MetricGraph::edge_between(VertexId u, VertexId v) const {
    auto it = edge_lookup_.find(pair_key(u, v));
    return it == edge_lookup_.end() ? -1 : it->second;
}

double MetricGraph::edge_length(VertexId u, VertexId v) const {
    int i = edge_between(u, v);
    if (i < 0)
        throw std::invalid_argument("vertices not adjacent: " + names_.at(u) + " " + names_.at(v));
    return edges_[i].length;
}

double MetricGraph::shortest_dist(VertexId u, VertexId v) const {
    return dist_.at(u).at(v);
}

const std::vector<double>& MetricGraph::dist_row(VertexId u) const { return dist_.at(u); }

double MetricGraph::diameter() const {
    double d = 0;
    for (const auto& row : dist_)
        for (double x : row) d = std::max(d, x);
    return d;
}

std::vector<VertexId> MetricGraph::geodesic_vertices(VertexId u, VertexId v) const {
    std::vector<double> weights(edges_.size());
    for (size_t i = 0; i < edges_.size(); ++i) weights[i] = edges_[i].length;
    WeightedView view{this, &weights, &dist_};
    return trace_shortest_path(view, u, v);
}

double MetricGraph::gromov_product(VertexId x, VertexId y, VertexId w) const {
    return 0.5 * (shortest_dist(x, w) + shortest_dist(y, w) - shortest_dist(x, y));
}

MetricGraph MetricGraph::with_frontier(std::vector<VertexId> frontier) const {
    MetricGraph copy = *this;
    copy.frontier_ = std::move(frontier);
    const int n = copy.vertex_count();
    std::vector<char> mark(n, 0);
    for (VertexId f : copy.frontier_) {
        if (f < 0 || f >= n) throw std::invalid_argument("frontier vertex out of range");
        if (mark[f]) throw std::invalid_argument("repeated frontier vertex " + copy.names_[f]);
        mark[f] = 1;
        if (copy.adj_[f].empty())
            throw std::invalid_argument("frontier vertex has no edges: " + copy.names_[f]);
    }
    std::sort(copy.frontier_.begin(), copy.frontier_.end());
    return copy;
}

void dijkstra_row(const MetricGraph& g, const std::vector<double>& edge_weight,
                  VertexId source, std::vector<double>& out) {
    const int n = g.vertex_count();
    out.assign(n, kInf);
    out[source] = 0.0;
    using Item = std::pair<double, VertexId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    heap.push({0.0, source});
    while (!heap.empty()) {
        auto [d, v] = heap.top();
        heap.pop();
        if (d > out[v]) continue;
        for (const auto& a : g.neighbors(v)) {
            double nd = d + edge_weight[a.edge_index];
            if (nd < out[a.to]) {
                out[a.to] = nd;
                heap.push({nd, a.to});
            }
        }
    }
}

std::vector<VertexId> trace_shortest_path(const WeightedView& view, VertexId u, VertexId v) {
    const MetricGraph& g = *view.graph;
    const auto& dist_to_v = (*view.dist)[v];
    std::vector<VertexId> path{u};
    VertexId cur = u;
    while (cur != v) {
        double remaining = dist_to_v[cur];
        double tol = 1e-12 * (1.0 + remaining);
        VertexId next = -1;
        for (const auto& a : g.neighbors(cur)) {
            double w = (*view.edge_weight)[a.edge_index];
            if (std::abs(w + dist_to_v[a.to] - remaining) <= tol) {
                next = a.to;
                break;  // neighbors sorted by index, first hit is smallest
            }
        }
        if (next < 0) throw std::runtime_error("shortest path trace failed");
        path.push_back(next);
        cur = next;
    }
    return path;
}

MetricGraph subdivide(const MetricGraph& g, double h_max) {
    if (!(h_max > 0)) throw std::invalid_argument("h_max must be positive");
    std::vector<std::string> names = g.names();
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        int pieces = static_cast<int>(std::ceil(e.length / h_max));
        if (pieces <= 1) {
            edges.push_back(e);
            continue;
        }
        double step = e.length / pieces;
        VertexId prev = e.u;
        for (int k = 1; k < pieces; ++k) {
            VertexId mid = static_cast<VertexId>(names.size());
            names.push_back(g.name(e.u) + "~" + g.name(e.v) + "~" + std::to_string(k));
            edges.push_back({prev, mid, step});
            prev = mid;
        }
        edges.push_back({prev, e.v, step});
    }
    return MetricGraph(std::move(names), std::move(edges), g.base(), g.frontier());
}

}  // namespace hypuni
