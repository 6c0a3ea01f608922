#include "hypuni/sampling.hpp"

#include <random>
#include <stdexcept>

namespace hypuni {

std::vector<std::pair<VertexId, VertexId>> sample_pairs(const MetricGraph& g,
                                                        const PairSpec& spec) {
    const int n = g.vertex_count();
    std::vector<std::pair<VertexId, VertexId>> out;
    if (spec.exhaustive) {
        for (VertexId u = 0; u < n; ++u)
            for (VertexId v = u + 1; v < n; ++v)
                if (g.shortest_dist(u, v) >= spec.min_dist) out.emplace_back(u, v);
        return out;
    }
    if (n < 2 || spec.count <= 0) return out;
    std::mt19937_64 rng(spec.seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    // bounded rejection: a min_dist that filters out almost every pair
    // yields a short list instead of a hang
    long attempts = 0;
    const long cap = 1000 + 400L * spec.count;
    while (static_cast<int>(out.size()) < spec.count && attempts < cap) {
        ++attempts;
        VertexId u = pick(rng);
        VertexId v = pick(rng);
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        if (g.shortest_dist(u, v) < spec.min_dist) continue;
        out.emplace_back(u, v);
    }
    return out;
}

std::vector<Curve> sample_curves(const MetricGraph& g, int count, std::uint64_t seed,
                                 double min_len) {
    if (g.vertex_count() < 2 || g.edges().empty())
        throw std::invalid_argument("sample_curves needs a graph with at least one edge");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, g.vertex_count() - 1);

    auto random_walk = [&](VertexId start) {
        std::vector<VertexId> walk{start};
        double len = 0.0;
        VertexId prev = -1;
        VertexId cur = start;
        while (len <= min_len) {
            const auto& arcs = g.neighbors(cur);
            int choices = 0;
            for (const auto& a : arcs)
                if (a.to != prev) ++choices;
            const MetricGraph::Arc* step = &arcs[0];  // dead end: bounce back
            if (choices > 0) {
                std::uniform_int_distribution<int> c(0, choices - 1);
                int k = c(rng);
                for (const auto& a : arcs)
                    if (a.to != prev && k-- == 0) {
                        step = &a;
                        break;
                    }
            }
            walk.push_back(step->to);
            len += step->length;
            prev = cur;
            cur = step->to;
        }
        return Curve::along(g, walk);
    };

    std::vector<Curve> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        if (i % 2 == 0) {
            // geodesic between a far-apart pair; walks cover graphs whose
            // diameter never clears min_len
            bool found = false;
            for (int t = 0; t < 200 && !found; ++t) {
                VertexId u = pick(rng);
                VertexId v = pick(rng);
                if (u != v && g.shortest_dist(u, v) > min_len) {
                    out.push_back(geodesic(g, u, v));
                    found = true;
                }
            }
            if (!found) out.push_back(random_walk(pick(rng)));
        } else {
            out.push_back(random_walk(pick(rng)));
        }
    }
    return out;
}

}  // namespace hypuni
