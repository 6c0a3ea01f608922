#include "hypuni/perturb.hpp"

#include <random>
#include <stdexcept>

namespace hypuni {

namespace {

std::vector<VertexId> inclusion(const MetricGraph& g) {
    std::vector<VertexId> map(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) map[v] = v;
    return map;
}

}  // namespace

PerturbResult perturb(const MetricGraph& g, double magnitude, std::uint64_t seed,
                      PerturbOptions options) {
    if (!(magnitude > 0)) throw std::invalid_argument("magnitude must be positive");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    std::vector<std::string> names = g.names();
    std::vector<Edge> edges = g.edges();

    // Draw order is part of the determinism contract: edge draws first,
    // then two per vertex. The per-vertex length draw is consumed even for
    // vertices that get no pendant, so one toss cannot shift every later
    // pendant length.
    double diam = g.diameter();
    if (options.scale_edges && diam > 0) {
        // stretching by at most 1 + magnitude/diam moves every distance by
        // less than magnitude and never shrinks one
        for (Edge& e : edges) e.length *= 1.0 + unit(rng) * magnitude / diam;
    }
    if (options.pendants) {
        for (int v = 0; v < g.vertex_count(); ++v) {
            double toss = unit(rng);
            double len = magnitude * (1.0 - unit(rng));  // in (0, magnitude]
            if (toss < 0.5) {
                VertexId p = static_cast<VertexId>(names.size());
                names.push_back(g.name(v) + "+p");
                edges.push_back({v, p, len});
            }
        }
    }
    MetricGraph out(std::move(names), std::move(edges), g.base(), g.frontier());
    return {std::move(out), inclusion(g), magnitude};
}

PerturbResult attach_pendants(const MetricGraph& g, double length) {
    if (!(length > 0)) throw std::invalid_argument("pendant length must be positive");
    std::vector<std::string> names = g.names();
    std::vector<Edge> edges = g.edges();
    for (int v = 0; v < g.vertex_count(); ++v) {
        VertexId p = static_cast<VertexId>(names.size());
        names.push_back(g.name(v) + "+p");
        edges.push_back({v, p, length});
    }
    MetricGraph out(std::move(names), std::move(edges), g.base(), g.frontier());
    return {std::move(out), inclusion(g), length};
}

PerturbResult scale_edges(const MetricGraph& g, double factor) {
    if (!(factor > 0)) throw std::invalid_argument("scale factor must be positive");
    std::vector<Edge> edges = g.edges();
    for (Edge& e : edges) e.length *= factor;
    MetricGraph out(g.names(), std::move(edges), g.base(), g.frontier());
    return {std::move(out), inclusion(g), 0.0};
}

}  // namespace hypuni
