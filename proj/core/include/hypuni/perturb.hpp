#pragma once

#include <cstdint>

#include "hypuni/metric_graph.hpp"

namespace hypuni {

struct PerturbResult {
    MetricGraph graph;
    std::vector<VertexId> map;  ///< inclusion: original vertex -> vertex of graph
    double tau_bound;           ///< the inclusion is a tau-rough isometry, tau <= this
};

struct PerturbOptions {
    bool pendants = true;     ///< attach a pendant to roughly half the vertices
    bool scale_edges = true;  ///< stretch edge lengths by factors up to 1 + magnitude/diam
};

// Random perturbation of bounded metric effect. Pendant lengths lie in
// (0, magnitude]; edge stretch keeps every distance within magnitude of
// its original value. Deterministic for a fixed seed.
PerturbResult perturb(const MetricGraph& g, double magnitude, std::uint64_t seed,
                      PerturbOptions options = {});

// Pendant of the given length on every vertex. The inclusion has
// distortion 0 and density gap exactly `length`.
PerturbResult attach_pendants(const MetricGraph& g, double length);

// Every edge length multiplied by `factor`; the identity-on-vertices map
// is an exact (factor, 0) similarity.
PerturbResult scale_edges(const MetricGraph& g, double factor);

}  // namespace hypuni
