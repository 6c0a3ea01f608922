#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hypuni/curve.hpp"
#include "hypuni/metric_graph.hpp"

namespace hypuni {

// How a pair-based scan picks its vertex pairs. Exhaustive covers every
// unordered pair once; otherwise `count` pairs are drawn with the seeded
// generator. min_dist filters by graph distance in both modes.
struct PairSpec {
    bool exhaustive = true;
    int count = 0;
    std::uint64_t seed = 0;
    double min_dist = 0.0;

    static PairSpec all(double min_dist = 0.0) { return {true, 0, 0, min_dist}; }
    static PairSpec random(int count, std::uint64_t seed, double min_dist = 0.0) {
        return {false, count, seed, min_dist};
    }
};

std::vector<std::pair<VertexId, VertexId>> sample_pairs(const MetricGraph& g,
                                                        const PairSpec& spec);

// Deterministic mix of geodesics and non-backtracking random walks, each
// of arclength greater than min_len. Used to exercise curve estimates on
// generic inputs.
std::vector<Curve> sample_curves(const MetricGraph& g, int count, std::uint64_t seed,
                                 double min_len);

}  // namespace hypuni
