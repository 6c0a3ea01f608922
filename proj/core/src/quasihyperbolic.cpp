#include "hypuni/quasihyperbolic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hypuni/constants.hpp"
#include "hypuni/parallel.hpp"

namespace hypuni {

QuasihyperbolicMetric::QuasihyperbolicMetric(const UniformizedGraph& ug,
                                             const BoundaryDistance& bd) {
    const MetricGraph& g = ug.graph();
    const auto& E = g.edges();
    weight_.resize(E.size());
    for (size_t i = 0; i < E.size(); ++i)
        weight_[i] =
            ug.edge_len_eps(static_cast<int>(i)) * 2.0 / (bd.delta[E[i].u] + bd.delta[E[i].v]);
    dist_k_.assign(g.vertex_count(), {});
    parallel_for(g.vertex_count(), [&](int s) { dijkstra_row(g, weight_, s, dist_k_[s]); });
}

BiLipschitzReport bilipschitz_report(const UniformizedGraph& ug, const BoundaryDistance&,
                                     const QuasihyperbolicMetric& k, double M,
                                     const PairSpec& pairs, double tolerance) {
    PairSpec spec = pairs;
    spec.min_dist = std::max(spec.min_dist, 1.0);
    auto ps = sample_pairs(ug.graph(), spec);

    BiLipschitzReport r;
    r.tolerance = tolerance;
    double w_max = 0.0;
    for (const auto& e : ug.graph().edges()) w_max = std::max(w_max, e.length);
    double factor = bilipschitz_factor(ug.epsilon(), M);
    r.bound = factor * factor * std::exp(ug.epsilon() * w_max) * (1.0 + tolerance);
    r.min_ratio = std::numeric_limits<double>::infinity();
    r.max_ratio = 0.0;
    for (auto [u, v] : ps) {
        double ratio = k.dist(u, v) / ug.graph().shortest_dist(u, v);
        if (ratio < r.min_ratio) {
            r.min_ratio = ratio;
            r.witness_min = {u, v};
        }
        if (ratio > r.max_ratio) {
            r.max_ratio = ratio;
            r.witness_max = {u, v};
        }
    }
    r.pairs_checked = static_cast<long>(ps.size());
    r.within_bound = !ps.empty() && r.max_ratio / r.min_ratio <= r.bound;
    return r;
}

}  // namespace hypuni
