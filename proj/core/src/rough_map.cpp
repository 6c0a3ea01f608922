#include "hypuni/rough_map.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "hypuni/parallel.hpp"

namespace hypuni {

RoughMap identity_map(GraphPtr g) {
    if (!g) throw std::invalid_argument("identity_map needs a graph");
    RoughMap m;
    m.source = g;
    m.target = std::move(g);
    m.map.resize(m.source->vertex_count());
    std::iota(m.map.begin(), m.map.end(), 0);
    m.tau = 0.0;
    m.tau_distortion = 0.0;
    m.tau_density = 0.0;
    m.verified = true;
    return m;
}

RoughMap make_rough_map(GraphPtr source, GraphPtr target, std::vector<VertexId> map,
                        double declared_tau, bool similarity, double scale) {
    if (!source || !target) throw std::invalid_argument("make_rough_map needs two graphs");
    if (static_cast<int>(map.size()) != source->vertex_count())
        throw std::invalid_argument("map must assign every source vertex");
    for (VertexId t : map)
        if (t < 0 || t >= target->vertex_count())
            throw std::invalid_argument("map sends a vertex outside the target");
    if (similarity && !(scale > 0))
        throw std::invalid_argument("similarity scale must be positive");
    if (declared_tau < 0) throw std::invalid_argument("tau must be nonnegative");
    RoughMap m;
    m.source = std::move(source);
    m.target = std::move(target);
    m.map = std::move(map);
    m.similarity = similarity;
    m.scale = similarity ? scale : 1.0;
    m.tau = declared_tau;
    return m;
}

RoughMap verify_rough_map(RoughMap m) {
    const MetricGraph& S = *m.source;
    const MetricGraph& T = *m.target;
    const int ns = S.vertex_count();
    const int nt = T.vertex_count();

    std::vector<double> row_worst(ns, 0.0);
    parallel_for(ns, [&](int u) {
        double w = 0.0;
        for (int v = u + 1; v < ns; ++v)
            w = std::max(w, std::abs(T.shortest_dist(m.map[u], m.map[v]) -
                                     m.scale * S.shortest_dist(u, v)));
        row_worst[u] = w;
    });
    m.tau_distortion = *std::max_element(row_worst.begin(), row_worst.end());

    std::vector<double> gap(nt, 0.0);
    parallel_for(nt, [&](int t) {
        double best = std::numeric_limits<double>::infinity();
        for (int u = 0; u < ns; ++u) best = std::min(best, T.shortest_dist(t, m.map[u]));
        gap[t] = best;
    });
    m.tau_density = *std::max_element(gap.begin(), gap.end());

    m.tau = std::max(m.tau_distortion, m.tau_density);
    m.verified = true;
    return m;
}

RoughMap quasi_inverse(const RoughMap& m) {
    if (!m.verified) throw std::invalid_argument("quasi_inverse needs a verified map");
    if (m.similarity)
        throw std::invalid_argument("quasi_inverse is defined for isometry-kind maps");
    const MetricGraph& T = *m.target;
    const int ns = m.source->vertex_count();
    const int nt = T.vertex_count();
    std::vector<VertexId> inv(nt);
    parallel_for(nt, [&](int t) {
        VertexId best = 0;
        double best_d = T.shortest_dist(t, m.map[0]);
        for (int u = 1; u < ns; ++u) {
            double d = T.shortest_dist(t, m.map[u]);
            if (d < best_d) {  // strict, so ties keep the lowest source index
                best_d = d;
                best = u;
            }
        }
        inv[t] = best;
    });
    return verify_rough_map(make_rough_map(m.target, m.source, std::move(inv), 3.0 * m.tau));
}

RoundTripGaps round_trip_gaps(const RoughMap& m, const RoughMap& inverse) {
    if (m.source != inverse.target || m.target != inverse.source)
        throw std::invalid_argument("maps do not form a round trip");
    RoundTripGaps g{0.0, 0.0};
    const MetricGraph& S = *m.source;
    for (int u = 0; u < S.vertex_count(); ++u)
        g.source_gap = std::max(g.source_gap, S.shortest_dist(u, inverse.map[m.map[u]]));
    const MetricGraph& T = *m.target;
    for (int t = 0; t < T.vertex_count(); ++t)
        g.target_gap = std::max(g.target_gap, T.shortest_dist(t, m.map[inverse.map[t]]));
    return g;
}

RoughMap roughen(const RoughMap& m) {
    RoughMap out = m;
    out.tau *= 3.0;
    return out;
}

RoughMap compose(const RoughMap& first, const RoughMap& second) {
    if (first.target != second.source)
        throw std::invalid_argument("composition needs first.target == second.source");
    std::vector<VertexId> map(first.map.size());
    for (size_t i = 0; i < map.size(); ++i) map[i] = second.map[first.map[i]];
    RoughMap m;
    m.source = first.source;
    m.target = second.target;
    m.map = std::move(map);
    m.similarity = first.similarity || second.similarity;
    m.scale = first.scale * second.scale;
    m.tau = second.scale * first.tau + second.tau;
    return m;
}

}  // namespace hypuni
