#include "hypuni/boundary.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace hypuni {

BoundaryDistance delta_eps(const UniformizedGraph& ug) {
    const MetricGraph& g = ug.graph();
    if (g.frontier().empty())
        throw std::invalid_argument("boundary distance needs a nonempty frontier");
    const int n = g.vertex_count();
    BoundaryDistance bd;
    bd.eps = ug.epsilon();
    bd.delta.resize(n);
    bd.escape.resize(n);
    for (int v = 0; v < n; ++v) {
        double best = std::numeric_limits<double>::infinity();
        VertexId arg = -1;
        // frontier is stored sorted, so ties pick the lowest vertex id
        for (VertexId f : g.frontier()) {
            double cand = ug.d_eps(v, f) + ug.density(f) / bd.eps;
            if (cand < best) {
                best = cand;
                arg = f;
            }
        }
        bd.delta[v] = best;
        bd.escape[v] = arg;
    }
    return bd;
}

double j_metric(const UniformizedGraph& ug, const BoundaryDistance& bd, VertexId u, VertexId v) {
    return std::log1p(ug.d_eps(u, v) / std::min(bd.delta[u], bd.delta[v]));
}

}  // namespace hypuni
