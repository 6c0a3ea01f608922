#include "hypuni/starlikeness.hpp"

#include <limits>
#include <stdexcept>

#include "hypuni/parallel.hpp"

namespace hypuni {

StarlikenessReport starlikeness(const MetricGraph& g) {
    if (g.frontier().empty())
        throw std::invalid_argument(
            "starlikeness needs a nonempty frontier: with no marked directions the ray family "
            "is empty and the quantity is undefined");

    StarlikenessReport rep;
    for (VertexId f : g.frontier()) rep.rays.push_back(geodesic(g, g.base(), f));

    const int n = g.vertex_count();
    std::vector<double> gap(n);
    parallel_for(n, [&](int v) {
        double best = std::numeric_limits<double>::infinity();
        for (const Curve& ray : rep.rays)
            for (VertexId w : ray.vertices) best = std::min(best, g.shortest_dist(v, w));
        gap[v] = best;
    });

    rep.M = gap[0];
    rep.witness = 0;
    for (int v = 1; v < n; ++v)
        if (gap[v] > rep.M) {
            rep.M = gap[v];
            rep.witness = v;
        }
    return rep;
}

}  // namespace hypuni
