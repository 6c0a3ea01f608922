#include "hypuni/hyperbolicity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "hypuni/parallel.hpp"

namespace hypuni {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Distance from a point on one triangle side to the union of the other two
// sides' vertex sets. The point is either a side vertex or an interior
// point of a side edge, reached through whichever endpoint is cheaper.
double vertex_to_set(const MetricGraph& g, VertexId p, const std::vector<VertexId>& set) {
    double best = kInf;
    for (VertexId w : set) best = std::min(best, g.shortest_dist(p, w));
    return best;
}

double interior_to_set(const MetricGraph& g, VertexId u, VertexId v, double a, double len,
                       const std::vector<VertexId>& set) {
    double best = kInf;
    for (VertexId w : set)
        best = std::min(best,
                        std::min(a + g.shortest_dist(u, w), (len - a) + g.shortest_dist(v, w)));
    return best;
}

double side_excess(const MetricGraph& g, const std::vector<VertexId>& side,
                   const std::vector<VertexId>& others, double res) {
    double worst = 0.0;
    for (VertexId p : side) worst = std::max(worst, vertex_to_set(g, p, others));
    for (size_t i = 0; i + 1 < side.size(); ++i) {
        double len = g.edge_length(side[i], side[i + 1]);
        int steps = static_cast<int>(std::ceil(len / res)) - 1;
        for (int k = 1; k <= steps; ++k) {
            double a = k * res;
            if (a >= len) break;
            worst = std::max(worst, interior_to_set(g, side[i], side[i + 1], a, len, others));
        }
    }
    return worst;
}

template <typename Witness>
struct Best {
    double value = -1.0;
    Witness witness{};

    void offer(double v, const Witness& w) {
        if (v > value) {
            value = v;
            witness = w;
        }
    }
    // merging in block order keeps the first witness of the global maximum
    void merge(const Best& other) {
        if (other.value > value) *this = other;
    }
};

}  // namespace

double thin_triangle_excess(const MetricGraph& g, VertexId x, VertexId y, VertexId z) {
    double res = g.min_edge_length();
    auto sxy = g.geodesic_vertices(x, y);
    auto syz = g.geodesic_vertices(y, z);
    auto szx = g.geodesic_vertices(z, x);
    auto join = [](const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
        std::vector<VertexId> out = a;
        out.insert(out.end(), b.begin(), b.end());
        return out;
    };
    double e = side_excess(g, sxy, join(syz, szx), res);
    e = std::max(e, side_excess(g, syz, join(szx, sxy), res));
    e = std::max(e, side_excess(g, szx, join(sxy, syz), res));
    return e;
}

double four_point_deficit(const MetricGraph& g, VertexId x, VertexId y, VertexId z, VertexId w) {
    double d = std::min(g.gromov_product(x, z, w), g.gromov_product(z, y, w)) -
               g.gromov_product(x, y, w);
    return std::max(0.0, d);
}

HyperbolicityReport hyperbolicity(const MetricGraph& g, HyperbolicityMode mode) {
    const int n = g.vertex_count();
    HyperbolicityReport rep;
    rep.exhaustive = mode.exhaustive;
    rep.samples = mode.exhaustive ? 0 : mode.samples;
    rep.sampling_resolution = g.min_edge_length();

    using Thin = Best<std::array<VertexId, 3>>;
    using Four = Best<std::array<VertexId, 4>>;

    if (mode.exhaustive) {
        if (n >= 3) {
            std::vector<Thin> per_x(n);
            parallel_for(n, [&](int x) {
                Thin best;
                for (VertexId y = x + 1; y < n; ++y)
                    for (VertexId z = y + 1; z < n; ++z)
                        best.offer(thin_triangle_excess(g, x, y, z), {x, y, z});
                per_x[x] = best;
            });
            Thin total;
            for (const Thin& b : per_x) total.merge(b);
            rep.delta_thin = std::max(0.0, total.value);
            rep.witness_thin = total.witness;
        }
        if (n >= 1) {
            std::vector<Four> per_w(n);
            parallel_for(n, [&](int w) {
                Four best;
                // the deficit is symmetric in its first two slots
                for (VertexId x = 0; x < n; ++x)
                    for (VertexId y = x; y < n; ++y)
                        for (VertexId z = 0; z < n; ++z)
                            best.offer(four_point_deficit(g, x, y, z, w), {x, y, z, w});
                per_w[w] = best;
            });
            Four total;
            for (const Four& b : per_w) total.merge(b);
            rep.delta_four_point = std::max(0.0, total.value);
            rep.witness_four = total.witness;
        }
        return rep;
    }

    // Sampled mode: all random draws happen up front in one fixed order so
    // the result does not depend on the worker count.
    std::mt19937_64 rng(mode.seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    auto draw_distinct = [&](int k, VertexId* out) {
        for (int i = 0; i < k; ++i) {
            VertexId v;
            bool fresh;
            do {
                v = pick(rng);
                fresh = true;
                for (int j = 0; j < i; ++j)
                    if (out[j] == v) fresh = false;
            } while (!fresh);
            out[i] = v;
        }
    };

    long count = std::max(0L, mode.samples);
    if (n >= 3) {
        std::vector<std::array<VertexId, 3>> triples(count);
        for (auto& t : triples) draw_distinct(3, t.data());
        std::vector<double> values(count);
        parallel_for(static_cast<int>(count), [&](int i) {
            values[i] = thin_triangle_excess(g, triples[i][0], triples[i][1], triples[i][2]);
        });
        Thin total;
        for (long i = 0; i < count; ++i) total.offer(values[i], triples[i]);
        rep.delta_thin = std::max(0.0, total.value);
        rep.witness_thin = total.witness;
    }
    if (n >= 4) {
        std::vector<std::array<VertexId, 4>> quads(count);
        for (auto& q : quads) draw_distinct(4, q.data());
        std::vector<double> values(count);
        parallel_for(static_cast<int>(count), [&](int i) {
            values[i] = four_point_deficit(g, quads[i][0], quads[i][1], quads[i][2], quads[i][3]);
        });
        Four total;
        for (long i = 0; i < count; ++i) total.offer(values[i], quads[i]);
        rep.delta_four_point = std::max(0.0, total.value);
        rep.witness_four = total.witness;
    }
    return rep;
}

}  // namespace hypuni
