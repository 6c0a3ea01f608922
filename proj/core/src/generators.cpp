#include "hypuni/generators.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hypuni {

namespace {

constexpr double kPi = 3.14159265358979323846;

}  // namespace

MetricGraph gen_tree(int branching, int depth) {
    if (branching < 1 || depth < 1)
        throw std::invalid_argument("gen_tree needs branching >= 1 and depth >= 1");
    std::vector<std::string> names{"n0"};
    std::vector<Edge> edges;
    std::vector<VertexId> level{0};
    for (int d = 1; d <= depth; ++d) {
        std::vector<VertexId> next;
        for (VertexId parent : level)
            for (int c = 0; c < branching; ++c) {
                VertexId id = static_cast<VertexId>(names.size());
                names.push_back("n" + std::to_string(id));
                edges.push_back({parent, id, 1.0});
                next.push_back(id);
            }
        level = std::move(next);
    }
    return MetricGraph(std::move(names), std::move(edges), 0, std::move(level));
}

MetricGraph gen_comb(int n_teeth, double resolution) {
    if (n_teeth < 1) throw std::invalid_argument("gen_comb needs at least one tooth");
    if (!(resolution > 0)) throw std::invalid_argument("resolution must be positive");
    int m = static_cast<int>(std::llround(1.0 / resolution));
    if (m < 1 || std::abs(m * resolution - 1.0) > 1e-9)
        throw std::invalid_argument("resolution must evenly divide 1");
    double step = 1.0 / m;

    std::vector<std::string> names;
    std::vector<Edge> edges;
    std::vector<VertexId> frontier;

    const int spine_segments = (n_teeth + 1) * m;
    for (int k = 0; k <= spine_segments; ++k) {
        names.push_back("s" + std::to_string(k));
        if (k > 0) edges.push_back({k - 1, k, step});
    }
    frontier.push_back(spine_segments);

    for (int t = 1; t <= n_teeth; ++t) {
        VertexId below = t * m;  // spine vertex at x = t
        for (int j = 1; j <= t * m; ++j) {
            VertexId id = static_cast<VertexId>(names.size());
            names.push_back("t" + std::to_string(t) + "_" + std::to_string(j));
            edges.push_back({j == 1 ? below : id - 1, id, step});
        }
        frontier.push_back(static_cast<VertexId>(names.size()) - 1);
    }
    return MetricGraph(std::move(names), std::move(edges), 0, std::move(frontier));
}

MetricGraph gen_hyperbolic_grid(double R_max, int n_rings, int n_sectors) {
    if (!(R_max > 0)) throw std::invalid_argument("R_max must be positive");
    if (n_rings < 1) throw std::invalid_argument("need at least one ring");
    if (n_sectors < 3) throw std::invalid_argument("need at least three sectors");

    std::vector<std::string> names{"c"};
    std::vector<Edge> edges;
    double dr = R_max / n_rings;

    auto id = [&](int ring, int sector) {
        return 1 + (ring - 1) * n_sectors + sector;  // rings are 1-based
    };
    for (int i = 1; i <= n_rings; ++i) {
        double arc = hyperbolic_circle_length(i * dr) / n_sectors;
        for (int j = 0; j < n_sectors; ++j) {
            names.push_back("r" + std::to_string(i) + "s" + std::to_string(j));
            edges.push_back({i == 1 ? 0 : id(i - 1, j), id(i, j), dr});
            edges.push_back({id(i, j), id(i, (j + 1) % n_sectors), arc});
        }
    }
    std::vector<VertexId> frontier;
    for (int j = 0; j < n_sectors; ++j) frontier.push_back(id(n_rings, j));
    return MetricGraph(std::move(names), std::move(edges), 0, std::move(frontier));
}

double hyperbolic_circle_length(double R) {
    return 0.5 * kPi * (std::exp(2.0 * R) - std::exp(-2.0 * R));
}

}  // namespace hypuni
