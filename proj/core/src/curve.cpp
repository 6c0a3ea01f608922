#include "hypuni/curve.hpp"

#include <cmath>
#include <stdexcept>

namespace hypuni {

Curve Curve::along(const MetricGraph& g, const std::vector<VertexId>& walk) {
    if (walk.empty()) throw std::invalid_argument("curve needs at least one vertex");
    Curve c;
    c.vertices = walk;
    c.cumulative.resize(walk.size());
    c.cumulative[0] = 0.0;
    for (size_t i = 1; i < walk.size(); ++i)
        c.cumulative[i] = c.cumulative[i - 1] + g.edge_length(walk[i - 1], walk[i]);
    return c;
}

std::pair<int, double> Curve::nearest_vertex(double s) const {
    int best = 0;
    double off = std::abs(cumulative[0] - s);
    for (size_t i = 1; i < cumulative.size(); ++i) {
        double d = std::abs(cumulative[i] - s);
        if (d < off) {
            off = d;
            best = static_cast<int>(i);
        }
    }
    return {best, off};
}

Curve Curve::slice(int i, int j) const {
    if (i < 0 || j >= static_cast<int>(vertices.size()) || i > j)
        throw std::invalid_argument("bad curve slice");
    Curve c;
    c.vertices.assign(vertices.begin() + i, vertices.begin() + j + 1);
    c.cumulative.resize(j - i + 1);
    for (int k = i; k <= j; ++k) c.cumulative[k - i] = cumulative[k] - cumulative[i];
    return c;
}

Curve Curve::reversed() const {
    Curve c;
    const int n = static_cast<int>(vertices.size());
    c.vertices.resize(n);
    c.cumulative.resize(n);
    for (int k = 0; k < n; ++k) {
        c.vertices[k] = vertices[n - 1 - k];
        c.cumulative[k] = cumulative[n - 1] - cumulative[n - 1 - k];
    }
    return c;
}

Curve Curve::concat(const Curve& other) const {
    if (other.vertices.empty()) return *this;
    if (vertices.empty()) return other;
    if (other.first() != last())
        throw std::invalid_argument("curves do not share an endpoint");
    Curve c = *this;
    double base = c.length();
    for (size_t i = 1; i < other.vertices.size(); ++i) {
        c.vertices.push_back(other.vertices[i]);
        c.cumulative.push_back(base + other.cumulative[i]);
    }
    return c;
}

Curve geodesic(const MetricGraph& g, VertexId u, VertexId v) {
    return Curve::along(g, g.geodesic_vertices(u, v));
}

}  // namespace hypuni
