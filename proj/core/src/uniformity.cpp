#include "hypuni/uniformity.hpp"

#include <algorithm>
#include <stdexcept>

#include "hypuni/parallel.hpp"

namespace hypuni {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<double> ell_prefix(const UniformizedGraph& ug, const Curve& c) {
    const int segs = c.segment_count();
    std::vector<double> prefix(segs + 1, 0.0);
    for (int i = 0; i < segs; ++i) {
        int e = ug.graph().edge_between(c.vertices[i], c.vertices[i + 1]);
        if (e < 0) throw std::invalid_argument("curve leaves the graph");
        prefix[i + 1] = prefix[i] + ug.edge_len_eps(e);
    }
    return prefix;
}

}  // namespace

UniformityReport check_uniform_curve(const UniformizedGraph& ug, const BoundaryDistance& bd,
                                     const Curve& c) {
    UniformityReport r;
    auto prefix = ell_prefix(ug, c);
    const int segs = c.segment_count();
    r.ell_eps_curve = prefix[segs];
    r.d_eps_endpoints = ug.d_eps(c.first(), c.last());
    if (r.d_eps_endpoints > 0)
        r.quasiconvexity_ratio = r.ell_eps_curve / r.d_eps_endpoints;
    else
        r.quasiconvexity_ratio = r.ell_eps_curve > 0 ? kInf : 1.0;

    for (int i = 0; i <= segs; ++i) {
        double side = std::min(prefix[i], r.ell_eps_curve - prefix[i]);
        double ratio = side / bd.delta[c.vertices[i]];
        if (ratio > r.cigar_ratio) {
            r.cigar_ratio = ratio;
            r.witness_index = i;
            r.witness_vertex = c.vertices[i];
        }
    }

    // Between curve vertices the min-side grows by at most the segment's
    // uniformized length while the boundary distance shrinks by at most the
    // same amount, so each segment interior stays under this envelope.
    r.cigar_ratio_interior_bound = r.cigar_ratio;
    for (int i = 0; i < segs; ++i) {
        double le = prefix[i + 1] - prefix[i];
        double side = std::min(prefix[i], r.ell_eps_curve - prefix[i + 1]) + le;
        double guard = std::max(bd.delta[c.vertices[i]], bd.delta[c.vertices[i + 1]]) - le;
        double env = guard > 0 ? side / guard : kInf;
        r.cigar_ratio_interior_bound = std::max(r.cigar_ratio_interior_bound, env);
    }

    r.lambda = std::max(r.quasiconvexity_ratio, r.cigar_ratio);
    return r;
}

double cigar_ratio_at(const UniformizedGraph& ug, const BoundaryDistance& bd, const Curve& c,
                      int vertex_index) {
    if (vertex_index < 0 || vertex_index >= static_cast<int>(c.vertices.size()))
        throw std::invalid_argument("vertex index outside the curve");
    auto prefix = ell_prefix(ug, c);
    double side = std::min(prefix[vertex_index], prefix.back() - prefix[vertex_index]);
    return side / bd.delta[c.vertices[vertex_index]];
}

DomainUniformityEstimate estimate_domain_uniformity(const UniformizedGraph& ug,
                                                    const BoundaryDistance& bd,
                                                    const PairSpec& spec, double lambda_cap) {
    auto ps = sample_pairs(ug.graph(), spec);
    DomainUniformityEstimate est;
    est.pairs.resize(ps.size());
    parallel_for(static_cast<int>(ps.size()), [&](int i) {
        auto [u, v] = ps[i];
        Curve c = ug.geodesic_eps(u, v);
        UniformityReport r = check_uniform_curve(ug, bd, c);
        est.pairs[i] = {u, v, ug.d_eps(u, v), r.lambda, r.witness_vertex};
    });
    for (int i = 0; i < static_cast<int>(est.pairs.size()); ++i) {
        est.lambda_hat = std::max(est.lambda_hat, est.pairs[i].lambda);
        if (est.pairs[i].lambda > lambda_cap) est.failures.push_back(i);
    }
    return est;
}

}  // namespace hypuni
