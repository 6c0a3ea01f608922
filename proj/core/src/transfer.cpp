#include "hypuni/transfer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hypuni {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_same_eps(const UniformizedGraph& a, const UniformizedGraph& b) {
    if (a.epsilon() != b.epsilon())
        throw std::invalid_argument("uniformization parameters differ");
}

void require_map_between(const UniformizedGraph& src, const UniformizedGraph& tgt,
                         const RoughMap& m) {
    if (m.source != src.graph_ptr() || m.target != tgt.graph_ptr())
        throw std::invalid_argument("map does not connect these two graphs");
}

// The density comparisons below transport d(., base) through the map, which
// only controls distances up to tau when the bases themselves correspond.
void require_base_aligned(const RoughMap& m) {
    if (m.map[m.source->base()] != m.target->base())
        throw std::invalid_argument("map must send the source base to the target base");
}

struct SourceSums {
    double snapped;
    double exact;
};

SourceSums source_density_sums(const UniformizedGraph& ug, const Curve& c,
                               const Discretization& d) {
    SourceSums s{0.0, 0.0};
    for (int i = 0; i < d.N; ++i) {
        s.snapped += ug.density(c.vertices[d.curve_index[i]]);
        s.exact += ug.density_at(c, i * d.q);
    }
    return s;
}

}  // namespace

std::optional<Discretization> discretize(const Curve& c) {
    double L = c.length();
    if (!(L > 1.0)) return std::nullopt;
    Discretization d;
    d.L = L;
    d.N = static_cast<int>(std::floor(L));
    d.q = L / d.N;
    d.curve_index.resize(d.N + 1);
    d.snap_offset.resize(d.N + 1);
    d.curve_index[0] = 0;
    d.snap_offset[0] = 0.0;
    d.curve_index[d.N] = static_cast<int>(c.vertices.size()) - 1;
    d.snap_offset[d.N] = 0.0;
    for (int i = 1; i < d.N; ++i) {
        auto [idx, off] = c.nearest_vertex(i * d.q);
        d.curve_index[i] = idx;
        d.snap_offset[i] = off;
        d.max_snap_offset = std::max(d.max_snap_offset, off);
    }
    return d;
}

double discrete_sum(const UniformizedGraph& ug, const Curve& c, const Discretization& d) {
    double sum = 0.0;
    for (int i = 0; i < d.N; ++i) sum += ug.density(c.vertices[d.curve_index[i]]);
    return sum;
}

DiscretePathCheck discrete_path_check(const UniformizedGraph& ug, const Curve& c) {
    auto d = discretize(c);
    if (!d) throw std::invalid_argument("curve too short to discretize (length <= 1)");
    DiscretePathCheck r;
    r.N = d->N;
    r.max_snap_offset = d->max_snap_offset;
    SourceSums sums = source_density_sums(ug, c, *d);
    r.sum_snapped = sums.snapped;
    r.sum_exact = sums.exact;
    r.integral = ug.ell_eps(c);
    r.ratio = r.sum_snapped / r.integral;
    r.bound = discrete_path_bound(ug.epsilon());
    // the guaranteed band holds at the exact sample points; snapping moves
    // the sum by a measured factor, which widens the asserted band by the
    // same amount
    r.snap_tolerance = std::abs(r.sum_snapped / r.sum_exact - 1.0);
    double lo = (1.0 - r.snap_tolerance) / r.bound;
    double hi = r.bound * (1.0 + r.snap_tolerance);
    r.ok = r.ratio >= lo && r.ratio <= hi;
    return r;
}

PhiSumComparison phi_sum_compare(const UniformizedGraph& ug_source,
                                 const UniformizedGraph& ug_target, const RoughMap& m,
                                 const Curve& c) {
    require_same_eps(ug_source, ug_target);
    require_map_between(ug_source, ug_target, m);
    require_base_aligned(m);
    auto d = discretize(c);
    if (!d) throw std::invalid_argument("curve too short to discretize (length <= 1)");

    PhiSumComparison r;
    r.N = d->N;
    r.integral_source = ug_source.ell_eps(c);

    SourceSums sums = source_density_sums(ug_source, c, *d);
    double snap_ratio = sums.snapped / sums.exact;
    r.snap_factor = std::max(snap_ratio, 1.0 / snap_ratio);

    for (int i = 0; i < d->N; ++i) {
        double rho = ug_target.density(m.map[c.vertices[d->curve_index[i]]]);
        r.sum_image += rho;
        if (i < d->N - 1) r.sum_image_tail += rho;
    }
    r.sum_image_tail += ug_target.density(m.map[c.last()]);

    r.ratio = r.sum_image / r.integral_source;
    r.ratio_tail = r.sum_image_tail / r.integral_source;
    double eps = ug_source.epsilon();
    r.bound = phi_sum_bound(eps, m.tau) * r.snap_factor;
    r.bound_tail = phi_sum_tail_bound(eps, m.tau) * r.snap_factor;
    r.ok = r.ratio >= 1.0 / r.bound && r.ratio <= r.bound && r.ratio_tail >= 1.0 / r.bound_tail &&
           r.ratio_tail <= r.bound_tail;
    return r;
}

DistanceComparison compare_d_eps(const UniformizedGraph& ug_source,
                                 const UniformizedGraph& ug_target, const RoughMap& m,
                                 const std::vector<std::pair<VertexId, VertexId>>& pairs) {
    require_same_eps(ug_source, ug_target);
    require_map_between(ug_source, ug_target, m);
    require_base_aligned(m);

    DistanceComparison r;
    r.bound = d_eps_comparison_bound(ug_source.epsilon(), m.tau);
    r.hypothesis_violation = m.similarity && m.scale != 1.0;
    if (r.hypothesis_violation)
        r.note =
            "similarity scale differs from 1: the two-sided band is established for "
            "isometry-kind maps only, ratios are reported without an assertion";
    r.min_ratio = kInf;
    r.max_ratio = 0.0;
    for (auto [u, v] : pairs) {
        if (ug_source.graph().shortest_dist(u, v) < 2.0 + m.tau - 1e-9)
            throw std::invalid_argument("pair below the working separation 2 + tau");
        PairRatio p;
        p.u = u;
        p.v = v;
        p.value_source = ug_source.d_eps(u, v);
        p.value_target = ug_target.d_eps(m.map[u], m.map[v]);
        p.ratio = p.value_target / p.value_source;
        r.min_ratio = std::min(r.min_ratio, p.ratio);
        r.max_ratio = std::max(r.max_ratio, p.ratio);
        r.pairs.push_back(p);
    }
    r.within_bound = !r.hypothesis_violation && !r.pairs.empty() && r.max_ratio <= r.bound &&
                     r.min_ratio >= 1.0 / r.bound;
    return r;
}

DeltaComparison compare_delta_eps(const UniformizedGraph& ug_source,
                                  const UniformizedGraph& ug_target, const RoughMap& m) {
    require_same_eps(ug_source, ug_target);
    require_map_between(ug_source, ug_target, m);
    require_base_aligned(m);
    if (m.similarity && m.scale != 1.0)
        throw std::invalid_argument("boundary comparison is defined for isometry-kind maps");

    const MetricGraph& S = ug_source.graph();
    const MetricGraph& T = ug_target.graph();
    BoundaryDistance bd_s = delta_eps(ug_source);
    BoundaryDistance bd_t = delta_eps(ug_target);

    DeltaComparison r;
    double mismatch = 0.0;
    for (VertexId f : S.frontier()) {
        double best = kInf;
        for (VertexId ft : T.frontier()) best = std::min(best, T.shortest_dist(m.map[f], ft));
        mismatch = std::max(mismatch, best);
    }
    for (VertexId ft : T.frontier()) {
        double best = kInf;
        for (VertexId f : S.frontier()) best = std::min(best, T.shortest_dist(ft, m.map[f]));
        mismatch = std::max(mismatch, best);
    }
    r.frontier_mismatch = mismatch;
    if (mismatch > m.tau + 1e-9)
        throw std::invalid_argument("frontiers do not correspond within tau under the map");

    r.bound_factors = delta_comparison_bound(ug_source.epsilon(), m.tau);
    r.bound = r.bound_factors.total;
    r.min_ratio = kInf;
    r.max_ratio = 0.0;
    for (VertexId u = 0; u < S.vertex_count(); ++u) {
        PairRatio p;
        p.u = u;
        p.v = m.map[u];
        p.value_source = bd_s.delta[u];
        p.value_target = bd_t.delta[p.v];
        p.ratio = p.value_target / p.value_source;
        r.min_ratio = std::min(r.min_ratio, p.ratio);
        r.max_ratio = std::max(r.max_ratio, p.ratio);
        r.values.push_back(p);
    }
    r.within_bound = r.max_ratio <= r.bound && r.min_ratio >= 1.0 / r.bound;
    return r;
}

TransferContext make_transfer_context(const UniformizedGraph& source,
                                      const UniformizedGraph& target, const RoughMap& m) {
    require_same_eps(source, target);
    require_map_between(source, target, m);
    require_base_aligned(m);
    if (m.similarity && m.scale != 1.0)
        throw std::invalid_argument("transfer needs an isometry-kind map");

    TransferContext ctx;
    ctx.source = &source;
    ctx.target = &target;
    ctx.phi = m.verified ? m : verify_rough_map(m);
    ctx.phi_inv = quasi_inverse(ctx.phi);
    RoundTripGaps gaps = round_trip_gaps(ctx.phi, ctx.phi_inv);
    // one constant controls the map, its quasi-inverse, and both round
    // trips; every gap bound below is stated against it
    ctx.tau = std::max({ctx.phi.tau, ctx.phi_inv.tau, gaps.source_gap, gaps.target_gap});
    ctx.bd_source = delta_eps(source);
    ctx.bd_target = delta_eps(target);
    return ctx;
}

TransferResult transfer_uniform_curve(const TransferContext& ctx, VertexId x, VertexId y) {
    const UniformizedGraph& src = *ctx.source;
    const UniformizedGraph& tgt = *ctx.target;
    const MetricGraph& gs = src.graph();
    const double eps = src.epsilon();
    const double tau = ctx.tau;

    TransferResult out;
    if (gs.shortest_dist(x, y) <= 4.0 + tau) {
        out.short_branch = true;
        out.curve = geodesic(gs, x, y);
        out.report = check_uniform_curve(src, ctx.bd_source, out.curve);
        out.lambda_source = out.report.lambda;
        double sb = short_branch_lambda(eps, 4.0 + tau);
        out.bound = {sb, sb, sb};
        out.gaps_ok = true;
        out.lambda_ok = out.lambda_source <= sb * (1.0 + 1e-9);
        return out;
    }

    Curve guide = tgt.geodesic_eps(ctx.phi.map[x], ctx.phi.map[y]);
    out.report_target = check_uniform_curve(tgt, ctx.bd_target, guide);
    out.lambda_target = out.report_target.lambda;

    auto disc = discretize(guide);
    if (!disc)
        // the images sit at graph distance above 4, and the guide is at
        // least that long
        throw std::logic_error("guide curve shorter than its endpoint separation");
    out.N = disc->N;
    out.max_snap_offset = disc->max_snap_offset;
    const double snap = disc->max_snap_offset;

    std::vector<VertexId> anchors(disc->N + 1);
    anchors[0] = x;
    anchors[disc->N] = y;
    for (int i = 1; i < disc->N; ++i)
        anchors[i] = ctx.phi_inv.map[guide.vertices[disc->curve_index[i]]];

    Curve built = Curve::along(gs, {x});
    double interior_cap = 2.0 + tau + 2.0 * snap + 1e-9;
    double endpoint_cap = 2.0 + 2.0 * tau + 2.0 * snap + 1e-9;
    out.gaps_ok = true;
    for (int i = 0; i < disc->N; ++i) {
        double gap = gs.shortest_dist(anchors[i], anchors[i + 1]);
        out.max_gap = std::max(out.max_gap, gap);
        if (gap > ((i == 0 || i == disc->N - 1) ? endpoint_cap : interior_cap))
            out.gaps_ok = false;
        if (anchors[i] != anchors[i + 1])
            built = built.concat(geodesic(gs, anchors[i], anchors[i + 1]));
    }
    out.curve = std::move(built);
    out.report = check_uniform_curve(src, ctx.bd_source, out.curve);
    out.lambda_source = out.report.lambda;
    out.bound = transfer_lambda_bound(out.lambda_target, eps, tau, snap);
    out.lambda_ok = out.lambda_source <= out.bound.total * (1.0 + 1e-9);
    return out;
}

}  // namespace hypuni
