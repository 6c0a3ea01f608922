// Discretization, density sums, cross-map comparisons, and the curve
// transfer construction. The pendant-tree pair is the main fixture: the
// inclusion of a tree into its pendant extension changes no original
// distance, so most ratios and sums have exact expected values.

#include <cmath>
#include <memory>

#include "doctest.h"
#include "hypuni/generators.hpp"
#include "hypuni/perturb.hpp"
#include "hypuni/sampling.hpp"
#include "hypuni/transfer.hpp"

using namespace hypuni;

namespace {

GraphPtr share(MetricGraph g) { return std::make_shared<const MetricGraph>(std::move(g)); }

GraphPtr unit_path(int n) {
    std::vector<std::string> names;
    std::vector<Edge> edges;
    for (int i = 0; i <= n; ++i) names.push_back("v" + std::to_string(i));
    for (int i = 0; i < n; ++i) edges.push_back({i, i + 1, 1.0});
    return share(MetricGraph(std::move(names), std::move(edges), 0, {n}));
}

struct PendantPair {
    GraphPtr source;
    GraphPtr target;
    RoughMap map;
    std::unique_ptr<UniformizedGraph> ug_source;
    std::unique_ptr<UniformizedGraph> ug_target;
};

PendantPair pendant_pair(int depth, double eps) {
    PendantPair pp;
    MetricGraph base = gen_tree(2, depth);
    pp.source = share(base);
    auto p = attach_pendants(base, 0.5);
    pp.target = share(std::move(p.graph));
    pp.map = verify_rough_map(make_rough_map(pp.source, pp.target, p.map, p.tau_bound));
    pp.ug_source = std::make_unique<UniformizedGraph>(pp.source, eps);
    pp.ug_target = std::make_unique<UniformizedGraph>(pp.target, eps);
    return pp;
}

}  // namespace

TEST_CASE("discretization pins endpoints and snaps the interior") {
    auto p3 = unit_path(3);
    Curve c = geodesic(*p3, 0, 3);
    auto d = discretize(c);
    REQUIRE(d.has_value());
    CHECK(d->N == 3);
    CHECK(d->q == doctest::Approx(1.0));
    CHECK(d->L == doctest::Approx(3.0));
    CHECK(d->curve_index == std::vector<int>{0, 1, 2, 3});
    CHECK(d->max_snap_offset == 0.0);

    MetricGraph uneven({"v0", "v1", "v2", "v3"}, {{0, 1, 1}, {1, 2, 1}, {2, 3, 0.5}}, 0, {3});
    Curve cu = geodesic(uneven, 0, 3);
    auto du = discretize(cu);
    REQUIRE(du.has_value());
    CHECK(du->N == 2);
    CHECK(du->q == doctest::Approx(1.25));
    // The interior sample at arclength 1.25 snaps back to v1.
    CHECK(du->curve_index == std::vector<int>{0, 1, 3});
    CHECK(du->max_snap_offset == doctest::Approx(0.25));
    CHECK(du->snap_offset.front() == 0.0);
    CHECK(du->snap_offset.back() == 0.0);

    auto p1 = unit_path(1);
    CHECK_FALSE(discretize(geodesic(*p1, 0, 1)).has_value());
}

TEST_CASE("discrete sums against the density integral") {
    auto p3 = unit_path(3);
    auto ug = uniformize(p3, 1.0);
    Curve c = geodesic(*p3, 0, 3);
    auto d = discretize(c);
    REQUIRE(d.has_value());
    double expected = 1.0 + std::exp(-1.0) + std::exp(-2.0);
    CHECK(discrete_sum(ug, c, *d) == doctest::Approx(expected).epsilon(1e-15));

    auto r = discrete_path_check(ug, c);
    CHECK(r.N == 3);
    CHECK(r.sum_snapped == doctest::Approx(expected).epsilon(1e-15));
    CHECK(r.snap_tolerance == 0.0);  // samples land on vertices exactly
    CHECK(r.integral == doctest::Approx(1.0 - std::exp(-3.0)).epsilon(1e-14));
    CHECK(r.ratio == doctest::Approx(expected / (1.0 - std::exp(-3.0))).epsilon(1e-13));
    CHECK(r.bound == doctest::Approx(2.0 * std::exp(2.0)).epsilon(1e-15));
    CHECK(r.ok);

    CHECK_THROWS_AS(discrete_path_check(ug, geodesic(*p3, 0, 1)), std::invalid_argument);
}

TEST_CASE("snapped and exact sample sums are reconciled") {
    MetricGraph g({"v0", "v1", "v2", "v3"}, {{0, 1, 1}, {1, 2, 1}, {2, 3, 0.5}}, 0, {3});
    auto ug = uniformize(share(g), 1.0);
    Curve c = geodesic(g, 0, 3);
    auto r = discrete_path_check(ug, c);
    double snapped = 1.0 + std::exp(-1.0);        // samples snap to v0, v1
    double exact = 1.0 + std::exp(-1.25);         // true sample sits at 1.25
    CHECK(r.sum_snapped == doctest::Approx(snapped).epsilon(1e-14));
    CHECK(r.sum_exact == doctest::Approx(exact).epsilon(1e-14));
    CHECK(r.snap_tolerance == doctest::Approx(std::abs(snapped / exact - 1.0)).epsilon(1e-12));
    CHECK(r.max_snap_offset == doctest::Approx(0.25));
    CHECK(r.ok);
}

TEST_CASE("curve sums survive the map") {
    auto pp = pendant_pair(3, 1.0);
    VertexId leaf_a = pp.source->frontier().front();
    VertexId leaf_b = pp.source->frontier().back();
    Curve c = geodesic(*pp.source, leaf_a, leaf_b);
    REQUIRE(c.length() == doctest::Approx(6.0));

    auto r = phi_sum_compare(*pp.ug_source, *pp.ug_target, pp.map, c);
    CHECK(r.N == 6);
    CHECK(r.ok);
    // The inclusion preserves base distances, so the image sum equals the
    // source sum exactly.
    auto d = discretize(c);
    REQUIRE(d.has_value());
    CHECK(r.sum_image == doctest::Approx(discrete_sum(*pp.ug_source, c, *d)).epsilon(1e-14));
    CHECK(r.bound >= phi_sum_bound(1.0, pp.map.tau) * (1.0 - 1e-12));
    CHECK(r.bound_tail >= phi_sum_tail_bound(1.0, pp.map.tau) * (1.0 - 1e-12));
    CHECK(r.ratio == doctest::Approx(r.sum_image / r.integral_source));
    CHECK(r.sum_image_tail > 0.0);
}

TEST_CASE("distance comparison under the identity is exact") {
    auto gp = share(gen_tree(2, 4));
    auto ug = uniformize(gp, 1.0);
    RoughMap id = identity_map(gp);
    auto pairs = sample_pairs(*gp, PairSpec::all(2.0));
    auto r = compare_d_eps(ug, ug, id, pairs);
    CHECK(r.within_bound);
    CHECK_FALSE(r.hypothesis_violation);
    CHECK(r.min_ratio == 1.0);
    CHECK(r.max_ratio == 1.0);
    for (const auto& pr : r.pairs) CHECK(pr.ratio == 1.0);
    CHECK(r.bound == doctest::Approx(d_eps_comparison_bound(1.0, 0.0)));

    // Pairs below the working separation are a usage error.
    std::vector<std::pair<VertexId, VertexId>> close = {{0, 1}};
    CHECK_THROWS_AS(compare_d_eps(ug, ug, id, close), std::invalid_argument);
}

TEST_CASE("distance comparison across the pendant inclusion") {
    auto pp = pendant_pair(3, 1.0);
    auto pairs = sample_pairs(*pp.source, PairSpec::all(2.0 + pp.map.tau));
    auto r = compare_d_eps(*pp.ug_source, *pp.ug_target, pp.map, pairs);
    CHECK(r.within_bound);
    // Original distances are untouched by pendants, so d_eps agrees too.
    CHECK(r.min_ratio == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.max_ratio == doctest::Approx(1.0).epsilon(1e-12));
    for (const auto& pr : r.pairs) {
        CHECK(pr.ratio >= 1.0 / r.bound - 1e-12);
        CHECK(pr.ratio <= r.bound + 1e-12);
    }
}

TEST_CASE("similarity maps trip the hypothesis flag") {
    MetricGraph base = gen_tree(2, 3);
    auto gp = share(base);
    auto s = scale_edges(base, 2.0);
    auto sp = share(std::move(s.graph));
    std::vector<VertexId> ident(base.vertex_count());
    for (int i = 0; i < base.vertex_count(); ++i) ident[i] = i;
    RoughMap m = verify_rough_map(make_rough_map(gp, sp, ident, 0.0, true, 2.0));

    auto ug_s = uniformize(gp, 1.0);
    auto ug_t = uniformize(sp, 1.0);
    auto r = compare_d_eps(ug_s, ug_t, m, sample_pairs(*gp, PairSpec::all(2.0)));
    CHECK(r.hypothesis_violation);
    CHECK_FALSE(r.within_bound);
    CHECK_FALSE(r.note.empty());
}

TEST_CASE("boundary distances compare across the pendant inclusion") {
    auto pp = pendant_pair(3, 1.0);
    auto r = compare_delta_eps(*pp.ug_source, *pp.ug_target, pp.map);
    CHECK(r.frontier_mismatch == 0.0);
    CHECK(r.within_bound);
    CHECK(r.min_ratio == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.max_ratio == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.bound == doctest::Approx(r.bound_factors.total));
    CHECK(r.values.size() == size_t(pp.source->vertex_count()));

    // A frontier that the map cannot reach within tau is rejected.
    MetricGraph base = gen_tree(2, 3);
    auto gp = share(base);
    auto p = attach_pendants(base, 0.5);
    auto tp = share(p.graph.with_frontier({p.map[base.base()]}));
    RoughMap m = verify_rough_map(make_rough_map(gp, tp, p.map, 0.5));
    auto ug_s = uniformize(gp, 1.0);
    auto ug_t = uniformize(tp, 1.0);
    CHECK_THROWS_AS(compare_delta_eps(ug_s, ug_t, m), std::invalid_argument);
}

TEST_CASE("transfer context folds everything into one constant") {
    auto pp = pendant_pair(3, 1.0);
    auto ctx = make_transfer_context(*pp.ug_source, *pp.ug_target, pp.map);
    // phi carries 0.5, its quasi-inverse carries 1.0 (two pendant legs), and
    // the round trips stay below both.
    CHECK(ctx.tau == doctest::Approx(1.0));
    CHECK(ctx.phi.verified);
    CHECK(ctx.phi_inv.verified);
    CHECK(ctx.bd_source.delta.size() == size_t(pp.source->vertex_count()));
    CHECK(ctx.bd_target.delta.size() == size_t(pp.target->vertex_count()));

    auto gp = share(gen_tree(2, 3));
    auto ug = uniformize(gp, 1.0);
    auto id_ctx = make_transfer_context(ug, ug, identity_map(gp));
    CHECK(id_ctx.tau == 0.0);
}

TEST_CASE("transfer along the identity") {
    auto gp = share(gen_tree(2, 4));
    auto ug = uniformize(gp, 1.0);
    auto ctx = make_transfer_context(ug, ug, identity_map(gp));

    // Leaves in different root subtrees sit at distance 8: the long branch.
    VertexId a = gp->frontier().front();
    VertexId b = gp->frontier().back();
    auto r = transfer_uniform_curve(ctx, a, b);
    CHECK_FALSE(r.short_branch);
    CHECK(r.N == 8);
    CHECK(r.max_snap_offset == 0.0);
    CHECK(r.gaps_ok);
    CHECK(r.lambda_ok);
    CHECK(r.curve.first() == a);
    CHECK(r.curve.last() == b);
    CHECK(r.lambda_source == doctest::Approx(r.report.lambda));
    CHECK(r.lambda_source <= r.bound.total);

    // Close pair: the source geodesic is already good enough.
    VertexId mid = gp->geodesic_vertices(a, gp->base())[2];
    auto s = transfer_uniform_curve(ctx, a, mid);
    CHECK(s.short_branch);
    CHECK(s.curve.vertices == gp->geodesic_vertices(a, mid));
    CHECK(s.bound.total == doctest::Approx(short_branch_lambda(1.0, 4.0)));
    CHECK(s.lambda_ok);
}

TEST_CASE("transfer across the pendant inclusion") {
    auto pp = pendant_pair(4, 1.0);
    auto ctx = make_transfer_context(*pp.ug_source, *pp.ug_target, pp.map);
    CHECK(ctx.tau == doctest::Approx(1.0));

    VertexId a = pp.source->frontier().front();
    VertexId b = pp.source->frontier().back();
    auto r = transfer_uniform_curve(ctx, a, b);
    CHECK_FALSE(r.short_branch);
    CHECK(r.N == 8);
    CHECK(r.gaps_ok);
    CHECK(r.max_gap <= transfer_gap(ctx.tau, r.max_snap_offset) + 1e-9);
    CHECK(r.lambda_ok);
    CHECK(r.lambda_source <= r.bound.total);
    CHECK(r.curve.first() == a);
    CHECK(r.curve.last() == b);
    // The guide lives in the target and is checked there.
    CHECK(r.lambda_target == doctest::Approx(r.report_target.lambda));
    CHECK(r.bound.total == doctest::Approx(transfer_lambda_bound(r.lambda_target, 1.0, ctx.tau,
                                                                 r.max_snap_offset)
                                               .total));

    // Distance 4 <= 4 + tau: handled by the short branch.
    VertexId root = pp.source->base();
    auto s = transfer_uniform_curve(ctx, a, root);
    CHECK(s.short_branch);
    CHECK(s.bound.total == doctest::Approx(short_branch_lambda(1.0, 5.0)));
}
