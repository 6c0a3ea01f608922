// Uniformized metric, boundary distance, quasihyperbolic comparison, and
// curve uniformity. Closed forms on paths and trees serve as oracles: along
// a shortest path through the base the density integral telescopes, so
// every quantity here has an exact expected value.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "hypuni/boundary.hpp"
#include "hypuni/generators.hpp"
#include "hypuni/graph_io.hpp"
#include "hypuni/quasihyperbolic.hpp"
#include "hypuni/sampling.hpp"
#include "hypuni/starlikeness.hpp"
#include "hypuni/uniformity.hpp"
#include "hypuni/uniformize.hpp"

using namespace hypuni;

namespace {

GraphPtr share(MetricGraph g) { return std::make_shared<const MetricGraph>(std::move(g)); }

// Unit path 0-1-...-n rooted at 0 with the far end as frontier.
GraphPtr unit_path(int n) {
    std::vector<std::string> names;
    std::vector<Edge> edges;
    for (int i = 0; i <= n; ++i) names.push_back("v" + std::to_string(i));
    for (int i = 0; i < n; ++i) edges.push_back({i, i + 1, 1.0});
    return share(MetricGraph(std::move(names), std::move(edges), 0, {n}));
}

// Composite Simpson rule for the density along one edge, as an independent
// check of the closed-form edge integral.
double simpson_edge(double eps, double a, double b, double w, int slices) {
    auto f = [&](double t) { return std::exp(-eps * (a + t * (b - a) / w)); };
    double h = w / slices;
    double acc = f(0) + f(w);
    for (int i = 1; i < slices; ++i) acc += f(i * h) * (i % 2 ? 4.0 : 2.0);
    return acc * h / 3.0;
}

}  // namespace

TEST_CASE("edge integrals have the right closed forms") {
    auto ug1 = uniformize(unit_path(1), 1.0);
    CHECK(ug1.edge_len_eps(0) == doctest::Approx(0.63212055882855767).epsilon(1e-15));
    auto ug2 = uniformize(unit_path(1), 2.0);
    CHECK(ug2.edge_len_eps(0) == doctest::Approx(0.43233235838169365).epsilon(1e-15));

    // Both endpoints of b-c sit at distance 1 from the base: the density is
    // constant along the edge and the series branch of the integral is hit.
    MetricGraph tri({"a", "b", "c"}, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}}, 0, {1, 2});
    auto ugt = uniformize(share(tri), 1.0);
    int bc = tri.edge_between(1, 2);
    CHECK(ugt.edge_len_eps(bc) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
}

TEST_CASE("edge integrals match quadrature") {
    MetricGraph g({"a", "b", "c", "d"}, {{0, 1, 0.3}, {1, 2, 1.7}, {2, 3, 2.2}}, 0, {3});
    for (double eps : {0.5, 1.0, 3.0}) {
        auto ug = uniformize(share(g), eps);
        double a = 0.0;
        for (size_t i = 0; i < g.edges().size(); ++i) {
            double w = g.edges()[i].length;
            CHECK(ug.edge_len_eps(static_cast<int>(i)) ==
                  doctest::Approx(simpson_edge(eps, a, a + w, w, 2000)).epsilon(1e-10));
            a += w;
        }
    }
}

TEST_CASE("uniformized distances telescope along rays") {
    auto ug = uniformize(unit_path(5), 1.0);
    for (int i = 0; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j)
            CHECK(ug.d_eps(i, j) ==
                  doctest::Approx(std::exp(-i) - std::exp(-j)).epsilon(1e-14));
    CHECK(ug.dist_to_base(3) == 3.0);
    CHECK(ug.density(3) == doctest::Approx(std::exp(-3.0)).epsilon(1e-15));
}

TEST_CASE("curve lengths, partial lengths, and densities") {
    auto gp = unit_path(5);
    auto ug = uniformize(gp, 1.0);
    Curve c = geodesic(*gp, 0, 5);
    CHECK(ug.ell_eps(c) == doctest::Approx(1.0 - std::exp(-5.0)).epsilon(1e-14));
    CHECK(ug.ell_eps_between(c, 0.0, c.length()) == doctest::Approx(ug.ell_eps(c)));
    CHECK(ug.ell_eps_between(c, 0.5, 2.25) ==
          doctest::Approx(std::exp(-0.5) - std::exp(-2.25)).epsilon(1e-13));
    CHECK(ug.ell_eps_between(c, -3.0, 99.0) == doctest::Approx(ug.ell_eps(c)));
    CHECK(ug.density_at(c, 1.5) == doctest::Approx(std::exp(-1.5)).epsilon(1e-14));
    CHECK(ug.density_at(c, 0.0) == 1.0);

    // Curves must follow edges.
    Curve broken;
    broken.vertices = {0, 2};
    broken.cumulative = {0.0, 1.0};
    CHECK_THROWS_AS(ug.ell_eps(broken), std::invalid_argument);

    CHECK_THROWS_AS(uniformize(gp, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(uniformize(nullptr, 1.0), std::invalid_argument);
}

TEST_CASE("uniformized geodesics match graph geodesics on trees") {
    auto gp = share(gen_tree(2, 4));
    auto ug = uniformize(gp, 1.0);
    for (auto [u, v] : sample_pairs(*gp, PairSpec::random(60, 8))) {
        CHECK(ug.geodesic_eps(u, v).vertices == gp->geodesic_vertices(u, v));
    }

    // Tie on the unit 4-cycle resolves through the lower index.
    MetricGraph c4({"a", "b", "c", "d"}, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}}, 0, {2});
    auto ugc = uniformize(share(c4), 1.0);
    CHECK(ugc.geodesic_eps(0, 2).vertices == std::vector<VertexId>{0, 1, 2});
}

TEST_CASE("density obeys the distance-ratio bound") {
    for (double eps : {0.5, 3.0}) {
        for (const auto& gp : {share(gen_tree(2, 5)), share(gen_hyperbolic_grid(2.0, 6, 24))}) {
            auto ug = uniformize(gp, eps);
            int n = gp->vertex_count();
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v)
                    CHECK(ug.density(u) / ug.density(v) <=
                          std::exp(eps * gp->shortest_dist(u, v)) * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("uniformized graph file carries the reweighted lengths") {
    auto gp = share(gen_tree(2, 2));
    auto ug = uniformize(gp, 1.0);
    const char* path = "/tmp/hypuni_test_uniformized.g";
    write_uniformized_file(path, ug);

    MetricGraph back = read_graph_file(path);
    CHECK(back.vertex_count() == gp->vertex_count());
    CHECK(back.edges().size() == gp->edges().size());

    // Fourth column = edge_len_eps, exact text round trip.
    std::ifstream in(path);
    std::string line;
    bool saw_epsilon = false;
    size_t edge_i = 0;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (!toks.empty() && toks[0] == "epsilon") saw_epsilon = true;
        if (toks.size() == 4) {
            CHECK(std::stod(toks[3]) == ug.edge_len_eps(static_cast<int>(edge_i)));
            ++edge_i;
        }
    }
    CHECK(saw_epsilon);
    CHECK(edge_i == gp->edges().size());
    std::remove(path);
}

TEST_CASE("boundary distance on a ray") {
    auto gp = unit_path(2);
    auto ug = uniformize(gp, 1.0);
    auto bd = delta_eps(ug);
    CHECK(bd.delta[2] == doctest::Approx(std::exp(-2.0)).epsilon(1e-15));
    CHECK(bd.delta[1] == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
    CHECK(bd.delta[0] == doctest::Approx(1.0).epsilon(1e-15));
    for (VertexId v = 0; v <= 2; ++v) CHECK(bd.escape[v] == 2);

    auto ug_half = uniformize(gp, 0.5);
    auto bd_half = delta_eps(ug_half);
    for (VertexId v = 0; v <= 2; ++v)
        CHECK(bd_half.delta[v] == doctest::Approx(2.0 * std::exp(-0.5 * v)).epsilon(1e-14));

    MetricGraph no_frontier({"a", "b"}, {{0, 1, 1}}, 0, {});
    CHECK_THROWS_AS(delta_eps(uniformize(share(no_frontier), 1.0)), std::invalid_argument);
}

TEST_CASE("boundary distance equals density over eps on trees and grids") {
    // Every vertex lies on a base-to-frontier geodesic in both families, so
    // the lower bound is attained exactly.
    for (double eps : {0.5, 1.0, 3.0}) {
        for (const auto& gp : {share(gen_tree(2, 5)), share(gen_hyperbolic_grid(2.0, 5, 16))}) {
            auto ug = uniformize(gp, eps);
            auto bd = delta_eps(ug);
            for (int v = 0; v < gp->vertex_count(); ++v)
                CHECK(bd.delta[v] * eps / ug.density(v) == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("boundary distance band on a dangling comb") {
    MetricGraph comb = gen_comb(3, 1.0);
    MetricGraph g = comb.with_frontier({comb.id_of("s4")});
    double M = starlikeness(g).M;
    CHECK(M == doctest::Approx(3.0));
    double eps = 1.0;
    auto ug = uniformize(share(g), eps);
    auto bd = delta_eps(ug);
    double upper = (M + 1.0 / eps) * std::exp(eps * M);
    for (int v = 0; v < g.vertex_count(); ++v) {
        CHECK(bd.delta[v] >= ug.density(v) / eps * (1.0 - 1e-12));
        CHECK(bd.delta[v] <= upper * ug.density(v) * (1.0 + 1e-12));
    }
}

TEST_CASE("the j quantity is a scaled distance along rays") {
    auto gp = unit_path(5);
    auto ug = uniformize(gp, 1.0);
    auto bd = delta_eps(ug);
    for (int u = 0; u <= 5; ++u) {
        CHECK(j_metric(ug, bd, u, u) == 0.0);
        for (int v = u + 1; v <= 5; ++v) {
            CHECK(j_metric(ug, bd, u, v) == doctest::Approx(double(v - u)).epsilon(1e-13));
            CHECK(j_metric(ug, bd, u, v) == j_metric(ug, bd, v, u));
        }
    }
}

TEST_CASE("quasihyperbolic metric is a fixed multiple of distance on trees") {
    auto gp = share(gen_tree(2, 4));
    double eps = 1.0;
    auto ug = uniformize(gp, eps);
    auto bd = delta_eps(ug);
    QuasihyperbolicMetric k(ug, bd);
    double expected = 2.0 * std::tanh(eps / 2.0);  // 0.92423431452001947

    for (size_t e = 0; e < gp->edges().size(); ++e)
        CHECK(k.edge_weight(static_cast<int>(e)) == doctest::Approx(expected).epsilon(1e-14));

    for (auto [u, v] : sample_pairs(*gp, PairSpec::all(1.0)))
        CHECK(k.dist(u, v) / gp->shortest_dist(u, v) ==
              doctest::Approx(expected).epsilon(1e-13));
}

TEST_CASE("bilipschitz report") {
    auto gp = share(gen_tree(2, 5));
    auto ug = uniformize(gp, 1.0);
    auto bd = delta_eps(ug);
    QuasihyperbolicMetric k(ug, bd);
    auto r = bilipschitz_report(ug, bd, k, 0.0, PairSpec::all(), 0.10);
    CHECK(r.within_bound);
    CHECK(r.pairs_checked > 0);
    CHECK(r.max_ratio / r.min_ratio <= 1.0 + 1e-12);
    // factor = 1 at M = 0; the slack terms are e^{eps w_max} and 1.1.
    CHECK(r.bound == doctest::Approx(std::exp(1.0) * 1.1).epsilon(1e-14));
    CHECK(gp->shortest_dist(r.witness_min.first, r.witness_min.second) >= 1.0);

    auto gg = share(gen_hyperbolic_grid(2.0, 6, 24));
    auto ugg = uniformize(gg, 3.0);
    auto bdg = delta_eps(ugg);
    QuasihyperbolicMetric kg(ugg, bdg);
    auto rg = bilipschitz_report(ugg, bdg, kg, starlikeness(*gg).M, PairSpec::random(400, 17), 0.10);
    CHECK(rg.within_bound);
    CHECK(rg.min_ratio > 0.0);
    CHECK(rg.max_ratio >= rg.min_ratio);
}

TEST_CASE("geodesics of trees are 1-uniform") {
    auto gp = share(gen_tree(2, 4));
    auto ug = uniformize(gp, 1.0);
    auto bd = delta_eps(ug);
    for (auto [u, v] : sample_pairs(*gp, PairSpec::random(50, 12, 1.0))) {
        auto r = check_uniform_curve(ug, bd, ug.geodesic_eps(u, v));
        CHECK(r.quasiconvexity_ratio == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(r.cigar_ratio < 1.0 + 1e-12);
        CHECK(r.lambda == doctest::Approx(1.0).epsilon(1e-12));
    }

    auto est = estimate_domain_uniformity(ug, bd, PairSpec::all());
    CHECK(est.lambda_hat == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(est.failures.empty());
    CHECK(est.pairs.size() == 31 * 30 / 2);

    auto capped = estimate_domain_uniformity(ug, bd, PairSpec::all(), 0.9);
    CHECK(capped.failures.size() == capped.pairs.size());
}

TEST_CASE("a detour curve is flagged by the length condition") {
    // The direct a-d edge has length 5 while the route through b, c costs 3;
    // both endpoint densities agree, so the length ratio is exactly 5/3.
    MetricGraph g({"a", "b", "c", "d"}, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 5}}, 0, {2});
    auto ug = uniformize(share(g), 1.0);
    auto bd = delta_eps(ug);
    Curve direct = Curve::along(g, {0, 3});
    auto r = check_uniform_curve(ug, bd, direct);
    CHECK(r.quasiconvexity_ratio == doctest::Approx(5.0 / 3.0).epsilon(1e-12));
    CHECK(r.lambda >= 5.0 / 3.0 - 1e-12);
    CHECK(r.d_eps_endpoints == doctest::Approx(1.0 - std::exp(-3.0)).epsilon(1e-13));
    // A single edge dwarfing the boundary distance blows up the interior
    // envelope.
    CHECK(std::isinf(r.cigar_ratio_interior_bound));

    auto geo = check_uniform_curve(ug, bd, ug.geodesic_eps(0, 3));
    CHECK(geo.quasiconvexity_ratio == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(geo.cigar_ratio ==
          doctest::Approx(cigar_ratio_at(ug, bd, ug.geodesic_eps(0, 3), geo.witness_index)));
    CHECK_THROWS(cigar_ratio_at(ug, bd, direct, 99));

    Curve point = Curve::along(g, {1});
    auto pr = check_uniform_curve(ug, bd, point);
    CHECK(pr.quasiconvexity_ratio == 1.0);
}
