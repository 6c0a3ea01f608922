// Scaling probes for the expensive paths: all-pairs construction,
// hyperbolicity scans, uniformization, boundary distances, and a full
// curve transfer. Run manually; nothing here asserts.

#include <memory>

#include <benchmark/benchmark.h>

#include "hypuni/boundary.hpp"
#include "hypuni/generators.hpp"
#include "hypuni/hyperbolicity.hpp"
#include "hypuni/perturb.hpp"
#include "hypuni/quasihyperbolic.hpp"
#include "hypuni/rough_map.hpp"
#include "hypuni/sampling.hpp"
#include "hypuni/transfer.hpp"
#include "hypuni/uniformize.hpp"

using namespace hypuni;

namespace {

GraphPtr share(MetricGraph g) { return std::make_shared<MetricGraph>(std::move(g)); }

void BM_grid_all_pairs(benchmark::State& state) {
    int rings = static_cast<int>(state.range(0));
    for (auto _ : state) {
        MetricGraph g = gen_hyperbolic_grid(0.25 * rings, rings, 32);
        benchmark::DoNotOptimize(g.diameter());
    }
    state.SetComplexityN(rings * 32 + 1);
}
BENCHMARK(BM_grid_all_pairs)->Arg(4)->Arg(8)->Arg(16)->Complexity();

void BM_hyperbolicity_exhaustive(benchmark::State& state) {
    MetricGraph g = gen_tree(2, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        HyperbolicityReport r = hyperbolicity(g, HyperbolicityMode::all());
        benchmark::DoNotOptimize(r.delta_four_point);
    }
}
BENCHMARK(BM_hyperbolicity_exhaustive)->Arg(3)->Arg(4)->Arg(5);

void BM_hyperbolicity_sampled(benchmark::State& state) {
    MetricGraph g = gen_hyperbolic_grid(2.0, 8, 48);
    for (auto _ : state) {
        HyperbolicityReport r = hyperbolicity(g, HyperbolicityMode::sampled(state.range(0), 7));
        benchmark::DoNotOptimize(r.delta_four_point);
    }
}
BENCHMARK(BM_hyperbolicity_sampled)->Arg(1000)->Arg(10000);

void BM_uniformize(benchmark::State& state) {
    GraphPtr g = share(gen_hyperbolic_grid(2.0, static_cast<int>(state.range(0)), 48));
    for (auto _ : state) {
        UniformizedGraph ug(g, 1.0);
        benchmark::DoNotOptimize(ug.d_eps(0, g->vertex_count() - 1));
    }
}
BENCHMARK(BM_uniformize)->Arg(4)->Arg(8)->Arg(16);

void BM_boundary_distance(benchmark::State& state) {
    GraphPtr g = share(gen_hyperbolic_grid(2.0, 12, 48));
    UniformizedGraph ug(g, 1.0);
    for (auto _ : state) {
        BoundaryDistance bd = delta_eps(ug);
        benchmark::DoNotOptimize(bd.delta[0]);
    }
}
BENCHMARK(BM_boundary_distance);

void BM_quasihyperbolic(benchmark::State& state) {
    GraphPtr g = share(gen_tree(2, 6));
    UniformizedGraph ug(g, 1.0);
    BoundaryDistance bd = delta_eps(ug);
    for (auto _ : state) {
        QuasihyperbolicMetric k(ug, bd);
        benchmark::DoNotOptimize(k.dist(0, g->vertex_count() - 1));
    }
}
BENCHMARK(BM_quasihyperbolic);

void BM_transfer_pair(benchmark::State& state) {
    GraphPtr base = share(gen_tree(2, 6));
    PerturbResult pr = attach_pendants(*base, 0.5);
    GraphPtr tgt = share(std::move(pr.graph));
    RoughMap phi = verify_rough_map(make_rough_map(base, tgt, pr.map, 0.5));
    UniformizedGraph usrc(base, 1.0);
    UniformizedGraph utgt(tgt, 1.0);
    TransferContext ctx = make_transfer_context(usrc, utgt, phi);
    auto pairs = sample_pairs(*base, PairSpec::random(64, 5, 2.0));
    size_t i = 0;
    for (auto _ : state) {
        auto [u, v] = pairs[i++ % pairs.size()];
        TransferResult r = transfer_uniform_curve(ctx, u, v);
        benchmark::DoNotOptimize(r.lambda_source);
    }
}
BENCHMARK(BM_transfer_pair);

}  // namespace

BENCHMARK_MAIN();
