// Batch driver over the core library: graph analysis, uniformization,
// uniformity scans, map verification, curve transfer, the analytic
// divergence table, generators, and artifact diffing.
//
// Exit codes: 0 success, 1 input error, 2 an asserted bound failed.
// Fixed inputs and seed produce byte-identical output.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hypuni/boundary.hpp"
#include "hypuni/disk_counterexample.hpp"
#include "hypuni/generators.hpp"
#include "hypuni/graph_io.hpp"
#include "hypuni/hyperbolicity.hpp"
#include "hypuni/quasihyperbolic.hpp"
#include "hypuni/rough_map.hpp"
#include "hypuni/sampling.hpp"
#include "hypuni/starlikeness.hpp"
#include "hypuni/transfer.hpp"
#include "hypuni/uniformity.hpp"
#include "hypuni/uniformize.hpp"

using json = nlohmann::ordered_json;
using namespace hypuni;

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kBoundFailed = 2;

// CSV and text payloads round to 12 significant digits; graph files keep
// the exact 17-digit form from graph_io.
std::string num(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

struct Output {
    std::ofstream file;
    std::ostream* stream = &std::cout;

    explicit Output(const std::string& path) {
        if (path.empty()) return;
        file.open(path);
        if (!file) throw std::runtime_error("cannot open " + path);
        stream = &file;
    }
    std::ostream& out() { return *stream; }
};

GraphPtr load_graph(const std::string& path) {
    return std::make_shared<MetricGraph>(read_graph_file(path));
}

RoughMap load_map(const std::string& path, GraphPtr source, GraphPtr target) {
    MapFile mf = read_map_file(path);
    std::vector<VertexId> map(source->vertex_count(), -1);
    for (const auto& [s, t] : mf.assignments) {
        VertexId u = source->id_of(s);
        if (map[u] >= 0) throw std::runtime_error("map assigns " + s + " twice");
        map[u] = target->id_of(t);
    }
    for (int u = 0; u < source->vertex_count(); ++u)
        if (map[u] < 0)
            throw std::runtime_error("map misses source vertex " + source->name(u));
    return make_rough_map(std::move(source), std::move(target), std::move(map),
                          mf.declared_tau, mf.similarity, mf.scale);
}

void emit_kv(std::ostream& out, const std::string& format, const json& data) {
    if (format == "json") {
        out << data.dump(2) << "\n";
        return;
    }
    if (format == "csv") {
        std::string header;
        std::string row;
        for (auto it = data.begin(); it != data.end(); ++it) {
            if (!header.empty()) {
                header += ",";
                row += ",";
            }
            header += it.key();
            row += it->is_number_float()
                       ? num(it->get<double>())
                       : (it->is_string() ? it->get<std::string>() : it->dump());
        }
        out << header << "\n" << row << "\n";
        return;
    }
    for (auto it = data.begin(); it != data.end(); ++it)
        out << it.key() << " "
            << (it->is_number_float()
                    ? num(it->get<double>())
                    : (it->is_string() ? it->get<std::string>() : it->dump()))
            << "\n";
}

// ---- analyze ----------------------------------------------------------

int cmd_analyze(const std::string& graph_path, long sample, std::uint64_t seed,
                const std::string& out_path, const std::string& format) {
    GraphPtr g = load_graph(graph_path);
    HyperbolicityMode mode =
        sample > 0 ? HyperbolicityMode::sampled(sample, seed) : HyperbolicityMode::all();
    HyperbolicityReport h = hyperbolicity(*g, mode);

    json data;
    data["vertices"] = g->vertex_count();
    data["edges"] = static_cast<int>(g->edges().size());
    data["diameter"] = g->diameter();
    data["min_edge_length"] = g->min_edge_length();
    data["mode"] = h.exhaustive ? "exhaustive" : "sampled";
    if (!h.exhaustive) data["samples"] = h.samples;
    data["sampling_resolution"] = h.sampling_resolution;
    data["delta_thin"] = h.delta_thin;
    data["witness_thin"] = g->name(h.witness_thin[0]) + " " + g->name(h.witness_thin[1]) + " " +
                           g->name(h.witness_thin[2]);
    data["delta_four_point"] = h.delta_four_point;
    data["witness_four"] = g->name(h.witness_four[0]) + " " + g->name(h.witness_four[1]) + " " +
                           g->name(h.witness_four[2]) + " " + g->name(h.witness_four[3]);
    if (!g->frontier().empty()) {
        StarlikenessReport s = starlikeness(*g);
        data["starlike_M"] = s.M;
        data["starlike_witness"] = g->name(s.witness);
        data["rays"] = static_cast<int>(s.rays.size());
    }
    Output out(out_path);
    emit_kv(out.out(), format, data);
    return kOk;
}

// ---- uniformize -------------------------------------------------------

int cmd_uniformize(const std::string& graph_path, double eps, const std::string& out_path) {
    UniformizedGraph ug = uniformize(load_graph(graph_path), eps);
    Output out(out_path);
    write_uniformized(out.out(), ug);
    return kOk;
}

// ---- check-uniform ----------------------------------------------------

int cmd_check_uniform(const std::string& graph_path, double eps, int pairs, std::uint64_t seed,
                      double lambda_cap, const std::string& out_path,
                      const std::string& format) {
    GraphPtr g = load_graph(graph_path);
    UniformizedGraph ug = uniformize(g, eps);
    BoundaryDistance bd = delta_eps(ug);
    PairSpec spec = pairs > 0 ? PairSpec::random(pairs, seed) : PairSpec::all();
    DomainUniformityEstimate est = estimate_domain_uniformity(ug, bd, spec, lambda_cap);

    double M = starlikeness(*g).M;
    QuasihyperbolicMetric k(ug, bd);
    BiLipschitzReport bl = bilipschitz_report(ug, bd, k, M, spec);

    json data;
    data["vertices"] = g->vertex_count();
    data["epsilon"] = eps;
    data["starlike_M"] = M;
    data["pairs_scanned"] = static_cast<int>(est.pairs.size());
    data["lambda_hat"] = est.lambda_hat;
    data["lambda_cap"] = lambda_cap;
    data["cap_failures"] = static_cast<int>(est.failures.size());
    data["bilipschitz_min"] = bl.min_ratio;
    data["bilipschitz_max"] = bl.max_ratio;
    data["bilipschitz_band"] = bl.max_ratio / bl.min_ratio;
    data["bilipschitz_bound"] = bl.bound;
    data["bilipschitz_tolerance"] = bl.tolerance;
    data["bilipschitz_ok"] = bl.within_bound ? "yes" : "no";
    Output out(out_path);
    emit_kv(out.out(), format, data);
    if (!bl.within_bound || !est.failures.empty()) return kBoundFailed;
    return kOk;
}

// ---- verify-map -------------------------------------------------------

int cmd_verify_map(const std::string& source_path, const std::string& target_path,
                   const std::string& map_path, const std::string& out_path,
                   const std::string& format) {
    GraphPtr src = load_graph(source_path);
    GraphPtr tgt = load_graph(target_path);
    RoughMap declared = load_map(map_path, src, tgt);
    double declared_tau = declared.tau;
    RoughMap m = verify_rough_map(declared);

    json data;
    data["kind"] = m.similarity ? "similarity" : "isometry";
    if (m.similarity) data["scale"] = m.scale;
    data["declared_tau"] = declared_tau;
    data["tau_distortion"] = m.tau_distortion;
    data["tau_density"] = m.tau_density;
    data["tau"] = m.tau;
    bool honored = declared_tau <= 0 || m.tau <= declared_tau + 1e-9;
    data["declared_tau_honored"] = honored ? "yes" : "no";
    if (!m.similarity) {
        RoughMap inv = quasi_inverse(m);
        RoundTripGaps gaps = round_trip_gaps(m, inv);
        data["inverse_tau"] = inv.tau;
        data["inverse_tau_bound"] = 3.0 * m.tau;
        data["source_round_trip"] = gaps.source_gap;
        data["source_round_trip_bound"] = 2.0 * m.tau;
        data["target_round_trip"] = gaps.target_gap;
        data["target_round_trip_bound"] = m.tau;
        bool inv_ok = inv.tau <= 3.0 * m.tau + 1e-9 && gaps.source_gap <= 2.0 * m.tau + 1e-9 &&
                      gaps.target_gap <= m.tau + 1e-9;
        data["inverse_ok"] = inv_ok ? "yes" : "no";
        honored = honored && inv_ok;
    }
    Output out(out_path);
    emit_kv(out.out(), format, data);
    return honored ? kOk : kBoundFailed;
}

// ---- transfer ---------------------------------------------------------

int cmd_transfer(std::string source_path, std::string target_path, std::string map_path,
                 double eps, int pairs, std::uint64_t seed, const std::string& scenario_path,
                 const std::string& out_path) {
    std::vector<std::pair<std::string, std::string>> named_pairs;
    if (!scenario_path.empty()) {
        std::ifstream in(scenario_path);
        if (!in) throw std::runtime_error("cannot open " + scenario_path);
        json sc = json::parse(in);
        if (source_path.empty()) source_path = sc.value("source_graph", "");
        if (target_path.empty()) target_path = sc.value("target_graph", "");
        if (map_path.empty()) map_path = sc.value("map", "");
        if (eps <= 0) eps = sc.value("epsilon", 0.0);
        for (const auto& p : sc.value("pairs", json::array()))
            named_pairs.emplace_back(p.at(0).get<std::string>(), p.at(1).get<std::string>());
    }
    if (source_path.empty() || target_path.empty() || map_path.empty() || eps <= 0)
        throw std::runtime_error("transfer needs a source graph, target graph, map, and epsilon");

    GraphPtr src = load_graph(source_path);
    GraphPtr tgt = load_graph(target_path);
    RoughMap phi = load_map(map_path, src, tgt);
    UniformizedGraph usrc = uniformize(src, eps);
    UniformizedGraph utgt = uniformize(tgt, eps);
    TransferContext ctx = make_transfer_context(usrc, utgt, phi);

    std::vector<std::pair<VertexId, VertexId>> ps;
    for (const auto& [a, b] : named_pairs) ps.emplace_back(src->id_of(a), src->id_of(b));
    if (ps.empty()) ps = sample_pairs(*src, PairSpec::random(pairs > 0 ? pairs : 20, seed));

    Output out(out_path);
    out.out() << "# tau " << num(ctx.tau) << "\n";
    out.out() << "u,v,short_branch,N,max_gap,gap_cap_interior,gap_cap_endpoint,gaps_ok,"
                 "lambda_source,lambda_target,lambda_bound,lambda_ok\n";
    bool all_ok = true;
    for (auto [u, v] : ps) {
        TransferResult t = transfer_uniform_curve(ctx, u, v);
        double cap_i = 2.0 + ctx.tau + 2.0 * t.max_snap_offset;
        double cap_e = 2.0 + 2.0 * ctx.tau + 2.0 * t.max_snap_offset;
        out.out() << src->name(u) << "," << src->name(v) << "," << (t.short_branch ? 1 : 0)
                  << "," << t.N << "," << num(t.max_gap) << "," << num(cap_i) << ","
                  << num(cap_e) << "," << (t.gaps_ok ? 1 : 0) << "," << num(t.lambda_source)
                  << "," << num(t.lambda_target) << "," << num(t.bound.total) << ","
                  << (t.lambda_ok ? 1 : 0) << "\n";
        all_ok = all_ok && t.gaps_ok && t.lambda_ok;
    }
    return all_ok ? kOk : kBoundFailed;
}

// ---- counterexample ---------------------------------------------------

int cmd_counterexample(double eps, double rmin, double rmax, double rstep, double acap,
                       const std::string& out_path) {
    std::vector<double> radii;
    for (double R = rmin; R <= rmax + 1e-12; R += rstep) radii.push_back(R);
    auto rows = divergence_table(eps, radii, acap);
    Output out(out_path);
    out.out() << "# eps " << num(eps) << " acap " << num(acap) << "\n";
    out.out() << "R,a_min,annulus_inner,annulus_outer\n";
    for (const auto& row : rows) {
        out.out() << num(row.R) << ",";
        if (std::isfinite(row.a_min))
            out.out() << num(row.a_min) << "," << num(row.annulus.inner_tau) << ","
                      << num(row.annulus.outer_T) << "\n";
        else
            out.out() << "inf,,\n";
    }
    return kOk;
}

// ---- generate ---------------------------------------------------------

int cmd_generate(const std::string& kind, int branching, int depth, int teeth,
                 double resolution, double rmax, int rings, int sectors,
                 const std::string& out_path) {
    std::optional<MetricGraph> g;
    if (kind == "tree")
        g = gen_tree(branching, depth);
    else if (kind == "comb")
        g = gen_comb(teeth, resolution);
    else if (kind == "grid")
        g = gen_hyperbolic_grid(rmax, rings, sectors);
    else
        throw std::runtime_error("unknown kind " + kind + " (tree|comb|grid)");
    Output out(out_path);
    write_graph(out.out(), *g);
    return kOk;
}

// ---- compare-runs -----------------------------------------------------

std::vector<std::string> artifact_tokens(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<std::string> tokens;
    std::string line;
    while (std::getline(in, line)) {
        std::string cur;
        for (char c : line) {
            if (c == ',' || c == ' ' || c == '\t' || c == '[' || c == ']' || c == '{' ||
                c == '}' || c == ':' || c == '"') {
                if (!cur.empty()) tokens.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        if (!cur.empty()) tokens.push_back(cur);
    }
    return tokens;
}

bool tokens_equal(const std::string& a, const std::string& b, double rtol) {
    if (a == b) return true;
    try {
        size_t pa = 0;
        size_t pb = 0;
        double x = std::stod(a, &pa);
        double y = std::stod(b, &pb);
        if (pa != a.size() || pb != b.size()) return false;
        return std::abs(x - y) <= rtol * std::max({1.0, std::abs(x), std::abs(y)});
    } catch (const std::exception&) {
        return false;
    }
}

int cmd_compare_runs(const std::string& a, const std::string& b, double rtol) {
    auto ta = artifact_tokens(a);
    auto tb = artifact_tokens(b);
    long differences = 0;
    size_t n = std::min(ta.size(), tb.size());
    for (size_t i = 0; i < n; ++i)
        if (!tokens_equal(ta[i], tb[i], rtol)) {
            if (differences < 20)
                std::cout << "field " << i << ": " << ta[i] << " != " << tb[i] << "\n";
            ++differences;
        }
    if (ta.size() != tb.size()) {
        std::cout << "field count: " << ta.size() << " != " << tb.size() << "\n";
        ++differences;
    }
    if (differences == 0) {
        std::cout << "identical within rtol " << num(rtol) << "\n";
        return kOk;
    }
    std::cout << differences << " differing fields\n";
    return kBoundFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"metric graph uniformization toolkit"};
    app.require_subcommand(1);

    std::string graph_path;
    std::string graph2_path;
    std::string map_path;
    std::string scenario_path;
    std::string out_path;
    std::string format = "text";
    std::string kind;
    double eps = 0.0;
    double lambda_cap = std::numeric_limits<double>::infinity();
    double acap = 1e12;
    double rmin = 5.0;
    double rmax = 10.0;
    double rstep = 1.0;
    double resolution = 1.0;
    double rtol = 1e-9;
    double grid_rmax = 2.0;
    long sample = 0;
    std::uint64_t seed = 0;
    int pairs = 0;
    int branching = 2;
    int depth = 4;
    int teeth = 3;
    int rings = 8;
    int sectors = 32;
    std::string cmp_a;
    std::string cmp_b;

    auto* analyze = app.add_subcommand("analyze", "hyperbolicity and starlikeness of a graph");
    analyze->add_option("--graph", graph_path, "graph file")->required();
    analyze->add_option("--sample", sample, "sampled triples/quadruples instead of all");
    analyze->add_option("--seed", seed, "sampling seed");
    analyze->add_option("--out", out_path, "output path (default stdout)");
    analyze->add_option("--format", format, "text|json|csv");

    auto* unif = app.add_subcommand("uniformize", "exponentially reweight a graph");
    unif->add_option("--graph", graph_path, "graph file")->required();
    unif->add_option("--epsilon", eps, "density decay rate")->required();
    unif->add_option("--out", out_path, "output path (default stdout)");

    auto* check = app.add_subcommand("check-uniform",
                                     "uniformity of reweighted geodesics and the "
                                     "quasihyperbolic band");
    check->add_option("--graph", graph_path, "graph file")->required();
    check->add_option("--epsilon", eps, "density decay rate")->required();
    check->add_option("--pairs", pairs, "random pairs to scan (0 = all pairs)");
    check->add_option("--seed", seed, "pair sampling seed");
    check->add_option("--lambda-cap", lambda_cap, "flag pairs above this constant");
    check->add_option("--out", out_path, "output path (default stdout)");
    check->add_option("--format", format, "text|json|csv");

    auto* vmap = app.add_subcommand("verify-map", "measure a vertex map's metric control");
    vmap->add_option("--graph", graph_path, "source graph")->required();
    vmap->add_option("--graph2", graph2_path, "target graph")->required();
    vmap->add_option("--map", map_path, "map file")->required();
    vmap->add_option("--out", out_path, "output path (default stdout)");
    vmap->add_option("--format", format, "text|json|csv");

    auto* tr = app.add_subcommand("transfer",
                                  "build curves in the source graph from uniform curves in "
                                  "the target");
    tr->add_option("--graph", graph_path, "source graph (curves are built here)");
    tr->add_option("--graph2", graph2_path, "target graph (guide curves live here)");
    tr->add_option("--map", map_path, "map file, source to target");
    tr->add_option("--epsilon", eps, "density decay rate");
    tr->add_option("--pairs", pairs, "random source pairs when the scenario lists none");
    tr->add_option("--seed", seed, "pair sampling seed");
    tr->add_option("--scenario", scenario_path, "JSON scenario with named pairs");
    tr->add_option("--out", out_path, "output path (default stdout)");

    auto* cex = app.add_subcommand("counterexample",
                                   "divergence table for the analytic disk obstruction");
    cex->add_option("--epsilon", eps, "density decay rate, must exceed 2")->required();
    cex->add_option("--rmin", rmin, "first radius");
    cex->add_option("--rmax", rmax, "last radius");
    cex->add_option("--rstep", rstep, "radius step");
    cex->add_option("--acap", acap, "search cap for the uniformity constant");
    cex->add_option("--out", out_path, "output path (default stdout)");

    auto* gen = app.add_subcommand("generate", "emit a generated graph");
    gen->add_option("--kind", kind, "tree|comb|grid")->required();
    gen->add_option("--branching", branching, "tree: children per vertex");
    gen->add_option("--depth", depth, "tree: leaf depth");
    gen->add_option("--teeth", teeth, "comb: tooth count");
    gen->add_option("--resolution", resolution, "comb: discretization step");
    gen->add_option("--rmax", grid_rmax, "grid: outer radius");
    gen->add_option("--rings", rings, "grid: ring count");
    gen->add_option("--sectors", sectors, "grid: sectors per ring");
    gen->add_option("--out", out_path, "output path (default stdout)");

    auto* cmp = app.add_subcommand("compare-runs", "field-wise diff of two artifacts");
    cmp->add_option("a", cmp_a, "first artifact")->required();
    cmp->add_option("b", cmp_b, "second artifact")->required();
    cmp->add_option("--rtol", rtol, "relative tolerance for numeric fields");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << e.what() << "\n";
        return kInputError;
    }

    try {
        if (*analyze) return cmd_analyze(graph_path, sample, seed, out_path, format);
        if (*unif) return cmd_uniformize(graph_path, eps, out_path);
        if (*check)
            return cmd_check_uniform(graph_path, eps, pairs, seed, lambda_cap, out_path, format);
        if (*vmap) return cmd_verify_map(graph_path, graph2_path, map_path, out_path, format);
        if (*tr)
            return cmd_transfer(graph_path, graph2_path, map_path, eps, pairs, seed,
                                scenario_path, out_path);
        if (*cex) return cmd_counterexample(eps, rmin, rmax, rstep, acap, out_path);
        if (*gen)
            return cmd_generate(kind, branching, depth, teeth, resolution, grid_rmax, rings,
                                sectors, out_path);
        if (*cmp) return cmd_compare_runs(cmp_a, cmp_b, rtol);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
