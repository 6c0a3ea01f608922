#include "hypuni/graph_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace hypuni {

std::string io_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) {
        if (tok[0] == '#') break;
        out.push_back(tok);
    }
    return out;
}

double parse_length(const std::string& tok, int line) {
    try {
        size_t pos = 0;
        double x = std::stod(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("");
        return x;
    } catch (const std::exception&) {
        throw ParseError(line, "bad number: " + tok);
    }
}

}  // namespace

MetricGraph read_graph(std::istream& in) {
    std::vector<std::string> names;
    std::unordered_map<std::string, VertexId> index;
    auto intern = [&](const std::string& name) {
        auto it = index.find(name);
        if (it != index.end()) return it->second;
        VertexId id = static_cast<VertexId>(names.size());
        names.push_back(name);
        index.emplace(name, id);
        return id;
    };

    std::vector<Edge> edges;
    std::string base_name;
    std::vector<std::string> frontier_names;
    int frontier_line = 0;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokens_of(line);
        if (toks.empty()) continue;
        if (toks[0] == "base") {
            if (toks.size() != 2) throw ParseError(lineno, "expected: base <vertex>");
            base_name = toks[1];
        } else if (toks[0] == "frontier") {
            if (toks.size() < 2) throw ParseError(lineno, "expected: frontier <vertex> ...");
            frontier_names.assign(toks.begin() + 1, toks.end());
            frontier_line = lineno;
        } else if (toks.size() == 3 || toks.size() == 4) {
            // a fourth column (uniformized exports) is accepted and ignored
            VertexId u = intern(toks[0]);
            VertexId v = intern(toks[1]);
            double len = parse_length(toks[2], lineno);
            if (u == v) throw ParseError(lineno, "self loop at " + toks[0]);
            if (!(len > 0)) throw ParseError(lineno, "edge length must be positive");
            edges.push_back({u, v, len});
        } else if (toks[0] == "epsilon") {
            continue;  // header of a uniformized export
        } else {
            throw ParseError(lineno, "expected: <u> <v> <length>");
        }
    }
    if (names.empty()) throw ParseError(lineno, "no vertices");

    VertexId base = 0;
    if (!base_name.empty()) {
        auto it = index.find(base_name);
        if (it == index.end()) throw ParseError(lineno, "base names unknown vertex " + base_name);
        base = it->second;
    }
    std::vector<VertexId> frontier;
    for (const auto& f : frontier_names) {
        auto it = index.find(f);
        if (it == index.end())
            throw ParseError(frontier_line, "frontier names unknown vertex " + f);
        frontier.push_back(it->second);
    }
    try {
        return MetricGraph(std::move(names), std::move(edges), base, std::move(frontier));
    } catch (const std::invalid_argument& e) {
        throw ParseError(lineno, e.what());
    }
}

MetricGraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_graph(in);
}

void write_graph(std::ostream& out, const MetricGraph& g) {
    out << "base " << g.name(g.base()) << "\n";
    if (!g.frontier().empty()) {
        out << "frontier";
        for (VertexId f : g.frontier()) out << " " << g.name(f);
        out << "\n";
    }
    for (const Edge& e : g.edges())
        out << g.name(e.u) << " " << g.name(e.v) << " " << io_double(e.length) << "\n";
}

void write_graph_file(const std::string& path, const MetricGraph& g) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    write_graph(out, g);
}

MapFile read_map_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    MapFile m;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokens_of(line);
        if (toks.empty()) continue;
        if (toks[0] == "kind") {
            if (toks.size() == 2 && toks[1] == "isometry") {
                m.similarity = false;
            } else if (toks.size() == 3 && toks[1] == "similarity") {
                m.similarity = true;
                m.scale = parse_length(toks[2], lineno);
                if (!(m.scale > 0)) throw ParseError(lineno, "similarity scale must be positive");
            } else {
                throw ParseError(lineno, "expected: kind isometry | kind similarity <L>");
            }
        } else if (toks[0] == "tau") {
            if (toks.size() != 2) throw ParseError(lineno, "expected: tau <value>");
            m.declared_tau = parse_length(toks[1], lineno);
            if (m.declared_tau < 0) throw ParseError(lineno, "tau must be nonnegative");
        } else if (toks.size() == 2) {
            m.assignments.emplace_back(toks[0], toks[1]);
        } else {
            throw ParseError(lineno, "expected: <source vertex> <target vertex>");
        }
    }
    if (m.assignments.empty()) throw ParseError(lineno, "map has no assignments");
    return m;
}

void write_map_file(const std::string& path, const MapFile& m) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    if (m.similarity)
        out << "kind similarity " << io_double(m.scale) << "\n";
    else
        out << "kind isometry\n";
    if (m.declared_tau > 0) out << "tau " << io_double(m.declared_tau) << "\n";
    for (const auto& [s, t] : m.assignments) out << s << " " << t << "\n";
}

}  // namespace hypuni
