#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "hypuni/metric_graph.hpp"
#include "hypuni/rough_map_fwd.hpp"

namespace hypuni {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

// Text format, one record per line:
//   base <vertex>
//   frontier <vertex> [<vertex> ...]
//   <vertex> <vertex> <length>
// Vertex names are opaque whitespace-free tokens, indexed in order of first
// appearance. '#' starts a comment. "base" defaults to the first vertex
// seen; "frontier" may be omitted (empty frontier).
MetricGraph read_graph(std::istream& in);
MetricGraph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const MetricGraph& g);
void write_graph_file(const std::string& path, const MetricGraph& g);

// Map file:
//   kind isometry | kind similarity <L>
//   tau <declared>          (optional)
//   <source vertex> <target vertex>
struct MapFile {
    bool similarity = false;
    double scale = 1.0;
    double declared_tau = 0.0;
    std::vector<std::pair<std::string, std::string>> assignments;
};
MapFile read_map_file(const std::string& path);
void write_map_file(const std::string& path, const MapFile& m);

// Exact text round trip for doubles.
std::string io_double(double x);

}  // namespace hypuni
