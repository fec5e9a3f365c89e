#ifndef WALKCOUNT_GRAPH_HPP_
#define WALKCOUNT_GRAPH_HPP_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "walkcount/errors.hpp"

namespace walkcount {

// Edge length as a basis symbol: logically the t_e are Q-linearly
// independent, so exact reasoning uses the basis index while ordering and
// polynomial evaluation use the numeric value.
struct LengthSymbol {
  int index = 0;          // basis position, 0-based, dense over the graph
  double value = 1.0;     // positive; time units at unit speed
};

// Undirected simple metric graph. Vertices and edges use dense 0-based ids;
// labels preserve ids from an input file for round-tripping.
struct MetricGraph {
  int num_vertices = 0;
  std::vector<std::array<int, 2>> edges;   // endpoints, edge id = position
  std::vector<LengthSymbol> lengths;       // one symbol per edge id
  std::optional<int> source;               // walk start / tree root
  std::vector<int> vertex_labels;          // defaults to identity
  std::vector<int> edge_labels;

  int num_edges() const { return static_cast<int>(edges.size()); }
  double length(int e) const { return lengths[static_cast<size_t>(e)].value; }
};

// Throws on any structural defect: Disconnected, SelfLoop, ParallelEdge,
// NonpositiveLength, DuplicateLengthSymbol.
void validate(const MetricGraph& g);

int degree(const MetricGraph& g, int v);

// Edge ids incident to v.
std::vector<int> incident_edges(const MetricGraph& g, int v);

int other_endpoint(const MetricGraph& g, int e, int v);

// Complete simple graph K_m; requires |lengths| = m(m-1)/2 and m >= 3.
MetricGraph make_complete(int m, const std::vector<LengthSymbol>& lengths);

// Symbols 0..n-1 with the given numeric values.
std::vector<LengthSymbol> make_symbols(const std::vector<double>& values);

// JSON: {"vertices":[ids], "edges":[{"id","u","v","length"}], "root": id}.
// Basis indices are assigned by edge order in the file.
MetricGraph graph_from_json(const std::string& text);
MetricGraph load_graph_file(const std::string& path);
std::string graph_to_json(const MetricGraph& g);

// Shortest decimal representation that round-trips to the same double.
std::string format_double(double x);

}  // namespace walkcount

#endif  // WALKCOUNT_GRAPH_HPP_
