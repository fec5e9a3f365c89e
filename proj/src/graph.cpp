#include "walkcount/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace walkcount {

void validate(const MetricGraph& g) {
  const int n = g.num_vertices;
  const int m = g.num_edges();
  if (static_cast<int>(g.lengths.size()) != m)
    throw Error(ErrorCode::DuplicateLengthSymbol,
                "edge/length count mismatch");
  std::set<std::pair<int, int>> seen;
  std::set<int> symbol_indices;
  for (int e = 0; e < m; ++e) {
    int u = g.edges[static_cast<size_t>(e)][0];
    int v = g.edges[static_cast<size_t>(e)][1];
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw Error(ErrorCode::UnknownVertex, "edge endpoint out of range");
    if (u == v) throw Error(ErrorCode::SelfLoop, "self-loop on vertex");
    auto key = std::minmax(u, v);
    if (!seen.insert({key.first, key.second}).second)
      throw Error(ErrorCode::ParallelEdge, "parallel edge");
    if (!(g.lengths[static_cast<size_t>(e)].value > 0.0))
      throw Error(ErrorCode::NonpositiveLength, "edge length must be > 0");
    if (!symbol_indices.insert(g.lengths[static_cast<size_t>(e)].index).second)
      throw Error(ErrorCode::DuplicateLengthSymbol,
                  "length symbol index reused");
  }
  if (g.source && (*g.source < 0 || *g.source >= n))
    throw Error(ErrorCode::UnknownVertex, "source vertex out of range");
  // connectivity via BFS
  if (n == 0) throw Error(ErrorCode::Disconnected, "empty graph");
  std::vector<char> reached(static_cast<size_t>(n), 0);
  std::vector<int> stack{0};
  reached[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int e = 0; e < m; ++e) {
      for (int side = 0; side < 2; ++side) {
        if (g.edges[static_cast<size_t>(e)][static_cast<size_t>(side)] == v) {
          int w = g.edges[static_cast<size_t>(e)][static_cast<size_t>(1 - side)];
          if (!reached[static_cast<size_t>(w)]) {
            reached[static_cast<size_t>(w)] = 1;
            ++count;
            stack.push_back(w);
          }
        }
      }
    }
  }
  if (count != n) throw Error(ErrorCode::Disconnected, "graph is disconnected");
}

int degree(const MetricGraph& g, int v) {
  if (v < 0 || v >= g.num_vertices)
    throw Error(ErrorCode::UnknownVertex, "unknown vertex");
  int d = 0;
  for (const auto& e : g.edges)
    if (e[0] == v || e[1] == v) ++d;
  return d;
}

std::vector<int> incident_edges(const MetricGraph& g, int v) {
  std::vector<int> out;
  for (int e = 0; e < g.num_edges(); ++e)
    if (g.edges[static_cast<size_t>(e)][0] == v ||
        g.edges[static_cast<size_t>(e)][1] == v)
      out.push_back(e);
  return out;
}

int other_endpoint(const MetricGraph& g, int e, int v) {
  if (e < 0 || e >= g.num_edges())
    throw Error(ErrorCode::UnknownEdge, "unknown edge");
  const auto& ends = g.edges[static_cast<size_t>(e)];
  if (ends[0] == v) return ends[1];
  if (ends[1] == v) return ends[0];
  throw Error(ErrorCode::UnknownVertex, "vertex not an endpoint of edge");
}

MetricGraph make_complete(int m, const std::vector<LengthSymbol>& lengths) {
  if (m < 3 || static_cast<int>(lengths.size()) != m * (m - 1) / 2)
    throw Error(ErrorCode::LengthCountMismatch,
                "complete graph needs m>=3 and m(m-1)/2 lengths");
  MetricGraph g;
  g.num_vertices = m;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) g.edges.push_back({i, j});
  g.lengths = lengths;
  g.vertex_labels.resize(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) g.vertex_labels[static_cast<size_t>(i)] = i;
  g.edge_labels.resize(g.edges.size());
  for (size_t e = 0; e < g.edges.size(); ++e)
    g.edge_labels[e] = static_cast<int>(e);
  return g;
}

std::vector<LengthSymbol> make_symbols(const std::vector<double>& values) {
  std::vector<LengthSymbol> out;
  out.reserve(values.size());
  for (size_t i = 0; i < values.size(); ++i)
    out.push_back({static_cast<int>(i), values[i]});
  return out;
}

MetricGraph graph_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& ex) {
    throw Error(ErrorCode::Usage, std::string("bad graph JSON: ") + ex.what());
  }
  MetricGraph g;
  std::map<int, int> vertex_index;
  for (const auto& v : j.at("vertices")) {
    int label = v.get<int>();
    if (vertex_index.count(label))
      throw Error(ErrorCode::Usage, "duplicate vertex id in file");
    vertex_index[label] = g.num_vertices++;
    g.vertex_labels.push_back(label);
  }
  int basis = 0;
  for (const auto& e : j.at("edges")) {
    int u = e.at("u").get<int>();
    int v = e.at("v").get<int>();
    if (!vertex_index.count(u) || !vertex_index.count(v))
      throw Error(ErrorCode::UnknownVertex, "edge references unknown vertex");
    g.edges.push_back({vertex_index[u], vertex_index[v]});
    g.lengths.push_back({basis++, e.at("length").get<double>()});
    g.edge_labels.push_back(e.contains("id") ? e.at("id").get<int>()
                                             : basis - 1);
  }
  if (j.contains("root") && !j.at("root").is_null()) {
    int r = j.at("root").get<int>();
    if (!vertex_index.count(r))
      throw Error(ErrorCode::UnknownVertex, "root is not a vertex");
    g.source = vertex_index[r];
  }
  validate(g);
  return g;
}

MetricGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Usage, "cannot open graph file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return graph_from_json(ss.str());
}

std::string graph_to_json(const MetricGraph& g) {
  nlohmann::json j;
  j["vertices"] = nlohmann::json::array();
  for (int v = 0; v < g.num_vertices; ++v)
    j["vertices"].push_back(v < static_cast<int>(g.vertex_labels.size())
                                ? g.vertex_labels[static_cast<size_t>(v)]
                                : v);
  j["edges"] = nlohmann::json::array();
  for (int e = 0; e < g.num_edges(); ++e) {
    nlohmann::json je;
    je["id"] = e < static_cast<int>(g.edge_labels.size())
                   ? g.edge_labels[static_cast<size_t>(e)]
                   : e;
    je["u"] = j["vertices"][static_cast<size_t>(
        g.edges[static_cast<size_t>(e)][0])];
    je["v"] = j["vertices"][static_cast<size_t>(
        g.edges[static_cast<size_t>(e)][1])];
    je["length"] = g.length(e);
    j["edges"].push_back(je);
  }
  if (g.source)
    j["root"] = j["vertices"][static_cast<size_t>(*g.source)];
  return j.dump(2);
}

std::string format_double(double x) {
  char buf[40];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof(buf), "%.*g", prec, x);
    if (std::stod(buf) == x) break;
  }
  return buf;
}

}  // namespace walkcount
