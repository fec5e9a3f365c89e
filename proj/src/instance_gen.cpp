#include "walkcount/instance_gen.hpp"

#include <algorithm>

namespace walkcount {

std::vector<LengthSymbol> random_lengths(int n, Rng& rng) {
  std::uniform_real_distribution<double> dist(0.5, 2.5);
  std::vector<double> values;
  values.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) values.push_back(dist(rng));
  return make_symbols(values);
}

RootedTreeView random_tree(int n_edges, Rng& rng) {
  std::vector<int> parent(static_cast<size_t>(n_edges));
  for (int e = 0; e < n_edges; ++e) {
    std::uniform_int_distribution<int> pick(-1, e - 1);
    parent[static_cast<size_t>(e)] = pick(rng);
  }
  return RootedTreeView::from_parents(parent, random_lengths(n_edges, rng));
}

MetricGraph random_connected_graph(int n_edges, Rng& rng) {
  // Pick |V| so that a connected simple graph with n_edges exists:
  // |V|-1 <= n_edges <= |V|(|V|-1)/2.
  int min_v = 2;
  while (min_v * (min_v - 1) / 2 < n_edges) ++min_v;
  std::uniform_int_distribution<int> pick_v(min_v, n_edges + 1);
  const int nv = pick_v(rng);

  MetricGraph g;
  g.num_vertices = nv;
  std::vector<std::pair<int, int>> used;
  for (int v = 1; v < nv; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    int u = pick(rng);
    used.push_back(std::minmax(u, v));
    g.edges.push_back({u, v});
  }
  while (g.num_edges() < n_edges) {
    std::uniform_int_distribution<int> pick(0, nv - 1);
    int u = pick(rng), v = pick(rng);
    if (u == v) continue;
    std::pair<int, int> key = std::minmax(u, v);
    if (std::find(used.begin(), used.end(), key) != used.end()) continue;
    used.push_back(key);
    g.edges.push_back({key.first, key.second});
  }
  g.lengths = random_lengths(n_edges, rng);
  std::uniform_int_distribution<int> pick_src(0, nv - 1);
  g.source = pick_src(rng);
  return g;
}

std::optional<T1Move> random_t1_move(const RootedTreeView& tree, Rng& rng) {
  std::vector<T1Move> moves;
  for (int e = 0; e < tree.num_edges(); ++e) {
    if (tree.is_hanging(e)) continue;
    for (int b : tree.descendants(e))
      if (tree.is_hanging(b)) moves.push_back({e, b});
  }
  if (moves.empty()) return std::nullopt;
  std::uniform_int_distribution<size_t> pick(0, moves.size() - 1);
  return moves[pick(rng)];
}

std::optional<T2Move> random_t2_move(const RootedTreeView& tree, Rng& rng) {
  std::vector<T2Move> moves;
  for (int b = 0; b < tree.num_edges(); ++b) {
    if (!tree.is_hanging(b)) continue;
    int p = tree.parent(b);
    const auto& siblings = p < 0 ? tree.root_edges() : tree.children(p);
    if (static_cast<int>(siblings.size()) + (p < 0 ? 0 : 1) < 3) continue;
    for (int d : siblings)
      if (d != b) moves.push_back({b, d});
  }
  if (moves.empty()) return std::nullopt;
  std::uniform_int_distribution<size_t> pick(0, moves.size() - 1);
  return moves[pick(rng)];
}

}  // namespace walkcount
