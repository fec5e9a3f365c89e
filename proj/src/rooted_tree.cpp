#include "walkcount/rooted_tree.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace walkcount {

RootedTreeView::RootedTreeView(const MetricGraph& graph, int root) {
  validate(graph);
  if (graph.num_edges() != graph.num_vertices - 1)
    throw Error(ErrorCode::NotATree, "|E| != |V| - 1");
  if (root < 0 || root >= graph.num_vertices)
    throw Error(ErrorCode::UnknownVertex, "root out of range");
  graph_ = graph;
  root_ = root;
  const int m = graph_.num_edges();
  parent_.assign(static_cast<size_t>(m), -1);

  // BFS from root assigning each edge the edge above its upper vertex.
  std::vector<int> via_edge(static_cast<size_t>(graph_.num_vertices), -1);
  std::vector<char> seen(static_cast<size_t>(graph_.num_vertices), 0);
  std::queue<int> q;
  q.push(root);
  seen[static_cast<size_t>(root)] = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int e : incident_edges(graph_, v)) {
      int w = other_endpoint(graph_, e, v);
      if (seen[static_cast<size_t>(w)]) continue;
      seen[static_cast<size_t>(w)] = 1;
      parent_[static_cast<size_t>(e)] = via_edge[static_cast<size_t>(v)];
      via_edge[static_cast<size_t>(w)] = e;
      q.push(w);
    }
  }
  index();
}

RootedTreeView RootedTreeView::from_parents(
    const std::vector<int>& parent, const std::vector<LengthSymbol>& lengths) {
  const int m = static_cast<int>(parent.size());
  if (m == 0) throw Error(ErrorCode::EmptyLengths, "tree needs >= 1 edge");
  if (lengths.size() != parent.size())
    throw Error(ErrorCode::LengthCountMismatch, "one length per edge");
  RootedTreeView t;
  t.graph_.num_vertices = m + 1;
  for (int e = 0; e < m; ++e) {
    int p = parent[static_cast<size_t>(e)];
    if (p < -1 || p >= m || p == e)
      throw Error(ErrorCode::NotATree, "bad parent entry");
    t.graph_.edges.push_back({p < 0 ? 0 : p + 1, e + 1});
  }
  t.graph_.lengths = lengths;
  t.graph_.source = 0;
  t.root_ = 0;
  t.parent_ = parent;
  validate(t.graph_);  // catches parent cycles as disconnectedness
  t.index();
  return t;
}

void RootedTreeView::index() {
  const int m = graph_.num_edges();
  depth_.assign(static_cast<size_t>(m), 0);
  children_.assign(static_cast<size_t>(m), {});
  root_edges_.clear();
  for (int e = 0; e < m; ++e) {
    int p = parent_[static_cast<size_t>(e)];
    if (p < 0)
      root_edges_.push_back(e);
    else
      children_[static_cast<size_t>(p)].push_back(e);
  }
  for (int e = 0; e < m; ++e) {
    int d = 0;
    for (int f = e; f >= 0; f = parent_[static_cast<size_t>(f)]) {
      ++d;
      if (d > m) throw Error(ErrorCode::NotATree, "parent relation cyclic");
    }
    depth_[static_cast<size_t>(e)] = d;
  }
}

int RootedTreeView::parent(int e) const {
  if (e < 0 || e >= num_edges())
    throw Error(ErrorCode::UnknownEdge, "unknown edge");
  return parent_[static_cast<size_t>(e)];
}

int RootedTreeView::depth(int e) const {
  if (e < 0 || e >= num_edges())
    throw Error(ErrorCode::UnknownEdge, "unknown edge");
  return depth_[static_cast<size_t>(e)];
}

const std::vector<int>& RootedTreeView::children(int e) const {
  if (e < 0 || e >= num_edges())
    throw Error(ErrorCode::UnknownEdge, "unknown edge");
  return children_[static_cast<size_t>(e)];
}

std::vector<int> RootedTreeView::parent_vector() const { return parent_; }

bool RootedTreeView::is_hanging(int e) const {
  return children(e).empty();
}

std::vector<int> RootedTreeView::hanging_edges() const {
  std::vector<int> out;
  for (int e = 0; e < num_edges(); ++e)
    if (children_[static_cast<size_t>(e)].empty()) out.push_back(e);
  return out;
}

std::vector<int> RootedTreeView::up_chain(int e) const {
  if (e < 0 || e >= num_edges())
    throw Error(ErrorCode::UnknownEdge, "unknown edge");
  std::vector<int> out;
  for (int f = e; f >= 0; f = parent_[static_cast<size_t>(f)]) out.push_back(f);
  return out;
}

std::vector<int> RootedTreeView::descendants(int e) const {
  std::vector<int> out;
  std::vector<int> stack(children(e));
  while (!stack.empty()) {
    int f = stack.back();
    stack.pop_back();
    out.push_back(f);
    for (int c : children_[static_cast<size_t>(f)]) stack.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> RootedTreeView::branch(int e) const {
  std::vector<int> out = up_chain(e);
  for (int f : descendants(e)) out.push_back(f);
  std::sort(out.begin(), out.end());
  return out;
}

bool RootedTreeView::is_star_of_chains() const {
  for (int e = 0; e < num_edges(); ++e)
    if (children_[static_cast<size_t>(e)].size() > 1) return false;
  return true;
}

bool RootedTreeView::is_chain() const {
  return is_star_of_chains() && root_degree() <= 2;
}

std::vector<int> RootedTreeView::chain_partition() const {
  if (!is_star_of_chains())
    throw Error(ErrorCode::NotATree, "not a star of chains");
  std::vector<int> parts;
  for (int e : root_edges_) {
    int len = 0;
    for (int f = e; f >= 0;
         f = children_[static_cast<size_t>(f)].empty()
                 ? -1
                 : children_[static_cast<size_t>(f)][0])
      ++len;
    parts.push_back(len);
  }
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

RootedTreeView make_chain(const std::vector<LengthSymbol>& lengths,
                          int root_position) {
  const int n = static_cast<int>(lengths.size());
  if (n < 1) throw Error(ErrorCode::EmptyLengths, "chain needs >= 1 edge");
  if (root_position < 0 || root_position > n)
    throw Error(ErrorCode::UnknownVertex, "root position out of range");
  // Path edge i joins path vertices i and i+1; orient away from the root.
  std::vector<int> parent(static_cast<size_t>(n), -1);
  for (int i = root_position; i < n; ++i)
    parent[static_cast<size_t>(i)] = i == root_position ? -1 : i - 1;
  for (int i = root_position - 1; i >= 0; --i)
    parent[static_cast<size_t>(i)] = i == root_position - 1 ? -1 : i + 1;
  return RootedTreeView::from_parents(parent, lengths);
}

RootedTreeView make_star_of_chains(const std::vector<int>& partition,
                                   const std::vector<LengthSymbol>& lengths) {
  int total = 0;
  for (int l : partition) {
    if (l < 1) throw Error(ErrorCode::PartitionMismatch, "parts must be >= 1");
    total += l;
  }
  if (partition.empty() || total != static_cast<int>(lengths.size()))
    throw Error(ErrorCode::PartitionMismatch,
                "partition must sum to the number of lengths");
  std::vector<int> parent(lengths.size(), -1);
  int next = 0;
  for (int l : partition) {
    for (int i = 0; i < l; ++i, ++next)
      parent[static_cast<size_t>(next)] = i == 0 ? -1 : next - 1;
  }
  return RootedTreeView::from_parents(parent, lengths);
}

}  // namespace walkcount
