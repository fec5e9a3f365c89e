#ifndef WALKCOUNT_ROOTED_TREE_HPP_
#define WALKCOUNT_ROOTED_TREE_HPP_

#include <vector>

#include "walkcount/graph.hpp"

namespace walkcount {

// Rooted view of a metric tree. Edges are oriented away from the root; the
// structure is captured entirely by the parent-edge relation (parent -1 for
// root-incident edges), which is what up(e), br(e) and the hanging set need.
class RootedTreeView {
 public:
  // Orients an existing tree; throws NotATree if |E| != |V|-1 or disconnected.
  RootedTreeView(const MetricGraph& graph, int root);

  // Builds the canonical tree for a parent-edge vector: vertex 0 is the root
  // and edge e points at vertex e+1.
  static RootedTreeView from_parents(const std::vector<int>& parent,
                                     const std::vector<LengthSymbol>& lengths);

  const MetricGraph& graph() const { return graph_; }
  int root() const { return root_; }
  int num_edges() const { return graph_.num_edges(); }

  int parent(int e) const;                    // -1 when root-incident
  int depth(int e) const;                     // = |up(e)|, at least 1
  const std::vector<int>& children(int e) const;
  const std::vector<int>& root_edges() const { return root_edges_; }
  int root_degree() const { return static_cast<int>(root_edges_.size()); }

  double length(int e) const { return graph_.length(e); }
  const LengthSymbol& symbol(int e) const {
    return graph_.lengths[static_cast<size_t>(e)];
  }
  std::vector<int> parent_vector() const;

  bool is_hanging(int e) const;               // no end of degree 1 != root
  std::vector<int> hanging_edges() const;     // sorted edge ids
  std::vector<int> up_chain(int e) const;     // e first, root-incident last
  std::vector<int> branch(int e) const;       // sorted: up(e) + descendants
  std::vector<int> descendants(int e) const;  // strict, sorted

  // Chain iff every vertex except the root has degree <= 2 and root degree
  // is <= 2; "star of chains" additionally allows any root degree.
  bool is_chain() const;
  bool is_star_of_chains() const;
  // Chain edge-counts hanging off the root, nonincreasing. Defined for
  // star-of-chains trees.
  std::vector<int> chain_partition() const;

 private:
  RootedTreeView() = default;
  void index();

  MetricGraph graph_;
  int root_ = 0;
  std::vector<int> parent_;                // edge -> parent edge or -1
  std::vector<int> depth_;
  std::vector<std::vector<int>> children_; // edge -> child edges
  std::vector<int> root_edges_;
};

// Path of n edges; root_position in 0..n selects the vertex along the path.
RootedTreeView make_chain(const std::vector<LengthSymbol>& lengths,
                          int root_position);

// k chains sharing only the root; lengths assigned chain by chain, root
// outward. Requires sum(partition) == |lengths|, every part >= 1.
RootedTreeView make_star_of_chains(const std::vector<int>& partition,
                                   const std::vector<LengthSymbol>& lengths);

}  // namespace walkcount

#endif  // WALKCOUNT_ROOTED_TREE_HPP_
