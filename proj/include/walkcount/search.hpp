#ifndef WALKCOUNT_SEARCH_HPP_
#define WALKCOUNT_SEARCH_HPP_

#include <string>
#include <vector>

#include "walkcount/rooted_tree.hpp"

namespace walkcount {

// Multiset of chain edge-counts, nonincreasing.
struct Partition {
  std::vector<int> parts;
  int total() const {
    int s = 0;
    for (int p : parts) s += p;
    return s;
  }
};

// Unlabeled rooted tree shape; parent vector in a canonical DFS order plus
// the canonical signature string used for dedup.
struct TreeShape {
  std::vector<int> parent;
  std::string signature;
};

// Every unlabeled rooted tree with n_edges edges exactly once
// (1, 2, 4, 9, 20, 48, 115, 286 shapes for n = 1..8).
std::vector<TreeShape> enumerate_rooted_trees(int n_edges);

struct SearchResult {
  RootedTreeView best;
  double best_p2 = 0.0;
  // Structurally distinct co-minimizers within 1e-9 relative of the best
  // (canonical labeled-tree dedup); includes the winner itself.
  std::vector<RootedTreeView> ties;
};

// Exhaustive P2 minimization over all rooted tree shapes and all bijective
// assignments of the given lengths; 2 <= |lengths| <= 6.
SearchResult best_tree(const std::vector<LengthSymbol>& lengths);

// Minimizes partition_objective over partitions of total_edges. Exhaustive
// below an enumeration threshold; above it only balanced partitions per
// chain count k are considered (for fixed k the balanced partition
// minimizes sum l_i^2). Tie-break: smaller value, then fewer parts, then
// lexicographically smaller parts sequence.
Partition best_partition(int total_edges);

// (|E|, k of best_partition(|E|)) for |E| = 1..scan_bound.
std::vector<std::pair<int, int>> root_degree_growth_scan(int d_max,
                                                         int scan_bound = 200);

// Canonical signature of a labeled tree (lengths attached), used for tie
// dedup in search results.
std::string labeled_signature(const RootedTreeView& tree);

}  // namespace walkcount

#endif  // WALKCOUNT_SEARCH_HPP_
