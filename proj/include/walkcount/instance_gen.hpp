#ifndef WALKCOUNT_INSTANCE_GEN_HPP_
#define WALKCOUNT_INSTANCE_GEN_HPP_

#include <optional>
#include <random>

#include "walkcount/rooted_tree.hpp"
#include "walkcount/surgery.hpp"

namespace walkcount {

using Rng = std::mt19937_64;

// Incommensurable-style lengths: uniform in [0.5, 2.5], full mantissa.
std::vector<LengthSymbol> random_lengths(int n, Rng& rng);

// Uniform random recursive attachment: edge i picks its parent among the
// root and edges 0..i-1. Not uniform over shapes, which property tests do
// not need.
RootedTreeView random_tree(int n_edges, Rng& rng);

// Random connected simple graph (spanning tree plus extra edges while they
// fit); used by the oracle-equivalence runs.
MetricGraph random_connected_graph(int n_edges, Rng& rng);

// Uniformly chosen valid moves; nullopt when none exists.
std::optional<T1Move> random_t1_move(const RootedTreeView& tree, Rng& rng);
std::optional<T2Move> random_t2_move(const RootedTreeView& tree, Rng& rng);

}  // namespace walkcount

#endif  // WALKCOUNT_INSTANCE_GEN_HPP_
