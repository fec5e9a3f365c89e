#include "walkcount/surgery.hpp"

#include <algorithm>
#include <cmath>

#include "walkcount/asymptotics.hpp"

namespace walkcount {

namespace {

bool in_up_chain(const RootedTreeView& tree, int target, int e) {
  for (int f = e; f >= 0; f = tree.parent(f))
    if (f == target) return true;
  return false;
}

constexpr double kStrictFactor = 1e-12;

}  // namespace

void validate_t1(const RootedTreeView& tree, const T1Move& move) {
  const int m = tree.num_edges();
  if (move.e < 0 || move.e >= m || move.b < 0 || move.b >= m)
    throw Error(ErrorCode::InvalidMove, "T1 edge id out of range");
  if (tree.is_hanging(move.e))
    throw Error(ErrorCode::InvalidMove, "T1: e must be non-hanging");
  if (!tree.is_hanging(move.b))
    throw Error(ErrorCode::InvalidMove, "T1: b must be hanging");
  if (!in_up_chain(tree, move.e, move.b) || move.b == move.e)
    throw Error(ErrorCode::InvalidMove, "T1: b must lie strictly below e");
}

RootedTreeView t1_apply(const RootedTreeView& tree, const T1Move& move) {
  validate_t1(tree, move);
  std::vector<int> parent = tree.parent_vector();
  const int old_pe = parent[static_cast<size_t>(move.e)];
  // Excise e: its child subtrees hang from e's former upper vertex.
  for (int c : tree.children(move.e)) parent[static_cast<size_t>(c)] = old_pe;
  // Splice e back immediately above b.
  const int pb = parent[static_cast<size_t>(move.b)];  // post-excision
  parent[static_cast<size_t>(move.e)] = pb;
  parent[static_cast<size_t>(move.b)] = move.e;
  std::vector<LengthSymbol> lengths;
  for (int e = 0; e < tree.num_edges(); ++e) lengths.push_back(tree.symbol(e));
  return RootedTreeView::from_parents(parent, lengths);
}

double t1_delta(const RootedTreeView& tree, const T1Move& move) {
  validate_t1(tree, move);
  // D \ l = strict descendants of e, minus b, minus b's strict ancestors
  // below e (the chain l).
  std::vector<char> excluded(static_cast<size_t>(tree.num_edges()), 0);
  excluded[static_cast<size_t>(move.b)] = 1;
  for (int f = tree.parent(move.b); f >= 0 && f != move.e;
       f = tree.parent(f))
    excluded[static_cast<size_t>(f)] = 1;
  double sum = 0.0;
  for (int f : tree.descendants(move.e))
    if (!excluded[static_cast<size_t>(f)]) sum += tree.length(f);
  return tree.length(move.e) * sum;
}

void validate_t2(const RootedTreeView& tree, const T2Move& move) {
  const int m = tree.num_edges();
  if (move.b < 0 || move.b >= m || move.d < 0 || move.d >= m ||
      move.b == move.d)
    throw Error(ErrorCode::InvalidMove, "T2 edge ids invalid");
  if (!tree.is_hanging(move.b))
    throw Error(ErrorCode::InvalidMove, "T2: b must be hanging");
  const int p = tree.parent(move.b);
  const auto& siblings = p < 0 ? tree.root_edges() : tree.children(p);
  if (std::find(siblings.begin(), siblings.end(), move.d) == siblings.end())
    throw Error(ErrorCode::InvalidMove,
                "T2: d must share b's attachment vertex, away from the root");
  const int vertex_degree =
      static_cast<int>(siblings.size()) + (p < 0 ? 0 : 1);
  if (vertex_degree < 3)
    throw Error(ErrorCode::InvalidMove,
                "T2: attachment vertex must have degree >= 3");
}

namespace {

// Shared splice: b moves between d and d's former children.
RootedTreeView splice_below(const RootedTreeView& tree, int b, int d) {
  std::vector<int> parent = tree.parent_vector();
  for (int c : tree.children(d)) parent[static_cast<size_t>(c)] = b;
  parent[static_cast<size_t>(b)] = d;
  std::vector<LengthSymbol> lengths;
  for (int e = 0; e < tree.num_edges(); ++e) lengths.push_back(tree.symbol(e));
  return RootedTreeView::from_parents(parent, lengths);
}

}  // namespace

RootedTreeView t2_apply(const RootedTreeView& tree, const T2Move& move) {
  validate_t2(tree, move);
  return splice_below(tree, move.b, move.d);
}

double t2_delta(const RootedTreeView& tree, const T2Move& move) {
  validate_t2(tree, move);
  if (tree.is_hanging(move.d))
    throw Error(ErrorCode::FormulaDomain,
                "delta formula requires d non-hanging; use the direct P2 "
                "difference");
  const double tb = tree.length(move.b);
  double d_sum = tree.length(move.d);
  for (int f : tree.descendants(move.d)) d_sum += tree.length(f);
  double rest = 0.0;
  for (int e = 0; e < tree.num_edges(); ++e)
    if (e != move.b) rest += tree.length(e);
  return -d_sum * tb + tb * tb + 2.0 * tb * rest;
}

RootedTreeView minimize_by_surgery(const RootedTreeView& input,
                                   std::vector<SurgeryStep>* log) {
  if (input.num_edges() < 2)
    throw Error(ErrorCode::TooFewEdges, "need >= 2 edges");
  RootedTreeView tree = input;
  for (;;) {
    const int m = tree.num_edges();
    const double scale = std::abs(p2(tree));
    const double threshold = 2.0 * kStrictFactor * scale;  // deltas are 2*dP2
    bool moved = false;

    // T1 first: first strictly decreasing move in (e, b) id order.
    for (int e = 0; e < m && !moved; ++e) {
      if (tree.is_hanging(e)) continue;
      for (int b : tree.descendants(e)) {
        if (!tree.is_hanging(b)) continue;
        T1Move mv{e, b};
        double delta = t1_delta(tree, mv);
        if (delta > threshold) {
          tree = t1_apply(tree, mv);
          if (log) log->push_back({"t1", e, b, -1, 0.5 * delta});
          moved = true;
          break;
        }
      }
    }
    if (moved) continue;

    // T2 at vertices of degree >= 3; decided by the direct P2 difference.
    const double before = p2(tree);
    for (int b = 0; b < m && !moved; ++b) {
      if (!tree.is_hanging(b)) continue;
      const int p = tree.parent(b);
      const auto& siblings = p < 0 ? tree.root_edges() : tree.children(p);
      if (static_cast<int>(siblings.size()) + (p < 0 ? 0 : 1) < 3) continue;
      for (int d : siblings) {
        if (d == b) continue;
        RootedTreeView next = t2_apply(tree, {b, d});
        double delta = before - p2(next);
        if (delta > kStrictFactor * scale) {
          if (log) log->push_back({"t2", -1, b, d, delta});
          tree = std::move(next);
          moved = true;
          break;
        }
      }
    }
    if (moved) continue;

    // Degree-2 root with a single-edge chain: absorb it into the other
    // chain (T2's splice at the root; always a strict decrease).
    if (tree.root_degree() == 2) {
      for (int b : tree.root_edges()) {
        if (!tree.is_hanging(b)) continue;
        int d = tree.root_edges()[0] == b ? tree.root_edges()[1]
                                          : tree.root_edges()[0];
        RootedTreeView next = splice_below(tree, b, d);
        double delta = before - p2(next);
        if (delta > kStrictFactor * scale) {
          if (log) log->push_back({"t2-root", -1, b, d, delta});
          tree = std::move(next);
          moved = true;
          break;
        }
      }
    }
    if (!moved) break;
  }
  return tree;
}

}  // namespace walkcount
