#include "walkcount/search.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "walkcount/asymptotics.hpp"

namespace walkcount {

namespace {

// Shapes are built bottom-up: a rooted tree with k edges is a multiset of
// child subtrees, a child with c edges costing c+1. Keeping the chosen
// (edges, index) pairs nondecreasing makes every shape appear exactly once.
struct RawShape {
  std::vector<std::pair<int, int>> kids;  // (edge count, catalog index)
};

class ShapeCatalog {
 public:
  explicit ShapeCatalog(int max_edges)
      : shapes_(static_cast<size_t>(max_edges) + 1),
        sigs_(static_cast<size_t>(max_edges) + 1) {
    shapes_[0] = {RawShape{}};
    sigs_[0] = {"()"};
    for (int k = 1; k <= max_edges; ++k) {
      std::vector<std::pair<int, int>> current;
      gen(k, k, 0, 0, current);
    }
  }

  const std::vector<RawShape>& shapes(int k) const {
    return shapes_[static_cast<size_t>(k)];
  }

  void build_parent(const RawShape& s, int parent_edge,
                    std::vector<int>* out) const {
    for (auto [c, idx] : s.kids) {
      int id = static_cast<int>(out->size());
      out->push_back(parent_edge);
      build_parent(shapes_[static_cast<size_t>(c)][static_cast<size_t>(idx)],
                   id, out);
    }
  }

  std::string signature(const RawShape& s) const {
    std::vector<std::string> parts;
    for (auto [c, idx] : s.kids)
      parts.push_back(sigs_[static_cast<size_t>(c)][static_cast<size_t>(idx)]);
    std::sort(parts.begin(), parts.end());
    std::string out = "(";
    for (const auto& p : parts) out += p;
    out += ")";
    return out;
  }

 private:
  void gen(int level, int remaining, int min_c, int min_idx,
           std::vector<std::pair<int, int>>& current) {
    if (remaining == 0) {
      RawShape s{current};
      sigs_[static_cast<size_t>(level)].push_back(signature(s));
      shapes_[static_cast<size_t>(level)].push_back(std::move(s));
      return;
    }
    for (int c = min_c; c + 1 <= remaining; ++c) {
      const auto& pool = shapes_[static_cast<size_t>(c)];
      for (int idx = c == min_c ? min_idx : 0;
           idx < static_cast<int>(pool.size()); ++idx) {
        current.push_back({c, idx});
        gen(level, remaining - c - 1, c, idx, current);
        current.pop_back();
      }
    }
  }

  std::vector<std::vector<RawShape>> shapes_;
  std::vector<std::vector<std::string>> sigs_;
};

}  // namespace

std::vector<TreeShape> enumerate_rooted_trees(int n_edges) {
  if (n_edges < 1 || n_edges > 8)
    throw Error(ErrorCode::BudgetExceeded,
                "exhaustive shape enumeration supports 1..8 edges");
  static thread_local std::map<int, std::vector<TreeShape>> cache;
  auto it = cache.find(n_edges);
  if (it != cache.end()) return it->second;

  ShapeCatalog catalog(n_edges);
  std::vector<TreeShape> out;
  for (const RawShape& s : catalog.shapes(n_edges)) {
    TreeShape shape;
    catalog.build_parent(s, -1, &shape.parent);
    shape.signature = catalog.signature(s);
    out.push_back(std::move(shape));
  }
  cache[n_edges] = out;
  return out;
}

std::string labeled_signature(const RootedTreeView& tree) {
  // sig(e) = "(" idx(e) "|" sorted child sigs ")"; root lists its edges.
  std::vector<std::string> memo(static_cast<size_t>(tree.num_edges()));
  auto rec = [&](auto&& self, int e) -> std::string {
    std::vector<std::string> parts;
    for (int c : tree.children(e)) parts.push_back(self(self, c));
    std::sort(parts.begin(), parts.end());
    std::string out = "(" + std::to_string(tree.symbol(e).index) + "|";
    for (const auto& p : parts) out += p;
    out += ")";
    return out;
  };
  std::vector<std::string> parts;
  for (int e : tree.root_edges()) parts.push_back(rec(rec, e));
  std::sort(parts.begin(), parts.end());
  std::string out = "{";
  for (const auto& p : parts) out += p;
  out += "}";
  return out;
}

namespace {

struct ShapeEval {
  std::vector<int> parent;
  std::vector<char> hanging;
};

ShapeEval prepare(const std::vector<int>& parent) {
  ShapeEval ev;
  ev.parent = parent;
  ev.hanging.assign(parent.size(), 1);
  for (int p : parent)
    if (p >= 0) ev.hanging[static_cast<size_t>(p)] = 0;
  return ev;
}

// P2 for an assignment; parent ids precede child ids (preorder shapes).
double eval_p2(const ShapeEval& ev, const std::vector<double>& values) {
  const size_t m = ev.parent.size();
  double total = 0, sq = 0, hang = 0, hang_sq = 0, up_terms = 0;
  double up[16];
  for (size_t e = 0; e < m; ++e) {
    double t = values[e];
    total += t;
    sq += t * t;
    if (ev.hanging[e]) {
      hang += t;
      hang_sq += t * t;
    }
    int p = ev.parent[e];
    up[e] = t + (p < 0 ? 0.0 : up[static_cast<size_t>(p)]);
    up_terms += t * up[e];
  }
  return 0.5 * (-total * total - sq - hang_sq + 2.0 * hang * total + up_terms);
}

}  // namespace

SearchResult best_tree(const std::vector<LengthSymbol>& lengths) {
  const int n = static_cast<int>(lengths.size());
  if (n < 2 || n > 6)
    throw Error(ErrorCode::BudgetExceeded,
                "exhaustive tree search supports 2..6 edges");
  std::vector<TreeShape> shapes = enumerate_rooted_trees(n);
  std::vector<ShapeEval> evals;
  for (const auto& s : shapes) evals.push_back(prepare(s.parent));

  auto for_each_candidate = [&](auto&& fn) {
    std::vector<int> asn(static_cast<size_t>(n));
    for (size_t si = 0; si < shapes.size(); ++si) {
      for (int i = 0; i < n; ++i) asn[static_cast<size_t>(i)] = i;
      std::vector<double> values(static_cast<size_t>(n));
      do {
        for (int e = 0; e < n; ++e)
          values[static_cast<size_t>(e)] =
              lengths[static_cast<size_t>(asn[static_cast<size_t>(e)])].value;
        fn(si, asn, eval_p2(evals[si], values));
      } while (std::next_permutation(asn.begin(), asn.end()));
    }
  };

  double best_value = 0.0;
  bool first = true;
  for_each_candidate([&](size_t, const std::vector<int>&, double v) {
    if (first || v < best_value) {
      best_value = v;
      first = false;
    }
  });

  const double tol = 1e-9 * std::max(1e-300, std::abs(best_value));
  std::set<std::string> seen;
  SearchResult result{RootedTreeView::from_parents(
                          shapes[0].parent,
                          std::vector<LengthSymbol>(lengths.begin(),
                                                    lengths.end())),
                      0.0,
                      {}};
  std::string best_sig;
  for_each_candidate([&](size_t si, const std::vector<int>& asn, double v) {
    if (v > best_value + tol) return;
    std::vector<LengthSymbol> assigned(static_cast<size_t>(n));
    for (int e = 0; e < n; ++e)
      assigned[static_cast<size_t>(e)] =
          lengths[static_cast<size_t>(asn[static_cast<size_t>(e)])];
    RootedTreeView tree =
        RootedTreeView::from_parents(shapes[si].parent, assigned);
    std::string sig = labeled_signature(tree);
    if (!seen.insert(sig).second) return;
    if (best_sig.empty() || sig < best_sig) {
      best_sig = sig;
      result.best = tree;
    }
    result.ties.push_back(std::move(tree));
  });
  result.best_p2 = p2(result.best);
  return result;
}

namespace {

constexpr int kExhaustivePartitionLimit = 50;

struct PartitionBest {
  long long twice_value = 0;  // twice the objective, exact
  std::vector<int> parts;
  bool set = false;

  void offer(long long v, const std::vector<int>& p) {
    if (!set || v < twice_value ||
        (v == twice_value &&
         (p.size() < parts.size() ||
          (p.size() == parts.size() && p < parts)))) {
      twice_value = v;
      parts = p;
      set = true;
    }
  }
};

long long twice_objective(const std::vector<int>& parts, int n) {
  long long sq = 0;
  for (int l : parts) sq += static_cast<long long>(l) * l;
  return sq + static_cast<long long>(parts.size()) * (4LL * n - 2) + n;
}

void enumerate_partitions(int remaining, int max_part, std::vector<int>& cur,
                          int n, PartitionBest& best) {
  if (remaining == 0) {
    best.offer(twice_objective(cur, n), cur);
    return;
  }
  for (int l = std::min(max_part, remaining); l >= 1; --l) {
    cur.push_back(l);
    enumerate_partitions(remaining - l, l, cur, n, best);
    cur.pop_back();
  }
}

}  // namespace

Partition best_partition(int total_edges) {
  if (total_edges < 1)
    throw Error(ErrorCode::PartitionMismatch, "|E| must be >= 1");
  PartitionBest best;
  if (total_edges <= kExhaustivePartitionLimit) {
    std::vector<int> cur;
    enumerate_partitions(total_edges, total_edges, cur, total_edges, best);
  } else {
    // For fixed k the balanced partition minimizes sum l_i^2 (majorization),
    // so scanning balanced candidates over k is value-exact.
    for (int k = 1; k <= total_edges; ++k) {
      int q = total_edges / k, r = total_edges % k;
      std::vector<int> parts;
      for (int i = 0; i < r; ++i) parts.push_back(q + 1);
      for (int i = r; i < k; ++i) parts.push_back(q);
      best.offer(twice_objective(parts, total_edges), parts);
    }
  }
  return Partition{best.parts};
}

std::vector<std::pair<int, int>> root_degree_growth_scan(int d_max,
                                                         int scan_bound) {
  if (d_max < 1 || d_max > 8)
    throw Error(ErrorCode::BudgetExceeded, "d_max must be in 1..8");
  std::vector<std::pair<int, int>> table;
  for (int n = 1; n <= scan_bound; ++n)
    table.push_back({n, static_cast<int>(best_partition(n).parts.size())});
  return table;
}

}  // namespace walkcount
