#include "walkcount/asymptotics.hpp"

#include <cmath>

namespace walkcount {

namespace {

// Kahan-compensated accumulator.
class Sum {
 public:
  void add(double x) {
    double y = x - comp_;
    double t = sum_ + y;
    comp_ = (t - sum_) - y;
    sum_ = t;
  }
  double get() const { return sum_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

double n1_coefficient(const MetricGraph& g) {
  validate(g);
  const int m = g.num_edges();
  if (m < 1) throw Error(ErrorCode::EmptyLengths, "graph has no edges");
  Sum sum;
  double prod = 1.0;
  for (int e = 0; e < m; ++e) {
    sum.add(g.length(e));
    prod *= g.length(e);
  }
  return std::ldexp(1.0, 2 - g.num_vertices) / factorial(m - 1) * sum.get() /
         prod;
}

std::pair<double, double> split_s_t(const RootedTreeView& tree) {
  const int m = tree.num_edges();
  if (m < 2) throw Error(ErrorCode::TooFewEdges, "need >= 2 edges");
  Sum total, squares, hang, hang_sq, up_terms;
  for (int e = 0; e < m; ++e) {
    double t = tree.length(e);
    total.add(t);
    squares.add(t * t);
    if (tree.is_hanging(e)) {
      hang.add(t);
      hang_sq.add(t * t);
    }
  }
  // sum_e t_e * sum_{f in up(e)} t_f, with the up-sums shared down the tree.
  std::vector<double> up_sum(static_cast<size_t>(m), 0.0);
  std::vector<int> order(static_cast<size_t>(m));
  for (int e = 0; e < m; ++e) order[static_cast<size_t>(e)] = e;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return tree.depth(a) < tree.depth(b);
  });
  for (int e : order) {
    int p = tree.parent(e);
    up_sum[static_cast<size_t>(e)] =
        tree.length(e) + (p < 0 ? 0.0 : up_sum[static_cast<size_t>(p)]);
  }
  for (int e = 0; e < m; ++e)
    up_terms.add(tree.length(e) * up_sum[static_cast<size_t>(e)]);

  double s_part = -total.get() * total.get() - squares.get();
  double t_part =
      -hang_sq.get() + 2.0 * hang.get() * total.get() + up_terms.get();
  return {s_part, t_part};
}

double p2(const RootedTreeView& tree) {
  auto [s, t] = split_s_t(tree);
  return 0.5 * (s + t);
}

double n2_coefficient(const RootedTreeView& tree) {
  const int m = tree.num_edges();
  if (m < 2) throw Error(ErrorCode::TooFewEdges, "need >= 2 edges");
  double prod = 1.0;
  for (int e = 0; e < m; ++e) prod *= tree.length(e);
  return p2(tree) / (factorial(m - 2) * std::ldexp(1.0, m - 2) * prod);
}

double partition_objective(const std::vector<int>& partition,
                           int total_edges) {
  long long sum = 0, sq = 0;
  for (int l : partition) {
    if (l < 1) throw Error(ErrorCode::PartitionMismatch, "parts must be >= 1");
    sum += l;
    sq += static_cast<long long>(l) * l;
  }
  if (sum != total_edges)
    throw Error(ErrorCode::PartitionMismatch, "parts must sum to |E|");
  const long long k = static_cast<long long>(partition.size());
  // Exact: twice the objective is integral.
  long long twice = sq + k * (4LL * total_edges - 2) + total_edges;
  return 0.5 * static_cast<double>(twice);
}

std::pair<double, double> fit_leading(const NProfile& profile, int num_edges) {
  const double lo = 0.5 * profile.horizon;
  const double hi = profile.horizon;
  const auto& bps = profile.breakpoints;

  long long in_window = 0;
  for (const Breakpoint& b : bps)
    if (b.time.value >= lo && b.time.value <= hi) ++in_window;
  if (in_window < 200)
    throw Error(ErrorCode::InsufficientData,
                "need >= 200 breakpoints in the fit window");

  // Sample the flat segment between consecutive breakpoints at its midpoint.
  const double p = num_edges - 1;
  const double q = num_edges - 2;
  long double a11 = 0, a12 = 0, a22 = 0, r1 = 0, r2 = 0;
  auto accumulate = [&](double t0, double t1, double y) {
    double tm = 0.5 * (t0 + t1);
    if (tm < lo || tm > hi || t1 <= t0) return;
    long double f1 = std::pow(static_cast<long double>(tm), p);
    long double f2 = std::pow(static_cast<long double>(tm), q);
    a11 += f1 * f1;
    a12 += f1 * f2;
    a22 += f2 * f2;
    r1 += f1 * y;
    r2 += f2 * y;
  };
  for (size_t i = 0; i + 1 < bps.size(); ++i)
    accumulate(bps[i].time.value, bps[i + 1].time.value,
               static_cast<double>(bps[i].right));
  if (!bps.empty())
    accumulate(bps.back().time.value, hi,
               static_cast<double>(bps.back().right));

  long double det = a11 * a22 - a12 * a12;
  if (det == 0)
    throw Error(ErrorCode::InsufficientData, "degenerate fit system");
  long double a = (r1 * a22 - r2 * a12) / det;
  long double b = (a11 * r2 - a12 * r1) / det;
  return {static_cast<double>(a), static_cast<double>(b)};
}

CoefficientReport coefficient_report(const MetricGraph& g) {
  CoefficientReport rep;
  rep.num_edges = g.num_edges();
  rep.n1 = n1_coefficient(g);
  if (g.num_edges() == g.num_vertices - 1 && g.source && g.num_edges() >= 2) {
    RootedTreeView tree(g, *g.source);
    auto [s, t] = split_s_t(tree);
    rep.s_part = s;
    rep.t_part = t;
    rep.p2 = 0.5 * (s + t);
    rep.n2 = n2_coefficient(tree);
  } else {
    Sum total, squares;
    for (int e = 0; e < g.num_edges(); ++e) {
      total.add(g.length(e));
      squares.add(g.length(e) * g.length(e));
    }
    rep.s_part = -total.get() * total.get() - squares.get();
  }
  return rep;
}

CoefficientReport coefficient_report(const RootedTreeView& tree) {
  return coefficient_report(tree.graph());
}

}  // namespace walkcount
