#ifndef WALKCOUNT_ASYMPTOTICS_HPP_
#define WALKCOUNT_ASYMPTOTICS_HPP_

#include <optional>
#include <utility>

#include "walkcount/rooted_tree.hpp"
#include "walkcount/simulate.hpp"

namespace walkcount {

struct CoefficientReport {
  int num_edges = 0;
  double n1 = 0.0;
  std::optional<double> n2;      // trees with |E| >= 2 only
  std::optional<double> p2;
  double s_part = 0.0;           // graph-independent symmetric part
  std::optional<double> t_part;  // structural part; 2*p2 = s_part + t_part
};

// Leading coefficient of N(T) ~ n1 * T^{|E|-1} for any connected graph.
double n1_coefficient(const MetricGraph& g);

// Second-coefficient numerator for a rooted tree, |E| >= 2. The sum over
// pairs (e,f) of edges is taken over ordered pairs including e = f, i.e.
// (sum t)^2; that convention only shifts the graph-independent part.
double p2(const RootedTreeView& tree);

// n2 = p2 / ((|E|-2)! * 2^{|E|-2} * prod t_e).
double n2_coefficient(const RootedTreeView& tree);

// (s_part, t_part) with s_part + t_part == 2 * p2. s_part depends only on
// the length multiset; t_part only on hanging-edge membership and up-chains.
std::pair<double, double> split_s_t(const RootedTreeView& tree);

// t_part of the star of chains (l_1,...,l_k) at unit lengths:
// (l_1^2+...+l_k^2)/2 + k(2|E|-1) + |E|/2.
double partition_objective(const std::vector<int>& partition, int total_edges);

// Least-squares fit of segment midpoints against a*T^{m-1} + b*T^{m-2} over
// [horizon/2, horizon]; needs >= 200 breakpoints in the window.
std::pair<double, double> fit_leading(const NProfile& profile, int num_edges);

CoefficientReport coefficient_report(const MetricGraph& g);
CoefficientReport coefficient_report(const RootedTreeView& tree);

}  // namespace walkcount

#endif  // WALKCOUNT_ASYMPTOTICS_HPP_
