#include "walkcount/time_vector.hpp"

#include <atomic>
#include <cstdio>
#include <limits>
#include <sstream>

namespace walkcount {

TimeVector tv_zero(int basis_size) {
  TimeVector t;
  t.counts.assign(static_cast<size_t>(basis_size), 0);
  return t;
}

TimeVector tv_add_edge(const TimeVector& t, int e, const MetricGraph& g) {
  if (e < 0 || e >= g.num_edges() ||
      t.counts.size() != static_cast<size_t>(g.num_edges()))
    throw Error(ErrorCode::UnknownEdge, "edge not in ambient basis");
  TimeVector out = t;
  if (out.counts[static_cast<size_t>(e)] ==
      std::numeric_limits<std::int32_t>::max())
    throw Error(ErrorCode::HorizonTooLarge, "time vector count overflow");
  out.counts[static_cast<size_t>(e)] += 1;
  out.value += g.length(e);
  return out;
}

namespace {
std::atomic<bool> warned_ties{false};
}

int tv_compare(const TimeVector& a, const TimeVector& b) {
  if (a.counts.size() != b.counts.size())
    throw Error(ErrorCode::BasisMismatch, "time vectors over different bases");
  if (a.counts == b.counts) return 0;
  if (a.value < b.value) return -1;
  if (a.value > b.value) return 1;
  // Distinct vectors with identical numeric value: commensurable lengths.
  if (!warned_ties.exchange(true))
    std::fprintf(stderr,
                 "walkcount: warning: numerically equal but symbolically "
                 "distinct event times; lengths are commensurable, ordering "
                 "falls back to lexicographic\n");
  return a.counts < b.counts ? -1 : 1;
}

double tv_value(const TimeVector& t) { return t.value; }

std::string tv_to_string(const TimeVector& t) {
  std::ostringstream ss;
  bool first = true;
  for (size_t e = 0; e < t.counts.size(); ++e) {
    if (t.counts[e] == 0) continue;
    if (!first) ss << " + ";
    ss << t.counts[e] << "*t" << e + 1;
    first = false;
  }
  if (first) ss << "0";
  return ss.str();
}

double tv_recompute_value(const TimeVector& t, const MetricGraph& g) {
  double sum = 0.0, comp = 0.0;
  for (size_t e = 0; e < t.counts.size(); ++e) {
    double term = t.counts[e] * g.length(static_cast<int>(e)) - comp;
    double next = sum + term;
    comp = (next - sum) - term;
    sum = next;
  }
  return sum;
}

}  // namespace walkcount
