#ifndef WALKCOUNT_SIMULATE_HPP_
#define WALKCOUNT_SIMULATE_HPP_

#include <cstdint>
#include <ostream>

#include "walkcount/time_vector.hpp"

namespace walkcount {

inline constexpr std::int64_t kDefaultEventBudget = 10'000'000;

// Per-vertex emission times: 0 at the source, closed under adding an
// incident edge length while the numeric value stays within the horizon.
struct EmissionSets {
  std::vector<std::vector<TimeVector>> per_vertex;  // each sorted ascending
  double horizon = 0.0;
};

// One discontinuity of N: exact time plus one-sided limits. Between
// consecutive breakpoints N is the previous right_value.
struct Breakpoint {
  TimeVector time;
  std::int64_t left = 0;
  std::int64_t right = 0;
  double midpoint() const { return 0.5 * static_cast<double>(left + right); }
};

struct NProfile {
  std::vector<Breakpoint> breakpoints;  // ascending, first at time 0
  double horizon = 0.0;
};

EmissionSets emission_sets(const MetricGraph& g, int source, double horizon,
                           std::int64_t budget = kDefaultEventBudget);

// The counting function N(T) as a step profile over (0, horizon]. Points
// emitted before the horizon but still in flight are counted.
NProfile n_profile(const MetricGraph& g, int source, double horizon,
                   std::int64_t budget = kDefaultEventBudget);

// Step value for generic T; (left+right)/2 when T hits a breakpoint value.
double n_at(const NProfile& profile, double T);

// Independent oracle: tracks individual points as (emitting vertex, edge,
// emission time) records with dedup of identical records. T must be generic.
std::int64_t brute_force_points(const MetricGraph& g, int source, double T,
                                std::int64_t budget = kDefaultEventBudget);

// CSV rows: value,left,right,midpoint,symbolic_time.
void write_profile_csv(const NProfile& profile, std::ostream& out);

}  // namespace walkcount

#endif  // WALKCOUNT_SIMULATE_HPP_
