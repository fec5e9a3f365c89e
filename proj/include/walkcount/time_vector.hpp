#ifndef WALKCOUNT_TIME_VECTOR_HPP_
#define WALKCOUNT_TIME_VECTOR_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "walkcount/graph.hpp"

namespace walkcount {

// Event time as nonnegative integer multiples of the edge lengths. Because
// the t_e are treated as Q-linearly independent, two times are equal exactly
// when their count vectors are equal; the cached numeric value serves
// ordering and horizon checks.
struct TimeVector {
  std::vector<std::int32_t> counts;  // indexed by edge id, fixed basis size
  double value = 0.0;

  bool operator==(const TimeVector& o) const { return counts == o.counts; }
  bool operator!=(const TimeVector& o) const { return !(*this == o); }
};

TimeVector tv_zero(int basis_size);

// counts[e] += 1 and value += length(e).
TimeVector tv_add_edge(const TimeVector& t, int e, const MetricGraph& g);

// -1 / 0 / +1. Equal iff count maps identical; otherwise ordered by numeric
// value with a lexicographic count tie-break (commensurable user lengths);
// the tie-break path warns once per process.
int tv_compare(const TimeVector& a, const TimeVector& b);

double tv_value(const TimeVector& t);

// Debug form "k1*t1 + k2*t2" (zero counts omitted; "0" when empty).
std::string tv_to_string(const TimeVector& t);

struct TimeVectorHash {
  size_t operator()(const TimeVector& t) const {
    size_t h = 0xcbf29ce484222325ull;
    for (std::int32_t c : t.counts) {
      h ^= static_cast<size_t>(static_cast<std::uint32_t>(c));
      h *= 0x100000001b3ull;
    }
    return h;
  }
};

// Recompute value from counts; used by debug/test consistency checks.
double tv_recompute_value(const TimeVector& t, const MetricGraph& g);

}  // namespace walkcount

#endif  // WALKCOUNT_TIME_VECTOR_HPP_
