#include <doctest.h>

#include <sstream>

#include "walkcount/instance_gen.hpp"
#include "walkcount/simulate.hpp"

using namespace walkcount;

namespace {

MetricGraph single_edge(double t = 1.0) {
  MetricGraph g;
  g.num_vertices = 2;
  g.edges = {{0, 1}};
  g.lengths = make_symbols({t});
  g.source = 0;
  return g;
}

MetricGraph chain2(double t1 = 1.0, double t2 = 1.3) {
  MetricGraph g;
  g.num_vertices = 3;
  g.edges = {{0, 1}, {1, 2}};
  g.lengths = make_symbols({t1, t2});
  g.source = 0;
  return g;
}

MetricGraph star2(double t1 = 1.0, double t2 = 1.3) {
  MetricGraph g;
  g.num_vertices = 3;
  g.edges = {{0, 1}, {0, 2}};
  g.lengths = make_symbols({t1, t2});
  g.source = 0;
  return g;
}

std::vector<double> values_of(const std::vector<TimeVector>& ts) {
  std::vector<double> out;
  for (const auto& t : ts) out.push_back(t.value);
  return out;
}

}  // namespace

TEST_CASE("emission sets on a single bouncing edge") {
  EmissionSets sets = emission_sets(single_edge(), 0, 3.5);
  CHECK(values_of(sets.per_vertex[0]) == std::vector<double>{0.0, 2.0});
  CHECK(values_of(sets.per_vertex[1]) == std::vector<double>{1.0, 3.0});
}

TEST_CASE("emission sets on a 2-star before anything returns") {
  EmissionSets sets = emission_sets(star2(), 0, 1.99);
  CHECK(values_of(sets.per_vertex[0]) == std::vector<double>{0.0});
  CHECK(sets.per_vertex[1].size() == 1);
  CHECK(sets.per_vertex[2].size() == 1);
}

TEST_CASE("emission sets reach the chain end") {
  EmissionSets sets = emission_sets(chain2(), 0, 2.31);
  auto far = values_of(sets.per_vertex[2]);
  CHECK(std::find(far.begin(), far.end(), 2.3) != far.end());
}

TEST_CASE("emission closure holds post-hoc") {
  Rng rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    MetricGraph g = random_connected_graph(1 + trial % 4, rng);
    double horizon = 8.0;
    EmissionSets sets = emission_sets(g, *g.source, horizon);
    for (int v = 0; v < g.num_vertices; ++v) {
      for (const TimeVector& s : sets.per_vertex[static_cast<size_t>(v)]) {
        for (int e : incident_edges(g, v)) {
          TimeVector next = tv_add_edge(s, e, g);
          next.value = tv_recompute_value(next, g);
          if (next.value > horizon) continue;
          int w = other_endpoint(g, e, v);
          const auto& dst = sets.per_vertex[static_cast<size_t>(w)];
          CHECK(std::find(dst.begin(), dst.end(), next) != dst.end());
        }
      }
    }
  }
}

TEST_CASE("single edge keeps exactly one point") {
  NProfile prof = n_profile(single_edge(), 0, 10.0);
  CHECK(n_at(prof, 0.5) == 1.0);
  CHECK(n_at(prof, 7.25) == 1.0);
  // At the arrival instant both one-sided limits are 1.
  CHECK(n_at(prof, 1.0) == 1.0);
}

TEST_CASE("2-edge chain profile") {
  NProfile prof = n_profile(chain2(), 0, 5.0);
  // Before the first arrival N = deg(source) = 1.
  CHECK(n_at(prof, 0.5) == 1.0);
  // Arrival at the middle vertex (valency 2) emits 2 points.
  CHECK(n_at(prof, 1.1) == 2.0);
  // Exactly at t1: left limit 1, right limit 2.
  CHECK(n_at(prof, 1.0) == 1.5);
}

TEST_CASE("2-star re-emission overlaps the slower point") {
  NProfile prof = n_profile(star2(), 0, 5.0);
  CHECK(n_at(prof, 2.05) == 3.0);
}

TEST_CASE("brute force oracle agrees with the profile") {
  Rng rng(17);
  for (int trial = 0; trial < 8; ++trial) {
    MetricGraph g = trial == 0 ? make_complete(3, random_lengths(3, rng))
                               : random_connected_graph(1 + trial % 4, rng);
    double max_len = 0.0;
    for (int e = 0; e < g.num_edges(); ++e)
      max_len = std::max(max_len, g.length(e));
    double horizon = 10.0 * max_len;
    NProfile prof = n_profile(g, *g.source, horizon);
    std::uniform_real_distribution<double> pick(horizon / 100.0, horizon);
    int done = 0;
    while (done < 20) {
      double T = pick(rng);
      try {
        std::int64_t oracle = brute_force_points(g, *g.source, T);
        CHECK(n_at(prof, T) == static_cast<double>(oracle));
        ++done;
      } catch (const Error& e) {
        REQUIRE(e.code() == ErrorCode::TAtEvent);
      }
    }
  }
}

TEST_CASE("profiles are monotone with the right initial value") {
  Rng rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    MetricGraph g = random_connected_graph(1 + trial % 4, rng);
    NProfile prof = n_profile(g, *g.source, 9.0);
    REQUIRE(!prof.breakpoints.empty());
    CHECK(prof.breakpoints[0].time.value == 0.0);
    CHECK(prof.breakpoints[0].right == degree(g, *g.source));
    for (size_t i = 0; i < prof.breakpoints.size(); ++i) {
      const auto& b = prof.breakpoints[i];
      CHECK(b.right >= b.left);
      if (i + 1 < prof.breakpoints.size())
        CHECK(prof.breakpoints[i + 1].left == b.right);
    }
  }
}

TEST_CASE("deterministic CSV output") {
  std::ostringstream a, b;
  write_profile_csv(n_profile(chain2(), 0, 8.0), a);
  write_profile_csv(n_profile(chain2(), 0, 8.0), b);
  CHECK(a.str() == b.str());
  CHECK(a.str().substr(0, 40) == "value,left,right,midpoint,symbolic_time\n");
}

TEST_CASE("event budget guard") {
  CHECK_THROWS_AS(n_profile(chain2(), 0, 100.0, /*budget=*/50), Error);
}

TEST_CASE("brute force rejects event-coincident T") {
  CHECK_THROWS_AS(brute_force_points(single_edge(), 0, 2.0), Error);
}

TEST_CASE("n_at domain") {
  NProfile prof = n_profile(single_edge(), 0, 4.0);
  CHECK_THROWS_AS(n_at(prof, 4.5), Error);
}
