#include "walkcount/simulate.hpp"

#include <algorithm>
#include <queue>
#include <unordered_set>

namespace walkcount {

namespace {

TimeVector advance(const TimeVector& t, int e, const MetricGraph& g) {
  TimeVector out = tv_add_edge(t, e, g);
  // Canonical value: recomputing from counts makes the cached value
  // independent of the path that produced the vector.
  out.value = tv_recompute_value(out, g);
  return out;
}

struct HeapItem {
  TimeVector time;
  int vertex;
};

struct HeapOrder {
  // std::priority_queue is a max-heap; invert for ascending pops.
  bool operator()(const HeapItem& a, const HeapItem& b) const {
    int c = tv_compare(a.time, b.time);
    if (c != 0) return c > 0;
    return a.vertex > b.vertex;
  }
};

}  // namespace

EmissionSets emission_sets(const MetricGraph& g, int source, double horizon,
                           std::int64_t budget) {
  validate(g);
  if (source < 0 || source >= g.num_vertices)
    throw Error(ErrorCode::UnknownVertex, "source out of range");
  if (!(horizon > 0.0))
    throw Error(ErrorCode::Usage, "horizon must be positive");

  std::vector<std::unordered_set<TimeVector, TimeVectorHash>> sets(
      static_cast<size_t>(g.num_vertices));
  std::priority_queue<HeapItem, std::vector<HeapItem>, HeapOrder> heap;
  std::vector<std::vector<int>> inc(static_cast<size_t>(g.num_vertices));
  for (int v = 0; v < g.num_vertices; ++v) inc[static_cast<size_t>(v)] = incident_edges(g, v);

  std::int64_t inserted = 1;
  TimeVector zero = tv_zero(g.num_edges());
  sets[static_cast<size_t>(source)].insert(zero);
  heap.push({zero, source});

  while (!heap.empty()) {
    HeapItem item = heap.top();
    heap.pop();
    for (int e : inc[static_cast<size_t>(item.vertex)]) {
      int w = other_endpoint(g, e, item.vertex);
      TimeVector nt = advance(item.time, e, g);
      if (nt.value > horizon) continue;
      if (sets[static_cast<size_t>(w)].insert(nt).second) {
        if (++inserted > budget)
          throw Error(ErrorCode::HorizonTooLarge,
                      "projected event count exceeds budget");
        heap.push({std::move(nt), w});
      }
    }
  }

  EmissionSets out;
  out.horizon = horizon;
  out.per_vertex.resize(static_cast<size_t>(g.num_vertices));
  for (int v = 0; v < g.num_vertices; ++v) {
    auto& dst = out.per_vertex[static_cast<size_t>(v)];
    dst.assign(sets[static_cast<size_t>(v)].begin(),
               sets[static_cast<size_t>(v)].end());
    std::sort(dst.begin(), dst.end(), [](const TimeVector& a, const TimeVector& b) {
      return tv_compare(a, b) < 0;
    });
  }
  return out;
}

NProfile n_profile(const MetricGraph& g, int source, double horizon,
                   std::int64_t budget) {
  EmissionSets sets = emission_sets(g, source, horizon, budget);

  // Sweep events: each emitted point contributes +1 at its emission time
  // and -1 at its arrival time (arrivals beyond the horizon never fire).
  struct Event {
    TimeVector time;
    std::int32_t delta;  // +1 start, -1 end
  };
  std::vector<Event> events;
  for (int v = 0; v < g.num_vertices; ++v) {
    std::vector<int> inc = incident_edges(g, v);
    for (const TimeVector& s : sets.per_vertex[static_cast<size_t>(v)]) {
      for (int e : inc) {
        events.push_back({s, +1});
        TimeVector end = tv_add_edge(s, e, g);
        end.value = tv_recompute_value(end, g);
        if (end.value <= horizon) events.push_back({std::move(end), -1});
      }
    }
  }
  std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
    return tv_compare(a.time, b.time) < 0;
  });

  NProfile profile;
  profile.horizon = horizon;
  std::int64_t running = 0;
  size_t i = 0;
  while (i < events.size()) {
    size_t j = i;
    std::int64_t delta = 0;
    while (j < events.size() && tv_compare(events[j].time, events[i].time) == 0)
      delta += events[j++].delta;
    Breakpoint bp;
    bp.time = events[i].time;
    bp.left = running;
    bp.right = running + delta;
    running = bp.right;
    profile.breakpoints.push_back(std::move(bp));
    i = j;
  }
  return profile;
}

double n_at(const NProfile& profile, double T) {
  if (!(T > 0.0)) throw Error(ErrorCode::Usage, "T must be positive");
  if (T > profile.horizon)
    throw Error(ErrorCode::BeyondHorizon, "T beyond profile horizon");
  // Last breakpoint with value <= T.
  auto it = std::upper_bound(
      profile.breakpoints.begin(), profile.breakpoints.end(), T,
      [](double t, const Breakpoint& b) { return t < b.time.value; });
  if (it == profile.breakpoints.begin()) return 0.0;
  const Breakpoint& b = *(it - 1);
  if (b.time.value == T) return b.midpoint();
  return static_cast<double>(b.right);
}

std::int64_t brute_force_points(const MetricGraph& g, int source, double T,
                                std::int64_t budget) {
  validate(g);
  if (source < 0 || source >= g.num_vertices)
    throw Error(ErrorCode::UnknownVertex, "source out of range");
  if (!(T > 0.0)) throw Error(ErrorCode::Usage, "T must be positive");

  // A point is (emitting vertex, edge, emission time); identical records
  // merge. Growth is driven purely by arrivals strictly before T.
  struct Record {
    int vertex;
    int edge;
    TimeVector time;
    bool operator==(const Record& o) const {
      return vertex == o.vertex && edge == o.edge && time == o.time;
    }
  };
  struct RecordHash {
    size_t operator()(const Record& r) const {
      return TimeVectorHash{}(r.time) * 1000003u +
             static_cast<size_t>(r.vertex) * 131u +
             static_cast<size_t>(r.edge);
    }
  };

  std::unordered_set<Record, RecordHash> records;
  std::vector<Record> pending;
  TimeVector zero = tv_zero(g.num_edges());
  for (int e : incident_edges(g, source)) {
    Record r{source, e, zero};
    if (records.insert(r).second) pending.push_back(r);
  }
  std::int64_t alive = 0;
  while (!pending.empty()) {
    Record r = pending.back();
    pending.pop_back();
    if (r.time.value == T)
      throw Error(ErrorCode::TAtEvent, "T coincides with an event time");
    TimeVector arrival = tv_add_edge(r.time, r.edge, g);
    arrival.value = tv_recompute_value(arrival, g);
    if (arrival.value == T)
      throw Error(ErrorCode::TAtEvent, "T coincides with an event time");
    if (r.time.value < T && T < arrival.value) ++alive;
    if (arrival.value < T) {
      int w = other_endpoint(g, r.edge, r.vertex);
      for (int f : incident_edges(g, w)) {
        Record nr{w, f, arrival};
        if (records.insert(nr).second) {
          if (static_cast<std::int64_t>(records.size()) > budget)
            throw Error(ErrorCode::HorizonTooLarge,
                        "point record count exceeds budget");
          pending.push_back(std::move(nr));
        }
      }
    }
  }
  return alive;
}

void write_profile_csv(const NProfile& profile, std::ostream& out) {
  out << "value,left,right,midpoint,symbolic_time\n";
  for (const Breakpoint& b : profile.breakpoints) {
    out << format_double(b.time.value) << ',' << b.left << ',' << b.right
        << ',' << format_double(b.midpoint()) << ',' << tv_to_string(b.time)
        << '\n';
  }
}

}  // namespace walkcount
