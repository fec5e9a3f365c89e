#include "walkcount/verify.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include "walkcount/asymptotics.hpp"
#include "walkcount/instance_gen.hpp"
#include "walkcount/search.hpp"
#include "walkcount/simulate.hpp"
#include "walkcount/surgery.hpp"

namespace walkcount {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string show_parts(const std::vector<int>& parts) {
  std::ostringstream ss;
  ss << "(";
  for (size_t i = 0; i < parts.size(); ++i)
    ss << (i ? "," : "") << parts[i];
  ss << ")";
  return ss.str();
}

// Relative agreement with a unit floor so that exact zeros compare cleanly.
bool close_rel(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

CheckResult check_partition_24() {
  CheckResult r{"1 partition-24", false, ""};
  auto start = Clock::now();
  Partition p = best_partition(24);
  double objective = partition_objective(p.parts, 24);
  double elapsed = seconds_since(start);
  std::ostringstream ss;
  ss << "best " << show_parts(p.parts) << " objective "
     << format_double(objective) << " in " << format_double(elapsed) << "s";
  r.pass = p.parts == std::vector<int>{8, 8, 8} && objective == 249.0 &&
           elapsed < 1.0;
  r.detail = ss.str();
  return r;
}

CheckResult check_small_e_minimality(Rng& rng) {
  CheckResult r{"2 small-E-chain", false, ""};
  auto start = Clock::now();
  int failures = 0;
  const int trials = 1000;
  for (int i = 0; i < trials; ++i) {
    int n = 2 + static_cast<int>(i % 4);  // 2..5 round-robin
    SearchResult res = best_tree(random_lengths(n, rng));
    if (!res.best.is_chain()) ++failures;
  }
  double elapsed = seconds_since(start);
  std::ostringstream ss;
  ss << trials << " tuples, " << failures << " non-chain winners, "
     << format_double(elapsed) << "s";
  r.pass = failures == 0 && elapsed < 120.0;
  r.detail = ss.str();
  return r;
}

RootedTreeView tree_with_t1_move(Rng& rng, T1Move* move) {
  for (;;) {
    std::uniform_int_distribution<int> pick_n(2, 8);
    RootedTreeView tree = random_tree(pick_n(rng), rng);
    if (auto m = random_t1_move(tree, rng)) {
      *move = *m;
      return tree;
    }
  }
}

RootedTreeView tree_with_t2_move(Rng& rng, T2Move* move) {
  for (;;) {
    std::uniform_int_distribution<int> pick_n(3, 8);
    RootedTreeView tree = random_tree(pick_n(rng), rng);
    if (auto m = random_t2_move(tree, rng)) {
      *move = *m;
      return tree;
    }
  }
}

CheckResult check_t1_delta(Rng& rng) {
  CheckResult r{"3 t1-delta", false, ""};
  const int trials = 1000;
  int bad = 0;
  for (int i = 0; i < trials; ++i) {
    T1Move move;
    RootedTreeView tree = tree_with_t1_move(rng, &move);
    double formula = t1_delta(tree, move);
    RootedTreeView after = t1_apply(tree, move);
    double direct = 2.0 * (p2(tree) - p2(after));
    // D \ l emptiness, structurally.
    std::vector<char> excl(static_cast<size_t>(tree.num_edges()), 0);
    excl[static_cast<size_t>(move.b)] = 1;
    for (int f = tree.parent(move.b); f >= 0 && f != move.e;
         f = tree.parent(f))
      excl[static_cast<size_t>(f)] = 1;
    bool d_minus_l_empty = true;
    for (int f : tree.descendants(move.e))
      if (!excl[static_cast<size_t>(f)]) d_minus_l_empty = false;

    const double tol = 1e-9 * std::max(1.0, std::abs(p2(tree)));
    bool ok = close_rel(formula, direct, 1e-9);
    ok = ok && direct >= -tol;
    ok = ok && (d_minus_l_empty ? std::abs(direct) <= tol : direct > tol);
    // Structural conservation and hanging-set preservation.
    ok = ok && after.num_edges() == tree.num_edges();
    ok = ok && after.hanging_edges() == tree.hanging_edges();
    if (!ok) ++bad;
  }
  r.pass = bad == 0;
  r.detail = std::to_string(trials) + " moves, " + std::to_string(bad) +
             " violations";
  return r;
}

CheckResult check_t2_delta(Rng& rng) {
  CheckResult r{"4 t2-delta", false, ""};
  const int trials = 1000;
  int bad = 0, formula_checked = 0;
  for (int i = 0; i < trials; ++i) {
    T2Move move;
    RootedTreeView tree = tree_with_t2_move(rng, &move);
    RootedTreeView after = t2_apply(tree, move);
    double direct = 2.0 * (p2(tree) - p2(after));
    const double tol = 1e-9 * std::max(1.0, std::abs(p2(tree)));
    bool ok = direct > tol;
    if (!tree.is_hanging(move.d)) {
      ++formula_checked;
      ok = ok && close_rel(t2_delta(tree, move), direct, 1e-9);
    }
    if (!ok) ++bad;
  }
  r.pass = bad == 0 && formula_checked > 0;
  r.detail = std::to_string(trials) + " moves (" +
             std::to_string(formula_checked) + " formula-checked), " +
             std::to_string(bad) + " violations";
  return r;
}

CheckResult check_surgery_endpoint(Rng& rng) {
  CheckResult r{"5 surgery-endpoint", false, ""};
  const int trials = 500;
  int bad = 0;
  for (int i = 0; i < trials; ++i) {
    std::uniform_int_distribution<int> pick_n(2, 8);
    RootedTreeView tree = random_tree(pick_n(rng), rng);
    RootedTreeView out = minimize_by_surgery(tree);
    bool ok = out.is_star_of_chains();
    ok = ok && p2(out) <= p2(tree) + 1e-9 * std::max(1.0, std::abs(p2(tree)));
    if (ok && out.root_degree() >= 2)
      for (int part : out.chain_partition())
        if (part < 2) ok = false;
    if (!ok) ++bad;
  }
  r.pass = bad == 0;
  r.detail = std::to_string(trials) + " trees, " + std::to_string(bad) +
             " violations";
  return r;
}

CheckResult check_closed_form() {
  CheckResult r{"6 closed-form", false, ""};
  int checked = 0, bad = 0;
  for (int n = 2; n <= 12; ++n) {
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
      if (remaining == 0) {
        auto tree = make_star_of_chains(
            cur, make_symbols(std::vector<double>(static_cast<size_t>(n), 1.0)));
        double t_part = split_s_t(tree).second;
        if (t_part != partition_objective(cur, n)) ++bad;
        ++checked;
        return;
      }
      for (int l = std::min(max_part, remaining); l >= 1; --l) {
        cur.push_back(l);
        self(self, remaining - l, l);
        cur.pop_back();
      }
    };
    rec(rec, n, n);
  }
  r.pass = bad == 0 && checked > 0;
  r.detail = std::to_string(checked) + " partitions, " + std::to_string(bad) +
             " exact-equality failures";
  return r;
}

CheckResult check_n1_empirical() {
  CheckResult r{"7 n1-empirical", false, ""};
  auto start = Clock::now();
  std::ostringstream ss;
  bool ok = true;

  {  // single edge: N is exactly 1
    RootedTreeView t = make_chain(make_symbols({1.0}), 0);
    NProfile prof = n_profile(t.graph(), t.root(), 600.0);
    auto [a, b] = fit_leading(prof, 1);
    ok = ok && std::abs(a - 1.0) <= 1e-9;
    ss << "single a=" << format_double(a);
  }
  const std::vector<std::vector<double>> chains = {
      {1.0, 1.3100947012479532},
      {1.0, 1.0417342871953322, 0.9612848194903711}};
  const std::vector<double> horizons = {300.0, 55.0};
  for (size_t i = 0; i < chains.size(); ++i) {
    RootedTreeView t = make_chain(make_symbols(chains[i]), 0);
    NProfile prof = n_profile(t.graph(), t.root(), horizons[i]);
    ok = ok && prof.breakpoints.size() >= 10000;
    auto [a, b] = fit_leading(prof, static_cast<int>(chains[i].size()));
    double expected = n1_coefficient(t.graph());
    double rel = std::abs(a - expected) / std::abs(expected);
    ok = ok && rel <= 0.05;
    ss << "; |E|=" << chains[i].size() << " n1_est=" << format_double(a)
       << " n1=" << format_double(expected)
       << " rel=" << format_double(rel)
       << " bps=" << prof.breakpoints.size();
  }
  double elapsed = seconds_since(start);
  ok = ok && elapsed < 60.0;
  ss << "; " << format_double(elapsed) << "s";
  r.pass = ok;
  r.detail = ss.str();
  return r;
}

CheckResult check_n2_empirical() {
  CheckResult r{"8 n2-empirical", false, ""};
  RootedTreeView t = make_chain(make_symbols({1.0, 2.718281828459045}), 0);
  NProfile prof = n_profile(t.graph(), t.root(), 600.0);
  auto [a, b] = fit_leading(prof, 2);
  double expected = n2_coefficient(t);
  double rel = std::abs(b - expected) / std::abs(expected);
  r.pass = rel <= 0.20;
  r.detail = "n2_est=" + format_double(b) + " n2=" + format_double(expected) +
             " rel=" + format_double(rel);
  return r;
}

CheckResult check_oracle_equivalence(Rng& rng) {
  CheckResult r{"9 oracle-equivalence", false, ""};
  int mismatches = 0, graphs = 0, samples = 0;
  auto run_graph = [&](const MetricGraph& g) {
    ++graphs;
    double max_len = 0.0;
    for (int e = 0; e < g.num_edges(); ++e)
      max_len = std::max(max_len, g.length(e));
    double horizon = 12.0 * max_len;
    const int src = g.source.value_or(0);
    NProfile prof = n_profile(g, src, horizon);
    std::uniform_real_distribution<double> pick_t(horizon * 1e-6, horizon);
    for (int s = 0; s < 200; ++s) {
      double T;
      std::int64_t oracle;
      for (;;) {
        T = pick_t(rng);
        try {
          oracle = brute_force_points(g, src, T);
          break;
        } catch (const Error& err) {
          if (err.code() != ErrorCode::TAtEvent) throw;
        }
      }
      ++samples;
      double profile_value = n_at(prof, T);
      if (profile_value != static_cast<double>(oracle)) ++mismatches;
    }
  };

  // the triangle, then random graphs
  run_graph(make_complete(3, random_lengths(3, rng)));
  while (graphs < 50) {
    std::uniform_int_distribution<int> pick_n(1, 4);
    run_graph(random_connected_graph(pick_n(rng), rng));
  }
  r.pass = mismatches == 0;
  r.detail = std::to_string(graphs) + " graphs, " + std::to_string(samples) +
             " samples, " + std::to_string(mismatches) + " mismatches";
  return r;
}

CheckResult check_jump_convention(Rng& rng) {
  CheckResult r{"10 jump-convention", false, ""};
  int bad = 0, breakpoints = 0;
  for (int i = 0; i < 20; ++i) {
    std::uniform_int_distribution<int> pick_n(1, 4);
    MetricGraph g = random_connected_graph(pick_n(rng), rng);
    double max_len = 0.0;
    for (int e = 0; e < g.num_edges(); ++e)
      max_len = std::max(max_len, g.length(e));
    NProfile prof = n_profile(g, *g.source, 12.0 * max_len);
    for (size_t k = 0; k < prof.breakpoints.size(); ++k) {
      ++breakpoints;
      const Breakpoint& b = prof.breakpoints[k];
      if (b.midpoint() != 0.5 * static_cast<double>(b.left + b.right)) ++bad;
      if (b.right < b.left) ++bad;  // N is nondecreasing
      if (k + 1 < prof.breakpoints.size() &&
          prof.breakpoints[k + 1].left != b.right)
        ++bad;  // generic value between breakpoints is the previous right
    }
  }
  r.pass = bad == 0 && breakpoints > 0;
  r.detail = std::to_string(breakpoints) + " breakpoints, " +
             std::to_string(bad) + " violations";
  return r;
}

CheckResult check_max_growth(Rng& rng) {
  CheckResult r{"11 max-growth-triangle", false, ""};
  std::uniform_real_distribution<double> eps(-1e-4, 1e-4);
  std::vector<double> lens = {1.0 + eps(rng), 1.0 + eps(rng), 1.0 + eps(rng)};
  auto symbols = make_symbols(lens);

  double triangle = n1_coefficient(make_complete(3, symbols));

  // All other connected simple graphs on 3 edges are trees on 4 vertices:
  // the path and the 3-star.
  MetricGraph path;
  path.num_vertices = 4;
  path.edges = {{0, 1}, {1, 2}, {2, 3}};
  path.lengths = symbols;
  MetricGraph star;
  star.num_vertices = 4;
  star.edges = {{0, 1}, {0, 2}, {0, 3}};
  star.lengths = symbols;

  double best_other =
      std::max(n1_coefficient(path), n1_coefficient(star));
  r.pass = triangle > best_other;
  r.detail = "triangle n1=" + format_double(triangle) +
             " best tree n1=" + format_double(best_other);
  return r;
}

}  // namespace

std::vector<CheckResult> run_acceptance(std::uint64_t seed) {
  Rng rng(seed);
  std::vector<CheckResult> results;
  results.push_back(check_partition_24());
  results.push_back(check_small_e_minimality(rng));
  results.push_back(check_t1_delta(rng));
  results.push_back(check_t2_delta(rng));
  results.push_back(check_surgery_endpoint(rng));
  results.push_back(check_closed_form());
  results.push_back(check_n1_empirical());
  results.push_back(check_n2_empirical());
  results.push_back(check_oracle_equivalence(rng));
  results.push_back(check_jump_convention(rng));
  results.push_back(check_max_growth(rng));
  return results;
}

}  // namespace walkcount
