#include <doctest.h>

#include <algorithm>
#include <set>

#include "walkcount/asymptotics.hpp"
#include "walkcount/instance_gen.hpp"
#include "walkcount/surgery.hpp"

using namespace walkcount;

namespace {

std::multiset<double> hanging_lengths(const RootedTreeView& t) {
  std::multiset<double> out;
  for (int e : t.hanging_edges()) out.insert(t.length(e));
  return out;
}

std::multiset<double> up_chain_lengths(const RootedTreeView& t, int symbol) {
  // Identify the edge by its basis symbol so pre/post trees can be compared
  // even though t1_apply/t2_apply renumber edges.
  for (int e = 0; e < t.num_edges(); ++e)
    if (t.symbol(e).index == symbol) {
      std::multiset<double> out;
      for (int f : t.up_chain(e)) out.insert(t.length(f));
      return out;
    }
  FAIL("symbol not found");
  return {};
}

}  // namespace

TEST_CASE("t1 move validation") {
  // Chain of 3 rooted at one end: edge 0 at the root, 2 hanging.
  RootedTreeView chain = make_chain(make_symbols({1.0, 2.0, 3.0}), 0);
  CHECK_NOTHROW(validate_t1(chain, {0, 2}));
  CHECK_NOTHROW(validate_t1(chain, {1, 2}));
  CHECK_THROWS_AS(validate_t1(chain, {2, 2}), Error);   // e hanging
  CHECK_THROWS_AS(validate_t1(chain, {0, 1}), Error);   // b not hanging
  CHECK_THROWS_AS(validate_t1(chain, {1, 0}), Error);   // b not below e
  CHECK_THROWS_AS(validate_t1(chain, {0, 7}), Error);   // out of range
}

TEST_CASE("t1 postconditions on a concrete tree") {
  // parent vector: 0,1 at root; 2,3 children of 0; 4 child of 3.
  std::vector<int> parent = {-1, -1, 0, 0, 3};
  auto lengths = make_symbols({1.0, 2.0, 3.0, 4.0, 5.0});
  RootedTreeView tree = RootedTreeView::from_parents(parent, lengths);
  // e = 0 (non-hanging), b = 4 (hanging), chain between them l = {3}.
  RootedTreeView out = t1_apply(tree, {0, 4});

  // up(b) unchanged as a length multiset; up(e) gains the chain between b
  // and e, i.e. the length-4 edge.
  CHECK(up_chain_lengths(out, 4) == up_chain_lengths(tree, 4));
  CHECK(up_chain_lengths(out, 0) == std::multiset<double>({1.0, 4.0}));
  // Edge 2 leaves e's subtree entirely: its up-chain shrinks to itself.
  CHECK(up_chain_lengths(out, 2) == std::multiset<double>{3.0});
  CHECK(hanging_lengths(out) == hanging_lengths(tree));
  CHECK(out.num_edges() == tree.num_edges());

  // D \ l = {2}: delta = t_e * t_2 = 1 * 3.
  CHECK(t1_delta(tree, {0, 4}) == doctest::Approx(3.0));
  CHECK(2.0 * (p2(tree) - p2(out)) == doctest::Approx(3.0));
}

TEST_CASE("t1 with empty D-minus-l keeps p2") {
  // Pure chain: excising the root edge and reattaching above the hanging
  // edge permutes the chain, so the move is valid but p2-neutral.
  RootedTreeView chain = make_chain(make_symbols({1.0, 2.0, 3.0}), 0);
  CHECK(t1_delta(chain, {0, 2}) == doctest::Approx(0.0));
  RootedTreeView out = t1_apply(chain, {0, 2});
  CHECK(out.is_chain());
  CHECK(p2(out) == doctest::Approx(p2(chain)));
}

TEST_CASE("t1 formula matches direct difference on random trees") {
  Rng rng(11);
  int tried = 0;
  while (tried < 300) {
    std::uniform_int_distribution<int> pick_n(3, 9);
    RootedTreeView tree = random_tree(pick_n(rng), rng);
    auto move = random_t1_move(tree, rng);
    if (!move) continue;
    ++tried;
    double direct = 2.0 * (p2(tree) - p2(t1_apply(tree, *move)));
    CHECK(t1_delta(tree, *move) == doctest::Approx(direct).epsilon(1e-9));
    CHECK(direct >= -1e-12);
  }
}

TEST_CASE("t2 move validation and splice") {
  // Star (2, 1, 1): root degree 3; edges 0,1 form the long chain, 2 and 3
  // are single-edge chains.
  auto star =
      make_star_of_chains({2, 1, 1}, make_symbols({3.0, 4.0, 1.0, 2.0}));
  CHECK_NOTHROW(validate_t2(star, {2, 0}));
  CHECK_NOTHROW(validate_t2(star, {2, 3}));
  CHECK_THROWS_AS(validate_t2(star, {0, 2}), Error);  // b non-hanging
  CHECK_THROWS_AS(validate_t2(star, {1, 0}), Error);  // not siblings
  // Degree-2 attachment vertices admit no T2 move.
  auto small = make_star_of_chains({1, 1}, make_symbols({1.0, 2.0}));
  CHECK_THROWS_AS(validate_t2(small, {0, 1}), Error);

  RootedTreeView out = t2_apply(star, {2, 0});
  CHECK(out.is_star_of_chains());
  CHECK(out.chain_partition() == std::vector<int>({3, 1}));
  // b (length 1) sits below d (length 3) and above d's old child (length 4).
  CHECK(up_chain_lengths(out, 1) == std::multiset<double>({4.0, 1.0, 3.0}));
}

TEST_CASE("t2 formula matches direct difference when d is non-hanging") {
  Rng rng(13);
  int checked = 0;
  while (checked < 300) {
    std::uniform_int_distribution<int> pick_n(3, 9);
    RootedTreeView tree = random_tree(pick_n(rng), rng);
    auto move = random_t2_move(tree, rng);
    if (!move) continue;
    double direct = 2.0 * (p2(tree) - p2(t2_apply(tree, *move)));
    CHECK(direct > 0.0);
    bool d_hanging = tree.is_hanging(move->d);
    if (d_hanging) {
      CHECK_THROWS_AS(t2_delta(tree, *move), Error);
    } else {
      CHECK(t2_delta(tree, *move) == doctest::Approx(direct).epsilon(1e-9));
      ++checked;
    }
  }
}

TEST_CASE("t2_delta concrete value") {
  // Star (2, 1, 1): b is the length-1 edge, d the length-3 chain head.
  auto star =
      make_star_of_chains({2, 1, 1}, make_symbols({3.0, 4.0, 1.0, 2.0}));
  // D = {d} + desc(d) = lengths {3, 4};
  // delta = -(3+4)*1 + 1^2 + 2*1*(3+4+2) = 12.
  CHECK(t2_delta(star, {2, 0}) == doctest::Approx(12.0));
  CHECK(2.0 * (p2(star) - p2(t2_apply(star, {2, 0})))
        == doctest::Approx(12.0));
}

TEST_CASE("minimize_by_surgery endpoint and log consistency") {
  Rng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<int> pick_n(2, 9);
    RootedTreeView tree = random_tree(pick_n(rng), rng);
    std::vector<SurgeryStep> log;
    RootedTreeView out = minimize_by_surgery(tree, &log);

    CHECK(out.is_star_of_chains());
    CHECK(out.num_edges() == tree.num_edges());
    double drop = 0.0;
    for (const SurgeryStep& step : log) {
      CHECK(step.delta_p2 > 0.0);
      drop += step.delta_p2;
    }
    CHECK(p2(tree) - p2(out) == doctest::Approx(drop).epsilon(1e-9));
    if (out.root_degree() >= 2)
      for (int part : out.chain_partition()) CHECK(part >= 2);
  }
}

TEST_CASE("minimize_by_surgery fixes chains and good stars") {
  std::vector<SurgeryStep> log;
  RootedTreeView chain = make_chain(make_symbols({1.0, 2.0, 3.0, 4.0}), 0);
  RootedTreeView out = minimize_by_surgery(chain, &log);
  CHECK(log.empty());
  CHECK(out.is_chain());

  auto star =
      make_star_of_chains({2, 2}, make_symbols({1.0, 1.1, 1.2, 1.3}));
  log.clear();
  // A (2,2) star may still admit improving moves, but if the log is empty
  // the output must equal the input structurally.
  RootedTreeView out2 = minimize_by_surgery(star, &log);
  if (log.empty()) CHECK(out2.chain_partition() == star.chain_partition());
  CHECK(p2(out2) <= p2(star) + 1e-12);
}

TEST_CASE("degree-2 root with a single-edge chain gets absorbed") {
  auto star = make_star_of_chains({3, 1}, make_symbols({1.0, 1.0, 1.0, 1.0}));
  std::vector<SurgeryStep> log;
  RootedTreeView out = minimize_by_surgery(star, &log);
  CHECK(out.is_star_of_chains());
  bool bad_endpoint = out.root_degree() >= 2;
  if (bad_endpoint)
    for (int part : out.chain_partition()) CHECK(part >= 2);
  CHECK(p2(out) < p2(star));
}
