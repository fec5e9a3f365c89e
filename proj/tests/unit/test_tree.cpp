#include <doctest.h>

#include <algorithm>
#include <set>

#include "walkcount/instance_gen.hpp"
#include "walkcount/rooted_tree.hpp"

using namespace walkcount;

TEST_CASE("hanging edges") {
  // Path of 2 edges rooted at one end: only the far edge hangs.
  RootedTreeView end_rooted = make_chain(make_symbols({1.0, 1.3}), 0);
  CHECK(end_rooted.hanging_edges() == std::vector<int>{1});

  // Rooted at the middle: both edges hang.
  RootedTreeView mid_rooted = make_chain(make_symbols({1.0, 1.3}), 1);
  CHECK(mid_rooted.hanging_edges() == std::vector<int>{0, 1});

  // Star of chains (2,2): the two deepest edges.
  RootedTreeView star = make_star_of_chains({2, 2}, make_symbols({1, 2, 3, 4}));
  std::vector<int> expected;
  for (int e = 0; e < 4; ++e)
    if (star.depth(e) == 2) expected.push_back(e);
  CHECK(star.hanging_edges() == expected);
}

TEST_CASE("up_chain") {
  RootedTreeView chain = make_chain(make_symbols({1, 2, 3}), 0);
  CHECK(chain.up_chain(0) == std::vector<int>{0});
  CHECK(chain.up_chain(2) == std::vector<int>{2, 1, 0});
  CHECK(static_cast<int>(chain.up_chain(2).size()) == chain.depth(2));

  RootedTreeView star = make_star_of_chains({3, 2}, make_symbols({1, 2, 3, 4, 5}));
  // Edge at depth 2 of the second chain: itself then its chain parent.
  CHECK(star.up_chain(4) == std::vector<int>{4, 3});
}

TEST_CASE("branch") {
  RootedTreeView chain = make_chain(make_symbols({1, 2, 3}), 0);
  // Hanging edge: branch is its own ancestor chain.
  std::vector<int> up = chain.up_chain(2);
  std::sort(up.begin(), up.end());
  CHECK(chain.branch(2) == up);
  // Root has degree 1: the root edge's branch is everything.
  CHECK(chain.branch(0) == std::vector<int>{0, 1, 2});
}

TEST_CASE("branch equals up-chain union of dominated edges (random)") {
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    RootedTreeView tree = random_tree(2 + trial % 7, rng);
    for (int e = 0; e < tree.num_edges(); ++e) {
      std::vector<int> upe = tree.up_chain(e);
      std::set<int> expected(upe.begin(), upe.end());
      for (int f = 0; f < tree.num_edges(); ++f) {
        auto upf = tree.up_chain(f);
        if (std::find(upf.begin(), upf.end(), e) != upf.end())
          expected.insert(f);
      }
      std::vector<int> br = tree.branch(e);
      CHECK(std::set<int>(br.begin(), br.end()) == expected);
    }
  }
}

TEST_CASE("hanging set never contains a degree-1 root's edge") {
  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    RootedTreeView tree = random_tree(2 + trial % 7, rng);
    if (tree.root_degree() != 1) continue;
    auto hang = tree.hanging_edges();
    for (int e : tree.root_edges())
      CHECK(std::find(hang.begin(), hang.end(), e) == hang.end());
  }
}

TEST_CASE("make_chain") {
  RootedTreeView single = make_chain(make_symbols({1.0}), 0);
  CHECK(single.num_edges() == 1);
  CHECK(single.root_degree() == 1);

  RootedTreeView chain = make_chain(make_symbols({1, 2, 3}), 0);
  CHECK(chain.is_chain());
  CHECK(chain.chain_partition() == std::vector<int>{3});

  // Interior root at position 2 of a 4-chain is the star of chains (2,2).
  RootedTreeView interior = make_chain(make_symbols({1, 2, 3, 4}), 2);
  CHECK(interior.is_chain());
  CHECK(interior.chain_partition() == std::vector<int>{2, 2});

  CHECK_THROWS_AS(make_chain({}, 0), Error);
}

TEST_CASE("make_star_of_chains") {
  RootedTreeView s = make_star_of_chains({2, 2}, make_symbols({1, 2, 3, 4}));
  CHECK(s.root_degree() == 2);
  CHECK(s.hanging_edges().size() == 2);

  RootedTreeView paper = make_star_of_chains(
      {8, 8, 8},
      make_symbols(std::vector<double>(24, 1.0)));
  CHECK(paper.root_degree() == 3);
  CHECK(paper.chain_partition() == std::vector<int>{8, 8, 8});

  RootedTreeView star3 = make_star_of_chains({1, 1, 1}, make_symbols({1, 2, 3}));
  CHECK(star3.root_degree() == 3);

  CHECK_THROWS_AS(make_star_of_chains({2, 1}, make_symbols({1, 2})), Error);
}

TEST_CASE("sum of up-chain sizes over a star of chains") {
  // sum_e |up(e)| = (sum l_i^2)/2 + (sum l_i)/2 for chains (l_1,...,l_k).
  for (auto parts : std::vector<std::vector<int>>{{2, 2}, {3, 1}, {8, 8, 8}, {5}}) {
    int total = 0;
    for (int l : parts) total += l;
    RootedTreeView t = make_star_of_chains(
        parts, make_symbols(std::vector<double>(static_cast<size_t>(total), 1.0)));
    long long sum = 0, sq = 0;
    for (int e = 0; e < t.num_edges(); ++e)
      sum += static_cast<long long>(t.up_chain(e).size());
    for (int l : parts) sq += static_cast<long long>(l) * l;
    CHECK(2 * sum == sq + total);
  }
}

TEST_CASE("orienting an explicit tree matches from_parents queries") {
  MetricGraph g;
  g.num_vertices = 4;
  g.edges = {{1, 0}, {1, 2}, {1, 3}};
  g.lengths = make_symbols({1.0, 2.0, 3.0});
  RootedTreeView t(g, 1);
  CHECK(t.root_degree() == 3);
  for (int e = 0; e < 3; ++e) {
    CHECK(t.parent(e) == -1);
    CHECK(t.is_hanging(e));
  }
  MetricGraph cyclic = make_complete(3, make_symbols({1, 2, 3}));
  CHECK_THROWS_AS(RootedTreeView(cyclic, 0), Error);
}
