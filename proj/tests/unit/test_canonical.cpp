#include <doctest.h>

#include <map>
#include <set>

#include "qsum/canonical.hpp"
#include "qsum/error.hpp"
#include "qsum/graph6.hpp"
#include "support.hpp"

using namespace qsum;

TEST_CASE("canonical: invariant under random relabeling") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    std::uniform_int_distribution<int> order(1, 10);
    const int n = order(rng);
    const Graph g = testing::random_graph(n, 0.45, rng);
    const Graph h = relabel(g, testing::random_permutation(n, rng));
    CHECK(canonical_form(g) == canonical_form(h));
    CHECK(canonical_graph(canonical_graph(g)) == canonical_graph(g));
  }
}

TEST_CASE("canonical: regular and symmetric graphs") {
  std::mt19937_64 rng(5);
  for (const Graph& g : {cycle_graph(10), complete_graph(10), complement(cycle_graph(10)), build_firefly({3, 0, 1}),
                         disjoint_union(cycle_graph(5), cycle_graph(5)), join(cycle_graph(4), empty_graph(4))}) {
    for (int trial = 0; trial < 10; ++trial)
      CHECK(canonical_form(relabel(g, testing::random_permutation(g.order(), rng))) == canonical_form(g));
  }
  // same degree sequence, not isomorphic
  CHECK_FALSE(isomorphic(cycle_graph(6), disjoint_union(cycle_graph(3), cycle_graph(3))));
}

TEST_CASE("canonical: partition agrees with the brute-force oracle on all graphs with n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    const int pairs = n * (n - 1) / 2;
    std::map<std::string, std::string> oracle_to_ours;
    std::set<std::string> ours;
    for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
      Graph g(n);
      int bit = 0;
      for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit)
          if (mask >> bit & 1u) g.add_edge(u, v);
      const std::string key = oracle::brute_canonical(testing::to_oracle(g));
      const std::string form = canonical_form(g);
      auto [it, fresh] = oracle_to_ours.emplace(key, form);
      CHECK(it->second == form);
      ours.insert(form);
    }
    CHECK(ours.size() == oracle_to_ours.size());
  }
}

TEST_CASE("canonical: packing round trip and capacity") {
  std::mt19937_64 rng(2);
  const Graph g = testing::random_graph(10, 0.5, rng);
  const PackedGraph p = pack(g);
  CHECK(unpack(p) == g);
  CHECK(from_adjacency_code(10, adjacency_code(p)).rows == p.rows);
  CHECK_THROWS_AS(pack(Graph(11)), CapacityError);
  const auto lab = canonical_labeling(p);
  CHECK(adjacency_code(apply_labeling(p, lab)) == lab.code);
}
