#pragma once

#include <random>

#include "oracles/oracles.hpp"
#include "qsum/explore.hpp"
#include "qsum/graph.hpp"

namespace testing {

inline oracle::Adjacency to_oracle(const qsum::Graph& g) {
  oracle::Adjacency a(g.order(), std::vector<int>(g.order(), 0));
  for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = 1;
  return a;
}

inline qsum::Graph random_graph(int n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(density);
  qsum::Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace testing
