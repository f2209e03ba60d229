#pragma once

#include <bitset>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace qsum {

/// Upper bound on the order of any Graph.
inline constexpr int kMaxVertices = 128;

using VertexSet = std::bitset<kMaxVertices>;
using Edge = std::pair<int, int>;

/**
 * Undirected simple graph with bit-row adjacency.
 *
 * Self-loops are rejected and every edge insertion updates both rows, so the
 * relation is always symmetric and irreflexive.
 */
class Graph {
 public:
  /// Edgeless graph on `n` vertices; throws CapacityError unless 1 <= n <= kMaxVertices.
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const Edge> edges);

  int order() const noexcept { return n_; }

  bool adjacent(int u, int v) const;
  const VertexSet& neighbors(int v) const;
  int degree(int v) const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  /// Edges as (u, v) pairs with u < v, sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) = default;

 private:
  void check_vertex(int v) const;

  int n_;
  std::vector<VertexSet> rows_;
};

int edge_count(const Graph& g);
int max_degree(const Graph& g);
bool is_connected(const Graph& g);
/// e - n + 1; throws DomainError on a disconnected graph.
int cyclomatic(const Graph& g);
std::vector<int> degree_sequence(const Graph& g);

/// Relabels vertex v as perm[v]. `perm` must be a permutation of 0..n-1.
Graph relabel(const Graph& g, std::span<const int> perm);
Graph induced_without(const Graph& g, int v);

Graph complete_graph(int n);
Graph empty_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complement(const Graph& g);
Graph disjoint_union(const Graph& a, const Graph& b);
Graph join(const Graph& a, const Graph& b);

/// r triangles, s pendant edges, t pendant paths of length 2, all on one vertex.
struct FireflyParams {
  int r = 0;
  int s = 0;
  int t = 0;

  int order() const noexcept { return 2 * r + s + 2 * t + 1; }
  int size() const noexcept { return 3 * r + s + 2 * t; }
};

/**
 * Firefly graph with a fixed labeling: vertex 0 is the center, then the r
 * triangle pairs (1,2), (3,4), ..., then the s pendant leaves, then the t
 * pendant paths as (inner, leaf) pairs.
 */
Graph build_firefly(const FireflyParams& params);

/// Index ranges of the firefly labeling above.
struct FireflyLayout {
  int center = 0;
  int triangles_begin = 1;
  int pendants_begin = 0;
  int paths_begin = 0;
  int end = 0;
};
FireflyLayout firefly_layout(const FireflyParams& params);

/// Star on n vertices plus one edge; same labeling as build_firefly({1, n-3, 0}).
Graph build_star_plus_edge(int n);

/// True iff g is a star plus one edge (n >= 4, n edges, a vertex of degree n-1).
bool is_star_plus_edge(const Graph& g);

/// K_k joined with the edgeless graph on t vertices; vertices 0..k-1 are the clique.
Graph build_join_complete_empty(int k, int t);

/**
 * Two pendant paths rooted at one vertex of a base graph.
 *
 * Path lengths are counted in edges: `p` for the first path and `q` for the
 * second. In the usual G_{q,r} notation for this construction the first path
 * has q edges and the second r; they are called p and q here so that r stays
 * free for the firefly triangle count.
 */
struct CoalesceSpec {
  Graph base{1};
  int v = 0;
  int p = 1;
  int q = 1;
};

/// Result of coalesce_paths, with the bookkeeping graft_edge needs.
struct Coalescence {
  Graph graph{1};
  int root = 0;
  /// Vertices of each path from the root outward, root excluded. The last
  /// entry is the path's free end.
  std::vector<int> first_path;
  std::vector<int> second_path;

  int first_length() const noexcept { return static_cast<int>(first_path.size()); }
  int second_length() const noexcept { return static_cast<int>(second_path.size()); }
};

/// New path vertices are numbered base.n, base.n+1, ... first path first.
Coalescence coalesce_paths(const CoalesceSpec& spec);

/**
 * Moves the last edge of the second path onto the free end of the first
 * path: G_{p,q} -> G_{p+1,q-1}. Throws InvalidParameter when q == 0.
 */
Coalescence graft_edge(const Coalescence& c);

}  // namespace qsum
