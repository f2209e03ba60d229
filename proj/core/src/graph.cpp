#include "qsum/graph.hpp"

#include <algorithm>
#include <string>

#include "qsum/error.hpp"

namespace qsum {

Graph::Graph(int n) : n_(n) {
  if (n < 1 || n > kMaxVertices) {
    throw CapacityError("graph order " + std::to_string(n) + " outside 1.." +
                        std::to_string(kMaxVertices));
  }
  rows_.resize(static_cast<std::size_t>(n));
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw InvalidParameter("vertex " + std::to_string(v) + " out of range for order " +
                           std::to_string(n_));
  }
}

bool Graph::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return rows_[u].test(static_cast<std::size_t>(v));
}

const VertexSet& Graph::neighbors(int v) const {
  check_vertex(v);
  return rows_[v];
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).count()); }

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InvalidParameter("self-loop at vertex " + std::to_string(u));
  rows_[u].set(static_cast<std::size_t>(v));
  rows_[v].set(static_cast<std::size_t>(u));
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  rows_[u].reset(static_cast<std::size_t>(v));
  rows_[v].reset(static_cast<std::size_t>(u));
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (rows_[u].test(static_cast<std::size_t>(v))) out.emplace_back(u, v);
  return out;
}

int edge_count(const Graph& g) {
  std::size_t twice = 0;
  for (int v = 0; v < g.order(); ++v) twice += g.neighbors(v).count();
  return static_cast<int>(twice / 2);
}

int max_degree(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

bool is_connected(const Graph& g) {
  VertexSet seen;
  VertexSet frontier;
  frontier.set(0);
  seen.set(0);
  while (frontier.any()) {
    VertexSet next;
    for (int v = 0; v < g.order(); ++v)
      if (frontier.test(static_cast<std::size_t>(v))) next |= g.neighbors(v);
    next &= ~seen;
    seen |= next;
    frontier = next;
  }
  return static_cast<int>(seen.count()) == g.order();
}

int cyclomatic(const Graph& g) {
  if (!is_connected(g)) throw DomainError("cyclomatic number requires a connected graph");
  return edge_count(g) - g.order() + 1;
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> d(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) d[v] = g.degree(v);
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n) throw InvalidParameter("permutation size mismatch");
  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  for (int x : perm) {
    if (x < 0 || x >= n || hit[x]) throw InvalidParameter("not a permutation");
    hit[x] = true;
  }
  Graph out(n);
  for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

Graph induced_without(const Graph& g, int v) {
  if (g.order() < 2) throw DomainError("cannot delete the only vertex");
  Graph out(g.order() - 1);
  auto shift = [v](int x) { return x > v ? x - 1 : x; };
  for (auto [a, b] : g.edges())
    if (a != v && b != v) out.add_edge(shift(a), shift(b));
  return out;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw InvalidParameter("cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph complement(const Graph& g) {
  Graph out(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) out.add_edge(u, v);
  return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph out(a.order() + b.order());
  for (auto [u, v] : a.edges()) out.add_edge(u, v);
  for (auto [u, v] : b.edges()) out.add_edge(a.order() + u, a.order() + v);
  return out;
}

Graph join(const Graph& a, const Graph& b) {
  Graph out = disjoint_union(a, b);
  for (int u = 0; u < a.order(); ++u)
    for (int v = 0; v < b.order(); ++v) out.add_edge(u, a.order() + v);
  return out;
}

FireflyLayout firefly_layout(const FireflyParams& params) {
  FireflyLayout layout;
  layout.pendants_begin = 1 + 2 * params.r;
  layout.paths_begin = layout.pendants_begin + params.s;
  layout.end = layout.paths_begin + 2 * params.t;
  return layout;
}

Graph build_firefly(const FireflyParams& params) {
  if (params.r < 0 || params.s < 0 || params.t < 0)
    throw InvalidParameter("firefly counts must be non-negative");
  if (params.order() > kMaxVertices)
    throw CapacityError("firefly order " + std::to_string(params.order()) + " exceeds " +
                        std::to_string(kMaxVertices));
  const FireflyLayout layout = firefly_layout(params);
  Graph g(params.order());
  for (int k = 0; k < params.r; ++k) {
    const int a = layout.triangles_begin + 2 * k;
    g.add_edge(0, a);
    g.add_edge(0, a + 1);
    g.add_edge(a, a + 1);
  }
  for (int k = 0; k < params.s; ++k) g.add_edge(0, layout.pendants_begin + k);
  for (int k = 0; k < params.t; ++k) {
    const int inner = layout.paths_begin + 2 * k;
    g.add_edge(0, inner);
    g.add_edge(inner, inner + 1);
  }
  return g;
}

Graph build_star_plus_edge(int n) {
  if (n < 4) throw InvalidParameter("star plus edge needs n >= 4");
  return build_firefly({1, n - 3, 0});
}

bool is_star_plus_edge(const Graph& g) {
  const int n = g.order();
  return n >= 4 && edge_count(g) == n && max_degree(g) == n - 1;
}

Graph build_join_complete_empty(int k, int t) {
  if (k < 1 || t < 0) throw InvalidParameter("join needs k >= 1 and t >= 0");
  if (k + t > kMaxVertices) throw CapacityError("join order exceeds capacity");
  if (t == 0) return complete_graph(k);
  return join(complete_graph(k), empty_graph(t));
}

Coalescence coalesce_paths(const CoalesceSpec& spec) {
  const int base_n = spec.base.order();
  if (spec.v < 0 || spec.v >= base_n)
    throw InvalidParameter("coalescence vertex " + std::to_string(spec.v) + " not in base graph");
  if (spec.p < 1 || spec.q < 1) throw InvalidParameter("path lengths must be >= 1");
  const int n = base_n + spec.p + spec.q;
  if (n > kMaxVertices) throw CapacityError("coalescence order exceeds capacity");

  Coalescence c;
  c.graph = Graph(n);
  for (auto [a, b] : spec.base.edges()) c.graph.add_edge(a, b);
  c.root = spec.v;
  int next = base_n;
  auto grow = [&](int length, std::vector<int>& path) {
    int prev = spec.v;
    for (int k = 0; k < length; ++k) {
      c.graph.add_edge(prev, next);
      path.push_back(next);
      prev = next++;
    }
  };
  grow(spec.p, c.first_path);
  grow(spec.q, c.second_path);
  return c;
}

Coalescence graft_edge(const Coalescence& c) {
  if (c.second_path.empty()) throw InvalidParameter("second path is empty; nothing to graft");
  Coalescence out = c;
  const int leaf = c.second_path.back();
  const int anchor = c.second_path.size() >= 2 ? c.second_path[c.second_path.size() - 2] : c.root;
  const int tip = c.first_path.empty() ? c.root : c.first_path.back();
  out.graph.remove_edge(leaf, anchor);
  out.graph.add_edge(tip, leaf);
  out.second_path.pop_back();
  out.first_path.push_back(leaf);
  return out;
}

}  // namespace qsum
