#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <string>

#include "parallel.hpp"
#include "qsum/error.hpp"
#include "qsum/explore.hpp"
#include "qsum/graph6.hpp"

namespace qsum {
namespace {

using Row = std::uint16_t;

bool connected_without(const PackedGraph& g, int removed) {
  const Row all = static_cast<Row>(((1u << g.n) - 1) & ~(1u << removed));
  if (all == 0) return true;
  Row seen = static_cast<Row>(all & (~all + 1));  // lowest remaining vertex
  Row frontier = seen;
  while (frontier != 0) {
    Row next = 0;
    for (Row m = frontier; m != 0; m &= m - 1) next |= g.rows[std::countr_zero(m)];
    next &= static_cast<Row>(all & ~seen);
    seen |= next;
    frontier = next;
  }
  return seen == all;
}

PackedGraph delete_vertex(const PackedGraph& g, int removed) {
  PackedGraph out;
  out.n = g.n - 1;
  const Row low = static_cast<Row>((1u << removed) - 1);
  for (int v = 0, w = 0; v < g.n; ++v) {
    if (v == removed) continue;
    const Row row = g.rows[v];
    out.rows[w++] = static_cast<Row>((row & low) | ((row >> 1) & ~low));
  }
  return out;
}

// Canonical codes of the accepted one-vertex extensions of `parent`.
std::vector<std::uint64_t> extend(const PackedGraph& parent) {
  const int m = parent.n;
  const std::uint64_t parent_code = adjacency_code(parent);
  std::vector<std::uint64_t> out;
  std::array<int, kMaxCanonicalOrder> degree{};
  std::array<int, kMaxCanonicalOrder> key{};
  std::array<int, kMaxCanonicalOrder> ties{};

  for (Row subset = 1; subset < (1u << m); ++subset) {
    PackedGraph child = parent;
    child.n = m + 1;
    child.rows[m] = subset;
    for (Row s = subset; s != 0; s &= s - 1) child.rows[std::countr_zero(s)] |= static_cast<Row>(1u << m);

    for (int v = 0; v <= m; ++v) degree[v] = std::popcount(child.rows[v]);
    for (int v = 0; v <= m; ++v) {
      int sum = 0;
      for (Row s = child.rows[v]; s != 0; s &= s - 1) sum += degree[std::countr_zero(s)];
      key[v] = (degree[v] << 8) | sum;
    }

    bool accept = true;
    int tie_count = 0;
    for (int u = 0; u < m && accept; ++u) {
      if (key[u] < key[m]) continue;
      if (!connected_without(child, u)) continue;
      if (key[u] > key[m]) {
        accept = false;
      } else {
        ties[tie_count++] = u;
      }
    }
    for (int i = 0; i < tie_count && accept; ++i)
      if (canonical_labeling(delete_vertex(child, ties[i])).code > parent_code) accept = false;
    if (accept) out.push_back(canonical_labeling(child).code);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool packed_star_plus_edge(const PackedGraph& g) {
  if (g.n < 4) return false;
  int twice_edges = 0;
  int delta = 0;
  for (int v = 0; v < g.n; ++v) {
    const int d = std::popcount(g.rows[v]);
    twice_edges += d;
    delta = std::max(delta, d);
  }
  return twice_edges == 2 * g.n && delta == g.n - 1;
}

bool better(double f, const std::string& g6, double best_f, const std::string& best_g6) {
  return f < best_f || (f == best_f && g6 < best_g6);
}

// Folds one evaluated graph into a running record.
void offer(ExtremalRecord& rec, const PackedGraph& g, const GapSummary& s) {
  ++rec.examined;
  const bool star = packed_star_plus_edge(g);
  const bool beats_best = s.f <= rec.best_f;
  const bool beats_competitor = !star && s.f <= rec.competitor_f;
  if (!beats_best && !beats_competitor) return;
  const std::string g6 = to_graph6(unpack(g));
  if (beats_best && better(s.f, g6, rec.best_f, rec.graph6)) {
    rec.best_f = s.f;
    rec.graph6 = g6;
    rec.s2 = s.s2;
    rec.q1 = s.q1;
    rec.q2 = s.q2;
    rec.edges = s.edges;
    rec.star_plus_edge = star;
  }
  if (beats_competitor && better(s.f, g6, rec.competitor_f, rec.competitor_graph6)) {
    rec.competitor_f = s.f;
    rec.competitor_graph6 = g6;
  }
}

struct ComponentClass {
  PackedGraph graph;
  int edges = 0;
  double top1 = 0.0;
  double top2 = -std::numeric_limits<double>::infinity();
};

PackedGraph packed_union(const std::vector<const ComponentClass*>& parts) {
  PackedGraph out;
  int offset = 0;
  for (const auto* part : parts) {
    for (int v = 0; v < part->graph.n; ++v) out.rows[offset + v] = static_cast<Row>(part->graph.rows[v] << offset);
    offset += part->graph.n;
  }
  out.n = offset;
  return out;
}

// Disconnected graphs as multisets of connected components, sizes non-increasing.
void compose(int remaining, int max_size, std::size_t min_index, std::vector<const ComponentClass*>& parts,
             const std::vector<std::vector<ComponentClass>>& classes, ExtremalRecord& rec) {
  if (remaining == 0) {
    if (parts.size() < 2) return;  // connected graphs are handled directly
    double a = -std::numeric_limits<double>::infinity();
    double b = a;
    int edges = 0;
    for (const auto* p : parts) {
      edges += p->edges;
      for (double x : {p->top1, p->top2}) {
        if (x > a) {
          b = a;
          a = x;
        } else if (x > b) {
          b = x;
        }
      }
    }
    GapSummary s;
    s.edges = edges;
    s.q1 = a;
    s.q2 = b;
    s.s2 = a + b;
    s.f = edges + 3.0 - s.s2;
    const PackedGraph whole = packed_union(parts);
    const PackedGraph canonical = apply_labeling(whole, canonical_labeling(whole));
    offer(rec, canonical, s);
    return;
  }
  for (int size = std::min(remaining, max_size); size >= 1; --size) {
    const auto& list = classes[size];
    for (std::size_t i = size == max_size ? min_index : 0; i < list.size(); ++i) {
      parts.push_back(&list[i]);
      compose(remaining - size, size, i, parts, classes, rec);
      parts.pop_back();
    }
  }
}

}  // namespace

std::vector<PackedGraph> connected_graphs(int n, int threads) {
  if (n < 1 || n > kMaxEnumerationOrder)
    throw CapacityError("enumeration supports 1 <= n <= " + std::to_string(kMaxEnumerationOrder) + ", got " +
                        std::to_string(n));
  std::vector<PackedGraph> level{PackedGraph{1, {}}};
  for (int order = 2; order <= n; ++order) {
    std::vector<std::vector<std::uint64_t>> children(level.size());
    detail::parallel_for(level.size(), threads,
                         [&](std::size_t i, std::size_t) { children[i] = extend(level[i]); });
    std::vector<PackedGraph> next;
    for (const auto& codes : children)
      for (std::uint64_t code : codes) next.push_back(from_adjacency_code(order, code));
    level = std::move(next);
  }
  return level;
}

EnumerationStats enumerate_connected(int n, const GraphVisitor& visit, int threads) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<PackedGraph> graphs = connected_graphs(n, threads);
  detail::parallel_for(graphs.size(), threads, [&](std::size_t i, std::size_t) { visit(graphs[i]); });
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EnumerationStats stats;
  stats.n = n;
  stats.count = graphs.size();
  stats.seconds = seconds;
  stats.rate = seconds > 0.0 ? static_cast<double>(graphs.size()) / seconds : 0.0;
  return stats;
}

std::string_view provenance_name(Provenance p) {
  return p == Provenance::Exhaustive ? "exhaustive" : "heuristic";
}

void merge_records(ExtremalRecord& into, const ExtremalRecord& candidate) {
  into.examined += candidate.examined;
  if (!candidate.graph6.empty() && better(candidate.best_f, candidate.graph6, into.best_f, into.graph6)) {
    into.best_f = candidate.best_f;
    into.graph6 = candidate.graph6;
    into.s2 = candidate.s2;
    into.q1 = candidate.q1;
    into.q2 = candidate.q2;
    into.edges = candidate.edges;
    into.star_plus_edge = candidate.star_plus_edge;
  }
  if (!candidate.competitor_graph6.empty() &&
      better(candidate.competitor_f, candidate.competitor_graph6, into.competitor_f, into.competitor_graph6)) {
    into.competitor_f = candidate.competitor_f;
    into.competitor_graph6 = candidate.competitor_graph6;
  }
}

ExtremalRecord exhaustive_min_f(int n, const ExhaustiveOptions& opts) {
  if (n < 2) throw DomainError("f needs at least two vertices");
  if (n > kMaxEnumerationOrder) throw CapacityError("exhaustive search supports n <= " + std::to_string(kMaxEnumerationOrder));

  const int workers = std::max(opts.threads, 1);
  std::vector<ExtremalRecord> partial(static_cast<std::size_t>(workers));
  const std::vector<PackedGraph> graphs = connected_graphs(n, workers);
  detail::parallel_for(graphs.size(), workers, [&](std::size_t i, std::size_t w) {
    offer(partial[w], graphs[i], gap_summary(unpack(graphs[i]), opts.solver_tol));
  });

  ExtremalRecord rec;
  rec.n = n;
  rec.provenance = Provenance::Exhaustive;
  rec.solver_tol = opts.solver_tol;
  for (const auto& p : partial) merge_records(rec, p);

  if (opts.include_disconnected) {
    std::vector<std::vector<ComponentClass>> classes(static_cast<std::size_t>(n));
    for (int size = 1; size < n; ++size) {
      for (const auto& g : connected_graphs(size, workers)) {
        ComponentClass c;
        c.graph = g;
        if (size == 1) {
          c.top1 = 0.0;
        } else {
          const Spectrum spec = q_spectrum(unpack(g), opts.solver_tol);
          c.top1 = spec.values[0];
          c.top2 = spec.values[1];
          c.edges = edge_count(unpack(g));
        }
        classes[size].push_back(c);
      }
    }
    std::vector<const ComponentClass*> parts;
    ExtremalRecord disconnected;
    compose(n, n - 1, 0, parts, classes, disconnected);
    merge_records(rec, disconnected);
  }
  return rec;
}

}  // namespace qsum
