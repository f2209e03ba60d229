#include "qsum/canonical.hpp"

#include <bit>
#include <unordered_map>

#include "qsum/error.hpp"
#include "qsum/graph6.hpp"

namespace qsum {
namespace {

struct OrderedPartition {
  int cells = 0;
  std::array<std::uint16_t, kMaxCanonicalOrder> cell{};
};

int lowest(std::uint16_t mask) { return std::countr_zero(mask); }

class Canonizer {
 public:
  explicit Canonizer(const PackedGraph& g) : g_(g) {}

  CanonicalLabeling run() {
    OrderedPartition root;
    root.cells = 1;
    root.cell[0] = static_cast<std::uint16_t>((1u << g_.n) - 1);
    explore(root);
    return best_;
  }

 private:
  // Splits the first non-uniform cell against the first splitter that
  // separates it and restarts, until the partition is equitable. Fragments
  // are ordered by neighbor count, so the result only depends on structure.
  void refine(OrderedPartition& p) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int w = 0; w < p.cells && !changed; ++w) {
        const std::uint16_t splitter = p.cell[w];
        for (int c = 0; c < p.cells; ++c) {
          const std::uint16_t members = p.cell[c];
          if (std::popcount(members) == 1) continue;
          std::array<std::uint16_t, kMaxCanonicalOrder + 1> by_count{};
          int lo = kMaxCanonicalOrder + 1;
          int hi = -1;
          for (std::uint16_t m = members; m != 0; m &= m - 1) {
            const int v = lowest(m);
            const int k = std::popcount(static_cast<std::uint16_t>(g_.rows[v] & splitter));
            by_count[k] |= static_cast<std::uint16_t>(1u << v);
            lo = std::min(lo, k);
            hi = std::max(hi, k);
          }
          if (lo == hi) continue;
          std::array<std::uint16_t, kMaxCanonicalOrder> fragments{};
          int count = 0;
          for (int k = lo; k <= hi; ++k)
            if (by_count[k] != 0) fragments[count++] = by_count[k];
          for (int i = p.cells - 1; i > c; --i) p.cell[i + count - 1] = p.cell[i];
          for (int i = 0; i < count; ++i) p.cell[c + i] = fragments[i];
          p.cells += count - 1;
          changed = true;
          break;
        }
      }
    }
  }

  bool twins(int a, int b) const {
    const auto without_a = static_cast<std::uint16_t>(g_.rows[a] & ~(1u << b));
    const auto without_b = static_cast<std::uint16_t>(g_.rows[b] & ~(1u << a));
    return without_a == without_b;
  }

  void leaf(const OrderedPartition& p) {
    std::array<int, kMaxCanonicalOrder> vertex_at{};
    for (int i = 0; i < g_.n; ++i) vertex_at[i] = lowest(p.cell[i]);
    std::uint64_t code = 0;
    for (int j = 1; j < g_.n; ++j) {
      const std::uint16_t row = g_.rows[vertex_at[j]];
      for (int i = 0; i < j; ++i) code = (code << 1) | ((row >> vertex_at[i]) & 1u);
    }
    if (!have_best_ || code < best_.code) {
      have_best_ = true;
      best_.code = code;
      for (int i = 0; i < g_.n; ++i) best_.position[vertex_at[i]] = static_cast<std::uint8_t>(i);
    }
  }

  void explore(OrderedPartition p) {
    refine(p);
    if (p.cells == g_.n) {
      leaf(p);
      return;
    }
    int target = -1;
    int target_size = kMaxCanonicalOrder + 1;
    for (int c = 0; c < p.cells; ++c) {
      const int size = std::popcount(p.cell[c]);
      if (size > 1 && size < target_size) {
        target = c;
        target_size = size;
      }
    }
    const std::uint16_t members = p.cell[target];
    std::uint16_t tried = 0;
    for (std::uint16_t m = members; m != 0; m &= m - 1) {
      const int v = lowest(m);
      bool redundant = false;
      for (std::uint16_t t = tried; t != 0 && !redundant; t &= t - 1) redundant = twins(lowest(t), v);
      if (redundant) continue;
      tried |= static_cast<std::uint16_t>(1u << v);

      OrderedPartition child = p;
      for (int i = child.cells - 1; i > target; --i) child.cell[i + 1] = child.cell[i];
      child.cell[target] = static_cast<std::uint16_t>(1u << v);
      child.cell[target + 1] = static_cast<std::uint16_t>(members & ~(1u << v));
      ++child.cells;
      explore(child);
    }
  }

  const PackedGraph& g_;
  CanonicalLabeling best_;
  bool have_best_ = false;
};

}  // namespace

PackedGraph pack(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder)
    throw CapacityError("canonical labeling supports at most " + std::to_string(kMaxCanonicalOrder) +
                        " vertices, got " + std::to_string(g.order()));
  PackedGraph out;
  out.n = g.order();
  for (auto [u, v] : g.edges()) {
    out.rows[u] |= static_cast<std::uint16_t>(1u << v);
    out.rows[v] |= static_cast<std::uint16_t>(1u << u);
  }
  return out;
}

Graph unpack(const PackedGraph& g) {
  Graph out(g.n);
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if ((g.rows[u] >> v) & 1u) out.add_edge(u, v);
  return out;
}

std::uint64_t adjacency_code(const PackedGraph& g) {
  std::uint64_t code = 0;
  for (int j = 1; j < g.n; ++j)
    for (int i = 0; i < j; ++i) code = (code << 1) | ((g.rows[j] >> i) & 1u);
  return code;
}

PackedGraph from_adjacency_code(int n, std::uint64_t code) {
  if (n < 1 || n > kMaxCanonicalOrder) throw CapacityError("packed order out of range");
  PackedGraph g;
  g.n = n;
  int bit = n * (n - 1) / 2;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      --bit;
      if ((code >> bit) & 1u) {
        g.rows[i] |= static_cast<std::uint16_t>(1u << j);
        g.rows[j] |= static_cast<std::uint16_t>(1u << i);
      }
    }
  }
  return g;
}

CanonicalLabeling canonical_labeling(const PackedGraph& g) {
  if (g.n < 1 || g.n > kMaxCanonicalOrder) throw CapacityError("packed order out of range");
  if (g.n == 1) return CanonicalLabeling{};
  return Canonizer(g).run();
}

PackedGraph apply_labeling(const PackedGraph& g, const CanonicalLabeling& labeling) {
  PackedGraph out;
  out.n = g.n;
  for (int u = 0; u < g.n; ++u)
    for (std::uint16_t m = g.rows[u]; m != 0; m &= m - 1)
      out.rows[labeling.position[u]] |= static_cast<std::uint16_t>(1u << labeling.position[lowest(m)]);
  return out;
}

std::string canonical_form(const Graph& g) { return to_graph6(canonical_graph(g)); }

Graph canonical_graph(const Graph& g) {
  const PackedGraph packed = pack(g);
  const std::uint64_t key = adjacency_code(packed);
  // Memoized per thread and per order; cleared when it grows large.
  thread_local std::array<std::unordered_map<std::uint64_t, std::uint64_t>, kMaxCanonicalOrder + 1> memo;
  auto& table = memo[packed.n];
  if (auto it = table.find(key); it != table.end()) return unpack(from_adjacency_code(packed.n, it->second));
  const std::uint64_t code = canonical_labeling(packed).code;
  if (table.size() > (1u << 16)) table.clear();
  table.emplace(key, code);
  return unpack(from_adjacency_code(packed.n, code));
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) return false;
  if (edge_count(a) != edge_count(b)) return false;
  return canonical_labeling(pack(a)).code == canonical_labeling(pack(b)).code;
}

}  // namespace qsum
