#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "qsum/graph.hpp"

namespace qsum {

/// Largest order accepted by the canonical labeling routines.
inline constexpr int kMaxCanonicalOrder = 10;

/// Compact adjacency for graphs on at most kMaxCanonicalOrder vertices.
struct PackedGraph {
  int n = 0;
  std::array<std::uint16_t, kMaxCanonicalOrder> rows{};

  friend bool operator==(const PackedGraph&, const PackedGraph&) = default;
};

PackedGraph pack(const Graph& g);
Graph unpack(const PackedGraph& g);

/**
 * Upper-triangle adjacency bits in graph6 order ((0,1), (0,2), (1,2), (0,3),
 * ...), first pair in the most significant position. Comparing codes of
 * graphs of equal order as integers is comparing their graph6 strings.
 */
std::uint64_t adjacency_code(const PackedGraph& g);
PackedGraph from_adjacency_code(int n, std::uint64_t code);

struct CanonicalLabeling {
  std::uint64_t code = 0;
  /// position[v] is the canonical label of vertex v.
  std::array<std::uint8_t, kMaxCanonicalOrder> position{};
};

/**
 * Canonical labeling by individualization-refinement: the search tree of
 * equitable ordered partitions is explored in full (structural twins are
 * branched on once) and the labeling with the least adjacency code wins.
 * Isomorphic inputs get the same code.
 */
CanonicalLabeling canonical_labeling(const PackedGraph& g);
PackedGraph apply_labeling(const PackedGraph& g, const CanonicalLabeling& labeling);

/// graph6 bytes of the canonically relabeled graph. Throws CapacityError for n > 10.
std::string canonical_form(const Graph& g);
Graph canonical_graph(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

}  // namespace qsum
