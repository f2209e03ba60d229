#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "qsum/canonical.hpp"
#include "qsum/graph.hpp"
#include "qsum/spectra.hpp"

namespace qsum {

/// Largest order for exhaustive enumeration.
inline constexpr int kMaxEnumerationOrder = 9;

struct EnumerationStats {
  int n = 0;
  std::uint64_t count = 0;
  double seconds = 0.0;
  double rate = 0.0;  ///< graphs per second
};

/**
 * One canonically labeled representative of every isomorphism class of
 * connected graphs on n vertices, in a fixed order.
 *
 * Graphs grow one vertex at a time from canonical connected parents. A child
 * is kept only when its new vertex is a canonical deletion choice: among
 * vertices whose removal leaves the graph connected, those with the largest
 * (degree, neighbor-degree sum) key, and among those the ones whose removal
 * leaves the largest canonical code. Children of one parent are deduplicated
 * by canonical code; no set spanning different parents is needed because
 * the deletion rule fixes the parent class of every graph.
 */
std::vector<PackedGraph> connected_graphs(int n, int threads = 1);

/// Called once per class. With threads > 1 it is called concurrently and must be reentrant.
using GraphVisitor = std::function<void(const PackedGraph&)>;
EnumerationStats enumerate_connected(int n, const GraphVisitor& visit, int threads = 1);

enum class Provenance { Exhaustive, Heuristic };
std::string_view provenance_name(Provenance p);

struct ExtremalRecord {
  int n = 0;
  double best_f = std::numeric_limits<double>::infinity();
  std::string graph6;
  double s2 = 0.0;
  double q1 = 0.0;
  double q2 = 0.0;
  int edges = 0;
  Provenance provenance = Provenance::Exhaustive;
  std::uint64_t examined = 0;
  bool star_plus_edge = false;  ///< argmin is the star plus one edge
  /// Best graph seen that is not the star plus one edge.
  double competitor_f = std::numeric_limits<double>::infinity();
  std::string competitor_graph6;
  double solver_tol = kDefaultSolverTol;
};

/// Replaces `into` by `candidate` if strictly smaller f, or equal f and smaller graph6.
void merge_records(ExtremalRecord& into, const ExtremalRecord& candidate);

struct ExhaustiveOptions {
  bool include_disconnected = false;
  int threads = 1;
  double solver_tol = kDefaultSolverTol;
};

/// f minimized over all (connected, unless configured) graphs on n vertices; 2 <= n <= 9.
ExtremalRecord exhaustive_min_f(int n, const ExhaustiveOptions& opts = {});

enum class SearchMode { Exhaustive, Vns, Random };
enum class Move { Add, Delete, Rotate };

struct SearchConfig {
  int n = 10;
  SearchMode mode = SearchMode::Vns;
  std::uint64_t budget = 20000;  ///< f evaluations
  std::vector<Move> schedule{Move::Add, Move::Delete, Move::Rotate};
  std::uint64_t seed = 1;
  bool connected = true;
  int threads = 1;
  int max_shake = 5;
  double solver_tol = kDefaultSolverTol;
};

/**
 * Variable neighborhood search for small f. Each seed graph (star plus edge,
 * several complete split graphs, one random connected graph) gets its own
 * share of the budget and its own random stream, so the result does not
 * depend on the thread count. Descent tries the schedule's neighborhoods in
 * order and restarts from the first after any strict improvement; on
 * stagnation the incumbent is shaken by k random rotations, k = 1..max_shake.
 */
ExtremalRecord vns_search(const SearchConfig& config);

/// `budget` random connected graphs.
ExtremalRecord random_search(const SearchConfig& config);

/// Dispatches on config.mode.
ExtremalRecord run_search(const SearchConfig& config);

struct ConjectureRow {
  int n = 0;
  double star_f = 0.0;        ///< f of the star plus one edge
  ExtremalRecord best;
  double competitor_f = 0.0;  ///< best f among other graphs
  double ratio = 0.0;         ///< competitor_f / star_f
  bool star_is_unique_minimizer = false;
};

struct ConjectureOptions {
  int exhaustive_max = 8;  ///< orders up to this use exhaustive enumeration
  SearchConfig search;     ///< used above exhaustive_max; `n` is overwritten
  double cert_tol = 1e-8;
};

/// One row per n in [n_lo, n_hi]; empty when n_lo > n_hi.
std::vector<ConjectureRow> conjecture_scan(int n_lo, int n_hi, const ConjectureOptions& opts);

/// Random connected graph on n vertices: a random tree plus `extra` random edges.
Graph random_connected_graph(int n, int extra, std::mt19937_64& rng);

}  // namespace qsum
