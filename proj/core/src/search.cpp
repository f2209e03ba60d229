#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "parallel.hpp"
#include "qsum/error.hpp"
#include "qsum/explore.hpp"
#include "qsum/graph6.hpp"

namespace qsum {
namespace {

std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{seed, stream};
  return std::mt19937_64(seq);
}

bool better(double f, const std::string& g6, double best_f, const std::string& best_g6) {
  return f < best_f || (f == best_f && g6 < best_g6);
}

class Evaluator {
 public:
  Evaluator(const SearchConfig& config, std::uint64_t budget) : config_(config), budget_(budget) {
    record_.n = config.n;
    record_.provenance = Provenance::Heuristic;
    record_.solver_tol = config.solver_tol;
  }

  bool exhausted() const noexcept { return used_ >= budget_; }

  // Seeds are always evaluated, even past the budget.
  double evaluate(const Graph& g) {
    ++used_;
    const GapSummary s = gap_summary(g, config_.solver_tol);
    ++record_.examined;
    const bool star = is_star_plus_edge(g);
    const bool beats_best = s.f <= record_.best_f;
    const bool beats_competitor = !star && s.f <= record_.competitor_f;
    if (beats_best || beats_competitor) {
      const std::string g6 = g.order() <= kMaxCanonicalOrder ? canonical_form(g) : to_graph6(g);
      if (beats_best && better(s.f, g6, record_.best_f, record_.graph6)) {
        record_.best_f = s.f;
        record_.graph6 = g6;
        record_.s2 = s.s2;
        record_.q1 = s.q1;
        record_.q2 = s.q2;
        record_.edges = s.edges;
        record_.star_plus_edge = star;
      }
      if (beats_competitor && better(s.f, g6, record_.competitor_f, record_.competitor_graph6)) {
        record_.competitor_f = s.f;
        record_.competitor_graph6 = g6;
      }
    }
    return s.f;
  }

  const ExtremalRecord& record() const noexcept { return record_; }

 private:
  const SearchConfig& config_;
  std::uint64_t budget_;
  std::uint64_t used_ = 0;
  ExtremalRecord record_;
};

struct Candidate {
  Edge removed{-1, -1};
  Edge added{-1, -1};
};

std::vector<Candidate> neighborhood(const Graph& g, Move move) {
  const int n = g.order();
  std::vector<Candidate> out;
  switch (move) {
    case Move::Add:
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (!g.adjacent(u, v)) out.push_back({{-1, -1}, {u, v}});
      break;
    case Move::Delete:
      for (const Edge& e : g.edges()) out.push_back({e, {-1, -1}});
      break;
    case Move::Rotate:
      for (auto [a, b] : g.edges()) {
        for (auto [pivot, old_end] : {Edge{a, b}, Edge{b, a}}) {
          for (int w = 0; w < n; ++w)
            if (w != pivot && w != old_end && !g.adjacent(pivot, w))
              out.push_back({{std::min(pivot, old_end), std::max(pivot, old_end)}, {std::min(pivot, w), std::max(pivot, w)}});
        }
      }
      break;
  }
  return out;
}

Graph apply(const Graph& g, const Candidate& c) {
  Graph out = g;
  if (c.removed.first >= 0) out.remove_edge(c.removed.first, c.removed.second);
  if (c.added.first >= 0) out.add_edge(c.added.first, c.added.second);
  return out;
}

class Vns {
 public:
  Vns(const SearchConfig& config, std::uint64_t budget, std::uint64_t stream)
      : config_(config), eval_(config, budget), rng_(make_rng(config.seed, stream)) {}

  ExtremalRecord run(Graph start) {
    double start_f = eval_.evaluate(start);
    descend(start, start_f);
    Graph best = start;
    double best_f = start_f;
    int shake = 1;
    while (!eval_.exhausted()) {
      Graph trial = best;
      if (!perturb(trial, shake)) break;
      double trial_f = eval_.evaluate(trial);
      descend(trial, trial_f);
      if (trial_f < best_f) {
        best = std::move(trial);
        best_f = trial_f;
        shake = 1;
      } else {
        shake = shake % std::max(config_.max_shake, 1) + 1;
      }
    }
    return eval_.record();
  }

 private:
  bool feasible(const Graph& g) const { return !config_.connected || is_connected(g); }

  // First-improvement descent over the neighborhood schedule.
  void descend(Graph& g, double& f) {
    std::size_t k = 0;
    while (k < config_.schedule.size() && !eval_.exhausted()) {
      std::vector<Candidate> moves = neighborhood(g, config_.schedule[k]);
      std::shuffle(moves.begin(), moves.end(), rng_);
      bool improved = false;
      for (const Candidate& c : moves) {
        if (eval_.exhausted()) break;
        Graph next = apply(g, c);
        if (edge_count(next) == 0 && g.order() > 1) continue;
        if (!feasible(next)) continue;
        const double next_f = eval_.evaluate(next);
        if (next_f < f) {
          g = std::move(next);
          f = next_f;
          improved = true;
          break;
        }
      }
      k = improved ? 0 : k + 1;
    }
  }

  bool perturb(Graph& g, int rotations) {
    for (int i = 0; i < rotations; ++i) {
      std::vector<Candidate> moves = neighborhood(g, Move::Rotate);
      if (moves.empty()) return i > 0;
      bool moved = false;
      for (int attempt = 0; attempt < 32 && !moved; ++attempt) {
        std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
        Graph next = apply(g, moves[pick(rng_)]);
        if (feasible(next)) {
          g = std::move(next);
          moved = true;
        }
      }
      if (!moved) return i > 0;
    }
    return true;
  }

  const SearchConfig& config_;
  Evaluator eval_;
  std::mt19937_64 rng_;
};

std::vector<Graph> seed_graphs(const SearchConfig& config) {
  const int n = config.n;
  std::vector<Graph> seeds;
  if (n >= 4) seeds.push_back(build_star_plus_edge(n));
  std::set<int> ks{1, 2, 3, n / 2};
  for (int k : ks)
    if (k >= 1 && k < n) seeds.push_back(build_join_complete_empty(k, n - k));
  std::mt19937_64 rng = make_rng(config.seed, 0x5eed);
  seeds.push_back(random_connected_graph(n, n / 2, rng));
  return seeds;
}

void check_config(const SearchConfig& config) {
  if (config.n < 2 || config.n > kMaxVertices)
    throw CapacityError("search order must be in 2.." + std::to_string(kMaxVertices));
  if (config.budget == 0) throw InvalidParameter("search budget must be positive");
}

}  // namespace

Graph random_connected_graph(int n, int extra, std::mt19937_64& rng) {
  Graph g(n);
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> parent(0, i - 1);
    g.add_edge(order[i], order[parent(rng)]);
  }
  const int max_edges = n * (n - 1) / 2;
  std::uniform_int_distribution<int> vertex(0, n - 1);
  for (int added = 0; added < extra && edge_count(g) < max_edges;) {
    const int u = vertex(rng);
    const int v = vertex(rng);
    if (u == v || g.adjacent(u, v)) continue;
    g.add_edge(u, v);
    ++added;
  }
  return g;
}

ExtremalRecord vns_search(const SearchConfig& config) {
  check_config(config);
  const std::vector<Graph> seeds = seed_graphs(config);
  const std::uint64_t share = std::max<std::uint64_t>(config.budget / seeds.size(), 1);
  std::vector<ExtremalRecord> results(seeds.size());
  detail::parallel_for(seeds.size(), config.threads, [&](std::size_t i, std::size_t) {
    const std::uint64_t budget = i == 0 ? share + config.budget % seeds.size() : share;
    results[i] = Vns(config, budget, i + 1).run(seeds[i]);
  });
  ExtremalRecord out;
  out.n = config.n;
  out.provenance = Provenance::Heuristic;
  out.solver_tol = config.solver_tol;
  for (const auto& r : results) merge_records(out, r);
  return out;
}

ExtremalRecord random_search(const SearchConfig& config) {
  check_config(config);
  std::mt19937_64 rng = make_rng(config.seed, 0xabc);
  Evaluator eval(config, config.budget);
  const int max_extra = config.n * (config.n - 1) / 2 - (config.n - 1);
  std::uniform_int_distribution<int> extra(0, std::max(max_extra, 0));
  while (!eval.exhausted()) eval.evaluate(random_connected_graph(config.n, extra(rng), rng));
  return eval.record();
}

ExtremalRecord run_search(const SearchConfig& config) {
  switch (config.mode) {
    case SearchMode::Exhaustive: {
      ExhaustiveOptions opts;
      opts.include_disconnected = !config.connected;
      opts.threads = config.threads;
      opts.solver_tol = config.solver_tol;
      return exhaustive_min_f(config.n, opts);
    }
    case SearchMode::Vns:
      return vns_search(config);
    case SearchMode::Random:
      return random_search(config);
  }
  throw InvalidParameter("unknown search mode");
}

std::vector<ConjectureRow> conjecture_scan(int n_lo, int n_hi, const ConjectureOptions& opts) {
  std::vector<ConjectureRow> rows;
  for (int n = n_lo; n <= n_hi; ++n) {
    ConjectureRow row;
    row.n = n;
    row.star_f = n >= 4 ? f_gap(build_star_plus_edge(n), opts.search.solver_tol)
                        : std::numeric_limits<double>::quiet_NaN();
    if (n <= opts.exhaustive_max) {
      ExhaustiveOptions ex;
      ex.include_disconnected = !opts.search.connected;
      ex.threads = opts.search.threads;
      ex.solver_tol = opts.search.solver_tol;
      row.best = exhaustive_min_f(n, ex);
    } else {
      SearchConfig config = opts.search;
      config.n = n;
      if (config.mode == SearchMode::Exhaustive) config.mode = SearchMode::Vns;
      row.best = run_search(config);
    }
    row.competitor_f = row.best.competitor_f;
    row.ratio = row.competitor_f / row.star_f;
    row.star_is_unique_minimizer = row.best.star_plus_edge && row.competitor_f > row.star_f + opts.cert_tol;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace qsum
