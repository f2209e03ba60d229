#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qsum/graph.hpp"
#include "qsum/spectra.hpp"

namespace qsum {

inline constexpr double kDefaultCertTol = 1e-8;

struct CertifyOptions {
  double solver_tol = kDefaultSolverTol;
  double cert_tol = kDefaultCertTol;
};

enum class Verdict {
  Pass,
  Marginal,      ///< some bound holds, or fails, by less than the certification tolerance
  Fail,
  Precondition,  ///< the instance violates the statement's hypotheses; nothing was checked
};

std::string_view verdict_name(Verdict v);

/// Signed slack of one bound: positive when the bound holds. The bound is
/// met when value > required; values within cert_tol below that are marginal.
struct Margin {
  std::string name;
  double value = 0.0;
  double required = 0.0;
};

struct LemmaReport {
  std::string lemma;
  std::vector<std::pair<std::string, std::int64_t>> params;
  std::string graph6;  ///< input graph when the check was run on one
  std::vector<std::pair<std::string, double>> quantities;
  std::vector<Margin> margins;
  Verdict verdict = Verdict::Precondition;
  std::string note;

  bool passed() const noexcept { return verdict == Verdict::Pass; }
  std::optional<double> quantity(std::string_view name) const;
  std::optional<double> margin(std::string_view name) const;
};

/// Worst verdict over the margins (Pass when there are none).
Verdict classify(const std::vector<Margin>& margins, double cert_tol);

enum class LemmaId {
  Inequality,       ///< S2 <= e + 3 for every graph
  CyclicQ1,         ///< q1 <= n - 1 for sparse c-cyclic graphs
  FireflyQ2,        ///< the q2 windows of fireflies
  Grafting,         ///< grafting strictly lowers q1
  StarPlusBracket,  ///< brackets for F(1, n-3, 0)
  PendantPathBracket,
  LongPathsBound,   ///< S2 < e + 2 for F(1, s, t), t >= 2
  TriangleQ1Bracket,
  ManyTrianglesBound,
  Convergence,      ///< 2.5/n < 1/sqrt(n-k)
};

/// Accepts "ineq1", "lemma2.3" ... "lemma3.5", "prop3.6".
std::optional<LemmaId> parse_lemma_id(std::string_view text);
std::string_view lemma_tag(LemmaId id);

struct LemmaParams {
  int n = 0;
  int r = 0;
  int s = 0;
  int t = 0;
  int k = 0;
  std::optional<Graph> graph;
  std::optional<CoalesceSpec> coalesce;
};

LemmaReport check_s2_inequality(const Graph& g, const CertifyOptions& opts = {});

/// Dispatches to the checker for `id`; only the fields that lemma uses are read.
LemmaReport check_lemma(LemmaId id, const LemmaParams& params, const CertifyOptions& opts = {});

/// check_lemma over a grid, up to `threads` points at a time; rows keep grid order.
std::vector<LemmaReport> certify_grid(LemmaId id, const std::vector<LemmaParams>& grid, const CertifyOptions& opts = {},
                                      int threads = 1);

LemmaReport check_cyclic_q1(const Graph& g, const CertifyOptions& opts = {});
LemmaReport check_firefly_q2(const FireflyParams& p, const CertifyOptions& opts = {});
/// For a connected graph that is not a firefly: evidence that q2 avoids both firefly windows.
LemmaReport q2_window_evidence(const Graph& g, const CertifyOptions& opts = {});
LemmaReport check_grafting_monotonicity(const CoalesceSpec& spec, const CertifyOptions& opts = {});
LemmaReport check_star_plus_bracket(int n, const CertifyOptions& opts = {});
LemmaReport check_pendant_path_bracket(int n, const CertifyOptions& opts = {});
LemmaReport check_long_paths_bound(const FireflyParams& p, const CertifyOptions& opts = {});
LemmaReport check_triangle_q1_bracket(int r, int s, const CertifyOptions& opts = {});
LemmaReport check_many_triangles_bound(const FireflyParams& p, const CertifyOptions& opts = {});
/// 2.5/n < 1/sqrt(n-k) decided in integers; requires 0 <= k < n.
bool convergence_bound_holds(std::int64_t n, std::int64_t k);

/// Exact integer form of 2.5/n < 1/sqrt(n-k), plus the measured gaps when n fits.
LemmaReport convergence_comparison(int n, int k, const CertifyOptions& opts = {});

/// Random connected base (order >= 2) with p >= q >= 1 and total order <= max_order.
CoalesceSpec random_coalesce_spec(std::mt19937_64& rng, int max_order);

/// True iff g is isomorphic to some F(r, s, t), decided structurally.
bool is_firefly(const Graph& g);

}  // namespace qsum
