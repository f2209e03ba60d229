#include "qsum/certify.hpp"

#include <algorithm>
#include <cmath>

#include "parallel.hpp"
#include "qsum/error.hpp"
#include "qsum/explore.hpp"
#include "qsum/graph6.hpp"
#include "qsum/reduction.hpp"

namespace qsum {
namespace {

struct Builder {
  LemmaReport report;
  const CertifyOptions& opts;

  Builder(LemmaId id, const CertifyOptions& o) : opts(o) { report.lemma = std::string(lemma_tag(id)); }

  void param(std::string name, std::int64_t value) { report.params.emplace_back(std::move(name), value); }
  void quantity(std::string name, double value) { report.quantities.emplace_back(std::move(name), value); }

  /// value below the upper bound
  void below(std::string name, double value, double bound, bool strict = true) {
    report.margins.push_back({std::move(name), bound - value, strict ? opts.cert_tol : -opts.cert_tol});
  }
  /// value above the lower bound
  void above(std::string name, double value, double bound, bool strict = true) {
    report.margins.push_back({std::move(name), value - bound, strict ? opts.cert_tol : -opts.cert_tol});
  }
  void within(std::string name, double value, double target, double window) {
    report.margins.push_back({std::move(name), window - std::abs(value - target), 0.0});
  }
  void holds(std::string name, bool ok) { report.margins.push_back({std::move(name), ok ? 1.0 : -1.0, 0.0}); }
  void at_least(std::string name, int count, int bound) {
    report.margins.push_back({std::move(name), static_cast<double>(count - bound), -0.5});
  }

  LemmaReport precondition(std::string why) {
    report.verdict = Verdict::Precondition;
    report.note = std::move(why);
    report.margins.clear();
    return std::move(report);
  }

  LemmaReport finish(std::string note = {}) {
    quantity("solver_tol", opts.solver_tol);
    report.verdict = classify(report.margins, opts.cert_tol);
    if (!note.empty()) report.note = std::move(note);
    return std::move(report);
  }

  GapSummary spectrum_of(const Graph& g, const std::string& prefix = {}) {
    return record(gap_summary(g, opts.solver_tol), prefix);
  }

  GapSummary spectrum_of(const Graph& g, const Spectrum& spec) {
    GapSummary s;
    s.edges = edge_count(g);
    s.q1 = spec.values[0];
    s.q2 = spec.values[1];
    s.s2 = s.q1 + s.q2;
    s.f = s.edges + 3.0 - s.s2;
    s.tol = spec.tol;
    return record(s, {});
  }

  GapSummary record(const GapSummary& s, const std::string& prefix) {
    quantity(prefix + "q1", s.q1);
    quantity(prefix + "q2", s.q2);
    quantity(prefix + "S2", s.s2);
    quantity(prefix + "f", s.f);
    quantity(prefix + "e", s.edges);
    return s;
  }

  void firefly_params(const FireflyParams& p) {
    param("r", p.r);
    param("s", p.s);
    param("t", p.t);
    param("n", p.order());
  }
};

void add_sign_report(Builder& b, const SignReport& signs) {
  for (const auto& c : signs.checks) b.quantity("poly(" + c.label + ")", static_cast<double>(c.value));
  b.holds("sign_pattern", signs.passed);
  if (!signs.passed) b.report.note = "sign mismatch at " + signs.failed_point;
}

void add_quotient_checks(Builder& b, const FamilyInstance& f, const Spectrum& spec) {
  const QuotientMatrix m = lemma_quotient(f);
  const IntPolynomial exact = char_poly_exact(m.entries);
  b.holds("quotient_char_poly", exact.equal_up_to_sign(lemma_polynomial(f)));
  add_sign_report(b, verify_sign_pattern(lemma_polynomial(f), lemma_sign_pattern(f)));
  const int mult = multiplicity(spec, 1.0, std::max(1e-6, spec.tol));
  b.quantity("mult(1)", mult);
  b.at_least("mult(1)", mult, unit_eigenvalue_multiplicity(f));
}

}  // namespace

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Marginal:
      return "marginal";
    case Verdict::Fail:
      return "fail";
    case Verdict::Precondition:
      return "precondition";
  }
  return "unknown";
}

std::optional<double> LemmaReport::quantity(std::string_view name) const {
  for (const auto& [k, v] : quantities)
    if (k == name) return v;
  return std::nullopt;
}

std::optional<double> LemmaReport::margin(std::string_view name) const {
  for (const auto& m : margins)
    if (m.name == name) return m.value;
  return std::nullopt;
}

Verdict classify(const std::vector<Margin>& margins, double cert_tol) {
  Verdict worst = Verdict::Pass;
  for (const auto& m : margins) {
    if (m.value > m.required) continue;
    if (m.value > m.required - cert_tol) {
      worst = Verdict::Marginal;
    } else {
      return Verdict::Fail;
    }
  }
  return worst;
}

std::optional<LemmaId> parse_lemma_id(std::string_view text) {
  static constexpr std::pair<std::string_view, LemmaId> kIds[] = {
      {"ineq1", LemmaId::Inequality},          {"lemma2.3", LemmaId::CyclicQ1},
      {"lemma2.4", LemmaId::FireflyQ2},        {"lemma2.5", LemmaId::Grafting},
      {"lemma3.1", LemmaId::StarPlusBracket},  {"lemma3.2", LemmaId::PendantPathBracket},
      {"lemma3.3", LemmaId::LongPathsBound},   {"lemma3.4", LemmaId::TriangleQ1Bracket},
      {"lemma3.5", LemmaId::ManyTrianglesBound}, {"prop3.6", LemmaId::Convergence},
  };
  for (auto [tag, id] : kIds)
    if (tag == text) return id;
  return std::nullopt;
}

std::string_view lemma_tag(LemmaId id) {
  switch (id) {
    case LemmaId::Inequality:
      return "ineq1";
    case LemmaId::CyclicQ1:
      return "lemma2.3";
    case LemmaId::FireflyQ2:
      return "lemma2.4";
    case LemmaId::Grafting:
      return "lemma2.5";
    case LemmaId::StarPlusBracket:
      return "lemma3.1";
    case LemmaId::PendantPathBracket:
      return "lemma3.2";
    case LemmaId::LongPathsBound:
      return "lemma3.3";
    case LemmaId::TriangleQ1Bracket:
      return "lemma3.4";
    case LemmaId::ManyTrianglesBound:
      return "lemma3.5";
    case LemmaId::Convergence:
      return "prop3.6";
  }
  return "unknown";
}

bool is_firefly(const Graph& g) {
  const int n = g.order();
  if (n == 1) return true;
  if (!is_connected(g)) return false;
  for (int c = 0; c < n; ++c) {
    bool ok = true;
    VertexSet seen;
    seen.set(static_cast<std::size_t>(c));
    for (int v = 0; v < n && ok; ++v) {
      if (seen.test(static_cast<std::size_t>(v))) continue;
      // The component of v in G - c has at most two vertices.
      VertexSet others = g.neighbors(v);
      others.reset(static_cast<std::size_t>(c));
      const int deg_out = static_cast<int>(others.count());
      if (deg_out == 0) {
        ok = g.adjacent(v, c);
        seen.set(static_cast<std::size_t>(v));
        continue;
      }
      if (deg_out > 1) {
        ok = false;
        break;
      }
      int w = 0;
      while (!others.test(static_cast<std::size_t>(w))) ++w;
      VertexSet beyond = g.neighbors(w);
      beyond.reset(static_cast<std::size_t>(c));
      beyond.reset(static_cast<std::size_t>(v));
      if (beyond.any()) {
        ok = false;
        break;
      }
      ok = g.adjacent(v, c) || g.adjacent(w, c);
      seen.set(static_cast<std::size_t>(v));
      seen.set(static_cast<std::size_t>(w));
    }
    if (ok) return true;
  }
  return false;
}

LemmaReport check_s2_inequality(const Graph& g, const CertifyOptions& opts) {
  Builder b(LemmaId::Inequality, opts);
  b.param("n", g.order());
  b.report.graph6 = to_graph6(g);
  if (g.order() < 2) return b.precondition("needs at least two vertices");
  const GapSummary s = b.spectrum_of(g);
  b.below("S2<=e+3", s.s2, s.edges + 3.0, false);
  return b.finish();
}

LemmaReport check_cyclic_q1(const Graph& g, const CertifyOptions& opts) {
  Builder b(LemmaId::CyclicQ1, opts);
  const int n = g.order();
  b.param("n", n);
  b.report.graph6 = to_graph6(g);
  if (!is_connected(g)) return b.precondition("graph is not connected");
  const int c = cyclomatic(g);
  const int delta = max_degree(g);
  b.param("c", c);
  b.param("max_degree", delta);
  if (c < 1) return b.precondition("needs c >= 1");
  if (delta > n - 3) return b.precondition("needs max degree <= n-3");
  if (n < 2 * c + 5) return b.precondition("needs n >= 2c+5");
  const GapSummary s = b.spectrum_of(g);
  b.below("q1<=n-1", s.q1, n - 1.0, false);
  return b.finish();
}

LemmaReport check_firefly_q2(const FireflyParams& p, const CertifyOptions& opts) {
  Builder b(LemmaId::FireflyQ2, opts);
  b.firefly_params(p);
  const int n = p.order();
  if (n < 7) return b.precondition("needs n >= 7");
  const Graph g = build_firefly(p);
  const GapSummary s = b.spectrum_of(g);
  const double lower = 3.0 - 2.5 / n;
  if (p.r == 1) {
    b.above("q2>3-2.5/n", s.q2, lower);
    b.below("q2<3", s.q2, 3.0);
  } else if (p.r >= 2) {
    b.within("|q2-3|<=tol", s.q2, 3.0, opts.cert_tol);
  } else {
    // No triangle: q2 must avoid both windows.
    b.report.margins.push_back({"q2 outside windows", std::max(lower - s.q2, s.q2 - 3.0 - opts.cert_tol), 0.0});
  }
  return b.finish();
}

LemmaReport q2_window_evidence(const Graph& g, const CertifyOptions& opts) {
  Builder b(LemmaId::FireflyQ2, opts);
  const int n = g.order();
  b.param("n", n);
  b.report.graph6 = to_graph6(g);
  if (n < 7) return b.precondition("needs n >= 7");
  if (!is_connected(g)) return b.precondition("graph is not connected");
  if (is_firefly(g)) return b.precondition("graph is a firefly; use the firefly checker");
  const GapSummary s = b.spectrum_of(g);
  const double lower = 3.0 - 2.5 / n;
  b.report.margins.push_back({"q2 outside windows", std::max(lower - s.q2, s.q2 - 3.0 - opts.cert_tol), 0.0});
  return b.finish("converse direction, reported as evidence");
}

LemmaReport check_grafting_monotonicity(const CoalesceSpec& spec, const CertifyOptions& opts) {
  Builder b(LemmaId::Grafting, opts);
  b.param("base_n", spec.base.order());
  b.param("v", spec.v);
  b.param("p", spec.p);
  b.param("q", spec.q);
  b.report.graph6 = to_graph6(spec.base);
  if (spec.base.order() < 2) return b.precondition("base graph needs at least two vertices");
  if (!is_connected(spec.base)) return b.precondition("base graph is not connected");
  if (spec.q < 1 || spec.p < spec.q) return b.precondition("needs p >= q >= 1");
  const Coalescence before = coalesce_paths(spec);
  const Coalescence after = graft_edge(before);
  const double q1_before = q_spectrum(before.graph, opts.solver_tol).largest();
  const double q1_after = q_spectrum(after.graph, opts.solver_tol).largest();
  b.quantity("q1_before", q1_before);
  b.quantity("q1_after", q1_after);
  b.quantity("e_before", edge_count(before.graph));
  b.quantity("e_after", edge_count(after.graph));
  b.above("q1 decreases", q1_before, q1_after);
  return b.finish();
}

LemmaReport check_star_plus_bracket(int n, const CertifyOptions& opts) {
  Builder b(LemmaId::StarPlusBracket, opts);
  b.param("n", n);
  if (n < 7) return b.precondition("needs n >= 7");
  const auto f = FamilyInstance::star_plus_edge(n);
  const Graph g = family_graph(f);
  const Spectrum spec = q_spectrum(g, opts.solver_tol);
  const GapSummary s = b.spectrum_of(g, spec);
  b.above("q1>n", s.q1, n);
  b.below("q1<n+1/n", s.q1, n + 1.0 / n);
  b.above("q2>3-2.5/n", s.q2, 3.0 - 2.5 / n);
  b.below("q2<3-1/n", s.q2, 3.0 - 1.0 / n);
  b.above("S2>e+3-2.5/n", s.s2, s.edges + 3.0 - 2.5 / n);
  b.below("S2<e+3", s.s2, s.edges + 3.0);
  add_quotient_checks(b, f, spec);
  return b.finish();
}

LemmaReport check_pendant_path_bracket(int n, const CertifyOptions& opts) {
  Builder b(LemmaId::PendantPathBracket, opts);
  b.param("n", n);
  if (n < 9) return b.precondition("needs n >= 9");
  const auto f = FamilyInstance::pendant_path(n);
  const Graph g = family_graph(f);
  const Spectrum spec = q_spectrum(g, opts.solver_tol);
  const GapSummary s = b.spectrum_of(g, spec);
  const double log_term = 0.8 / std::log(static_cast<double>(n));
  b.above("q1>n-1", s.q1, n - 1.0);
  b.below("q1<n-1+5/(4n)", s.q1, n - 1.0 + 5.0 / (4.0 * n));
  b.above("q2>3-0.8/ln(n)", s.q2, 3.0 - log_term);
  b.below("q2<3-5/(4n)", s.q2, 3.0 - 5.0 / (4.0 * n));
  b.above("S2>e+2-0.8/ln(n)", s.s2, s.edges + 2.0 - log_term);
  b.below("S2<e+2", s.s2, s.edges + 2.0);
  add_quotient_checks(b, f, spec);
  return b.finish();
}

LemmaReport check_long_paths_bound(const FireflyParams& p, const CertifyOptions& opts) {
  Builder b(LemmaId::LongPathsBound, opts);
  b.firefly_params(p);
  if (p.r != 1) return b.precondition("needs r = 1");
  if (p.s < 1 || p.t < 2) return b.precondition("needs s >= 1 and t >= 2");
  const Graph g = build_firefly(p);
  const int n = g.order();
  const int c = cyclomatic(g);
  const int delta = max_degree(g);
  b.quantity("c", c);
  b.quantity("max_degree", delta);
  // The q1 step borrows the sparse c-cyclic bound; its hypotheses are checked here.
  b.holds("cyclic hypotheses", c >= 1 && delta <= n - 3 && n >= 2 * c + 5);
  const GapSummary s = b.spectrum_of(g);
  b.below("q1<=s+2t+2", s.q1, p.s + 2.0 * p.t + 2.0, false);
  b.below("q2<3", s.q2, 3.0);
  b.below("S2<e+2", s.s2, s.edges + 2.0);
  return b.finish();
}

LemmaReport check_triangle_q1_bracket(int r, int s_count, const CertifyOptions& opts) {
  Builder b(LemmaId::TriangleQ1Bracket, opts);
  b.param("r", r);
  b.param("s", s_count);
  b.param("n", 2 * r + s_count + 1);
  if (r < 2 || s_count < 0 || 2 * r + s_count + 1 < 6) return b.precondition("needs r >= 2 and 2r+s+1 >= 6");
  const auto f = FamilyInstance::triangles(r, s_count);
  const Graph g = family_graph(f);
  const Spectrum spec = q_spectrum(g, opts.solver_tol);
  const GapSummary s = b.spectrum_of(g, spec);
  const double base = 2.0 * r + s_count;
  b.above("q1>2r+s+1", s.q1, base + 1.0);
  b.below("q1<2r+s+3/2", s.q1, base + 1.5);
  b.below("q2<=n-2", s.q2, base - 1.0, false);
  add_quotient_checks(b, f, spec);
  return b.finish();
}

LemmaReport check_many_triangles_bound(const FireflyParams& p, const CertifyOptions& opts) {
  Builder b(LemmaId::ManyTrianglesBound, opts);
  b.firefly_params(p);
  if (p.r < 2 || p.s < 1 || p.t < 1) return b.precondition("needs r >= 2 and s, t >= 1");
  const Graph g = build_firefly(p);
  const GapSummary s = b.spectrum_of(g);
  const FireflyParams folded{p.r, p.s + 2 * p.t, 0};
  const double folded_q1 = q_spectrum(build_firefly(folded), opts.solver_tol).largest();
  b.quantity("q1(F(r,s+2t,0))", folded_q1);
  b.below("S2<=e+2.5", s.s2, s.edges + 2.5, false);
  b.within("|q2-3|<=tol", s.q2, 3.0, opts.cert_tol);
  b.below("q1<q1(F(r,s+2t,0))", s.q1, folded_q1);
  b.below("q1(F(r,s+2t,0))<2r+s+2t+3/2", folded_q1, 2.0 * p.r + p.s + 2.0 * p.t + 1.5);
  return b.finish(p.s == 1 && p.t == 1 ? "boundary case s=t=1" : "");
}

bool convergence_bound_holds(std::int64_t n, std::int64_t k) {
  if (n <= 0 || k < 0 || k >= n) throw DomainError("needs 0 <= k < n");
  // both sides positive, so squaring keeps the order: 25 (n-k) < 4 n^2
  return 25 * (n - k) < 4 * n * n;
}

LemmaReport convergence_comparison(int n, int k, const CertifyOptions& opts) {
  Builder b(LemmaId::Convergence, opts);
  b.param("n", n);
  b.param("k", k);
  if (n < 9 || k < 2 || k >= n) return b.precondition("needs n >= 9 and 2 <= k < n");
  b.quantity("2.5/n", 2.5 / n);
  b.quantity("1/sqrt(n-k)", 1.0 / std::sqrt(static_cast<double>(n - k)));
  b.holds("25(n-k)<4n^2", convergence_bound_holds(n, k));
  if (n <= kMaxVertices) {
    const double star = f_gap(build_star_plus_edge(n), opts.solver_tol);
    const double split = f_gap(build_join_complete_empty(k, n - k), opts.solver_tol);
    b.quantity("f(F(1,n-3,0))", star);
    b.quantity("f(Kk v coKn-k)", split);
    b.quantity("ratio", star / split);
    b.quantity("star_gap_smaller", star < split ? 1.0 : 0.0);
  }
  return b.finish();
}

CoalesceSpec random_coalesce_spec(std::mt19937_64& rng, int max_order) {
  if (max_order < 4) throw InvalidParameter("coalescence needs max_order >= 4");
  std::uniform_int_distribution<int> base_order(2, max_order - 2);
  const int m = base_order(rng);
  const int room = max_order - m;
  std::uniform_int_distribution<int> q_pick(1, room / 2);
  const int q = q_pick(rng);
  std::uniform_int_distribution<int> p_pick(q, room - q);
  const int p = p_pick(rng);
  const int max_extra = (m - 1) * (m - 2) / 2;
  std::uniform_int_distribution<int> extra(0, std::min(max_extra, 2 * m));
  Graph base = random_connected_graph(m, extra(rng), rng);
  std::uniform_int_distribution<int> vertex(0, m - 1);
  const int v = vertex(rng);
  return CoalesceSpec{std::move(base), v, p, q};
}

LemmaReport check_lemma(LemmaId id, const LemmaParams& params, const CertifyOptions& opts) {
  auto need_graph = [&]() -> const Graph& {
    if (!params.graph) throw InvalidParameter(std::string(lemma_tag(id)) + " needs a graph");
    return *params.graph;
  };
  const FireflyParams firefly{params.r, params.s, params.t};
  switch (id) {
    case LemmaId::Inequality:
      return check_s2_inequality(need_graph(), opts);
    case LemmaId::CyclicQ1:
      return check_cyclic_q1(need_graph(), opts);
    case LemmaId::FireflyQ2:
      if (params.graph) return q2_window_evidence(*params.graph, opts);
      return check_firefly_q2(firefly, opts);
    case LemmaId::Grafting:
      if (!params.coalesce) throw InvalidParameter("lemma2.5 needs a coalescence spec");
      return check_grafting_monotonicity(*params.coalesce, opts);
    case LemmaId::StarPlusBracket:
      return check_star_plus_bracket(params.n, opts);
    case LemmaId::PendantPathBracket:
      return check_pendant_path_bracket(params.n, opts);
    case LemmaId::LongPathsBound:
      return check_long_paths_bound({params.r == 0 ? 1 : params.r, params.s, params.t}, opts);
    case LemmaId::TriangleQ1Bracket:
      return check_triangle_q1_bracket(params.r, params.s, opts);
    case LemmaId::ManyTrianglesBound:
      return check_many_triangles_bound(firefly, opts);
    case LemmaId::Convergence:
      return convergence_comparison(params.n, params.k, opts);
  }
  throw InvalidParameter("unknown lemma id");
}

std::vector<LemmaReport> certify_grid(LemmaId id, const std::vector<LemmaParams>& grid, const CertifyOptions& opts,
                                      int threads) {
  std::vector<LemmaReport> rows(grid.size());
  detail::parallel_for(grid.size(), threads,
                       [&](std::size_t i, std::size_t) { rows[i] = check_lemma(id, grid[i], opts); });
  return rows;
}

}  // namespace qsum
