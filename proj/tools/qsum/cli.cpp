#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <thread>

#include <CLI11.hpp>

#include "qsum/certify.hpp"
#include "qsum/error.hpp"
#include "qsum/explore.hpp"
#include "qsum/graph6.hpp"
#include "qsum/reduction.hpp"
#include "qsum/report_io.hpp"

namespace qsum::cli {
namespace {

struct UsageError : Error {
  using Error::Error;
};

struct Range {
  int lo = 0;
  int hi = 0;
  bool set = false;
};

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty())
    throw UsageError("bad integer '" + std::string(text) + "' in " + std::string(what));
  return value;
}

std::vector<int> parse_ints(std::string_view text, std::string_view what) {
  std::vector<int> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse_int(text.substr(start, comma - start), what));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

// "a..b" or "a"
Range parse_range(const std::string& text, std::string_view what) {
  Range r;
  r.set = true;
  const std::size_t dots = text.find("..");
  if (dots == std::string::npos) {
    r.lo = r.hi = parse_int(text, what);
  } else {
    r.lo = parse_int(std::string_view(text).substr(0, dots), what);
    r.hi = parse_int(std::string_view(text).substr(dots + 2), what);
  }
  return r;
}

struct RangeOption {
  std::string text;
  Range get(std::string_view what, Range fallback) const {
    return text.empty() ? fallback : parse_range(text, what);
  }
};

std::vector<int> expand(Range r) {
  std::vector<int> out;
  for (int v = r.lo; v <= r.hi; ++v) out.push_back(v);
  return out;
}

std::vector<int> family_args(const std::string& spec, std::string_view prefix, std::size_t count) {
  std::vector<int> args = parse_ints(std::string_view(spec).substr(prefix.size()), spec);
  if (args.size() != count)
    throw UsageError(std::string(prefix) + " takes " + std::to_string(count) + " argument(s): " + spec);
  return args;
}

bool starts_with(const std::string& s, std::string_view prefix) { return s.rfind(prefix, 0) == 0; }

void read_graph_lines(std::istream& in, std::vector<Graph>& out) {
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty() || line == ">>graph6<<") continue;
    out.push_back(from_graph6(line));
  }
}

std::vector<Graph> read_graphs(const std::string& spec, std::istream& in) {
  std::vector<Graph> out;
  if (starts_with(spec, "graph6:")) {
    out.push_back(from_graph6(spec.substr(7)));
  } else if (starts_with(spec, "firefly:")) {
    const auto a = family_args(spec, "firefly:", 3);
    out.push_back(build_firefly({a[0], a[1], a[2]}));
  } else if (starts_with(spec, "star-plus:")) {
    out.push_back(build_star_plus_edge(family_args(spec, "star-plus:", 1)[0]));
  } else if (starts_with(spec, "join:")) {
    const auto a = family_args(spec, "join:", 2);
    out.push_back(build_join_complete_empty(a[0], a[1]));
  } else if (spec == "-") {
    read_graph_lines(in, out);
  } else {
    const std::string path = starts_with(spec, "file:") ? spec.substr(5) : spec;
    std::ifstream file(path);
    if (!file) throw UsageError("cannot read graph input '" + spec + "'");
    read_graph_lines(file, out);
  }
  if (out.empty()) throw UsageError("no graphs in input '" + spec + "'");
  return out;
}

FamilyInstance parse_family(const std::string& spec) {
  if (starts_with(spec, "star-plus:")) return FamilyInstance::star_plus_edge(family_args(spec, "star-plus:", 1)[0]);
  if (starts_with(spec, "firefly:")) {
    const auto a = family_args(spec, "firefly:", 3);
    const int n = 2 * a[0] + a[1] + 2 * a[2] + 1;
    if (a[0] == 1 && a[2] == 0) return FamilyInstance::star_plus_edge(n);
    if (a[0] == 1 && a[2] == 1) return FamilyInstance::pendant_path(n);
    if (a[0] >= 2 && a[2] == 0) return FamilyInstance::triangles(a[0], a[1]);
  }
  throw UsageError("quotient supports star-plus:n, firefly:1,s,0, firefly:1,s,1 and firefly:r,s,0 with r >= 2");
}

struct Common {
  std::string format = "json";
  double tol = kDefaultSolverTol;
  double cert_tol = kDefaultCertTol;
  int threads = 0;

  void attach(CLI::App* app) {
    app->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    app->add_option("--tol", tol, "Eigensolver tolerance")->check(CLI::PositiveNumber);
    app->add_option("--cert-tol", cert_tol, "Certification tolerance")->check(CLI::NonNegativeNumber);
    app->add_option("--threads", threads, "Worker threads (default: QSUM_THREADS or all cores)")
        ->check(CLI::NonNegativeNumber);
  }

  int workers() const {
    if (threads > 0) return threads;
    if (const char* env = std::getenv("QSUM_THREADS"); env && *env) {
      int value = 0;
      const char* end = env + std::strlen(env);
      const auto [ptr, ec] = std::from_chars(env, end, value);
      if (ec != std::errc() || ptr != end || value < 0) throw UsageError(std::string("bad QSUM_THREADS value '") + env + "'");
      if (value > 0) return value;
    }
    return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  }

  CertifyOptions certify() const { return {tol, cert_tol}; }
};

void emit(const Json& rows, const std::string& format, std::ostream& out) {
  if (format == "csv") {
    write_csv(out, rows);
  } else if (format == "text") {
    write_text(out, rows);
  } else {
    write_json(out, rows);
  }
}

int status_of(const std::vector<LemmaReport>& rows) {
  for (const auto& r : rows)
    if (r.verdict == Verdict::Fail || r.verdict == Verdict::Marginal) return kCertificationFailure;
  return kOk;
}

// -- certify ---------------------------------------------------------------

struct CertifyArgs {
  std::string lemma;
  std::vector<std::string> graphs;
  RangeOption n, r, s, t, k;
  int samples = 0;
  std::uint64_t seed = 1;
  int max_order = 20;
};

struct Axes {
  Range n, r, s, t, k;
};

std::vector<LemmaParams> grid(const Axes& a) {
  std::vector<LemmaParams> out;
  for (int n : expand(a.n))
    for (int r : expand(a.r))
      for (int s : expand(a.s))
        for (int t : expand(a.t))
          for (int k : expand(a.k)) {
            LemmaParams p;
            p.n = n;
            p.r = r;
            p.s = s;
            p.t = t;
            p.k = k;
            out.push_back(p);
          }
  return out;
}

std::vector<LemmaParams> random_graph_params(LemmaId id, Range orders, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> order(orders.lo, orders.hi);
  std::vector<LemmaParams> out;
  for (int i = 0; i < samples; ++i) {
    const int n = order(rng);
    const int room = n * (n - 1) / 2 - (n - 1);
    int hi = std::min(room, 3 * n);
    if (id == LemmaId::CyclicQ1) hi = std::min(room, std::max(1, (n - 5) / 2));
    if (id == LemmaId::FireflyQ2) hi = std::min(room, n);
    std::uniform_int_distribution<int> extra(id == LemmaId::CyclicQ1 ? std::min(1, room) : 0, std::max(hi, 0));
    LemmaParams p;
    p.graph = random_connected_graph(n, extra(rng), rng);
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<LemmaParams> certify_points(LemmaId id, const CertifyArgs& a, std::istream& in) {
  const auto rng_of = [](int lo, int hi) { return Range{lo, hi, true}; };
  const Range one{0, 0, true};
  if (!a.graphs.empty()) {
    std::vector<LemmaParams> out;
    for (const auto& spec : a.graphs)
      for (auto& g : read_graphs(spec, in)) {
        LemmaParams p;
        p.graph = std::move(g);
        out.push_back(std::move(p));
      }
    return out;
  }
  switch (id) {
    case LemmaId::Inequality:
      return random_graph_params(id, a.n.get("--n", rng_of(2, 20)), a.samples ? a.samples : 100, a.seed);
    case LemmaId::CyclicQ1:
      return random_graph_params(id, a.n.get("--n", rng_of(7, 20)), a.samples ? a.samples : 100, a.seed);
    case LemmaId::FireflyQ2:
      if (a.samples > 0) return random_graph_params(id, a.n.get("--n", rng_of(7, 20)), a.samples, a.seed);
      return grid({one, a.r.get("--r", rng_of(0, 3)), a.s.get("--s", rng_of(0, 6)), a.t.get("--t", rng_of(0, 3)), one});
    case LemmaId::Grafting: {
      std::mt19937_64 rng(a.seed);
      std::vector<LemmaParams> out;
      for (int i = 0; i < (a.samples ? a.samples : 100); ++i) {
        LemmaParams p;
        p.coalesce = random_coalesce_spec(rng, a.max_order);
        out.push_back(std::move(p));
      }
      return out;
    }
    case LemmaId::StarPlusBracket:
      return grid({a.n.get("--n", rng_of(7, 30)), one, one, one, one});
    case LemmaId::PendantPathBracket:
      return grid({a.n.get("--n", rng_of(9, 30)), one, one, one, one});
    case LemmaId::LongPathsBound:
      return grid({one, a.r.get("--r", rng_of(1, 1)), a.s.get("--s", rng_of(1, 5)), a.t.get("--t", rng_of(2, 5)), one});
    case LemmaId::TriangleQ1Bracket:
      return grid({one, a.r.get("--r", rng_of(2, 5)), a.s.get("--s", rng_of(0, 10)), one, one});
    case LemmaId::ManyTrianglesBound:
      return grid({one, a.r.get("--r", rng_of(2, 4)), a.s.get("--s", rng_of(1, 4)), a.t.get("--t", rng_of(1, 4)), one});
    case LemmaId::Convergence:
      return grid({a.n.get("--n", rng_of(9, 50)), one, one, one, a.k.get("--k", rng_of(2, 5))});
  }
  return {};
}

int cmd_certify(const CertifyArgs& a, const Common& c, std::istream& in, std::ostream& out) {
  const auto id = parse_lemma_id(a.lemma);
  if (!id) throw UsageError("unknown lemma id '" + a.lemma + "'");
  const auto rows = certify_grid(*id, certify_points(*id, a, in), c.certify(), c.workers());
  Json json = Json::array();
  for (const auto& r : rows) json.push_back(to_json(r));
  emit(json, c.format, out);
  return status_of(rows);
}

// -- other commands ----------------------------------------------------------

int cmd_compute(const std::vector<std::string>& inputs, bool spectrum, const Common& c, std::istream& in,
                std::ostream& out) {
  Json rows = Json::array();
  for (const auto& spec : inputs.empty() ? std::vector<std::string>{"-"} : inputs)
    for (const auto& g : read_graphs(spec, in)) rows.push_back(graph_summary_json(g, c.tol, spectrum));
  emit(rows, c.format, out);
  return kOk;
}

int cmd_quotient(const std::string& spec, const Common& c, std::ostream& out) {
  const FamilyInstance f = parse_family(spec);
  check_family_range(f);
  const QuotientMatrix m = lemma_quotient(f);
  const IntPolynomial exact = char_poly_exact(m.entries);
  const IntPolynomial expected = lemma_polynomial(f);
  const SignReport signs = verify_sign_pattern(expected, lemma_sign_pattern(f));
  Json row = to_json(m);
  row["char_poly"] = exact.coefficients();
  row["expected_poly"] = expected.coefficients();
  row["exact_match"] = exact.equal_up_to_sign(expected);
  row["sign_pattern"] = signs.passed;
  row["unit_multiplicity"] = unit_eigenvalue_multiplicity(f);
  const bool ok = exact.equal_up_to_sign(expected) && signs.passed;
  emit(Json::array({row}), c.format, out);
  return ok ? kOk : kCertificationFailure;
}

struct SearchArgs {
  int n = 10;
  std::string mode = "vns";
  std::uint64_t budget = 20000;
  std::uint64_t seed = 1;
  std::string schedule = "add,delete,rotate";
  int max_shake = 5;
  bool include_disconnected = false;
  bool emit_graphs = false;
};

SearchConfig search_config(const SearchArgs& a, const Common& c) {
  SearchConfig config;
  config.n = a.n;
  config.mode = a.mode == "exhaustive" ? SearchMode::Exhaustive : a.mode == "random" ? SearchMode::Random : SearchMode::Vns;
  config.budget = a.budget;
  config.seed = a.seed;
  config.connected = !a.include_disconnected;
  config.threads = c.workers();
  config.max_shake = a.max_shake;
  config.solver_tol = c.tol;
  config.schedule.clear();
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = a.schedule.find(',', start);
    const std::string name = a.schedule.substr(start, comma - start);
    if (name == "add") {
      config.schedule.push_back(Move::Add);
    } else if (name == "delete") {
      config.schedule.push_back(Move::Delete);
    } else if (name == "rotate") {
      config.schedule.push_back(Move::Rotate);
    } else {
      throw UsageError("unknown neighborhood '" + name + "'");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return config;
}

int cmd_search(const SearchArgs& a, const Common& c, std::ostream& out) {
  const ExtremalRecord rec = run_search(search_config(a, c));
  if (a.emit_graphs) {
    out << rec.graph6 << '\n';
  } else {
    emit(Json::array({to_json(rec)}), c.format, out);
  }
  return kOk;
}

int cmd_conjecture(const RangeOption& n, bool exhaustive, int exhaustive_max, const SearchArgs& a, const Common& c,
                   std::ostream& out) {
  const Range range = n.get("--n", {7, 8, true});
  ConjectureOptions opts;
  opts.search = search_config(a, c);
  opts.cert_tol = c.cert_tol;
  opts.exhaustive_max = exhaustive_max;
  if (exhaustive) {
    if (range.hi > kMaxEnumerationOrder)
      throw CapacityError("--exhaustive supports n <= " + std::to_string(kMaxEnumerationOrder));
    opts.exhaustive_max = range.hi;
  }
  if (range.lo < 2 && range.lo <= range.hi) throw UsageError("--n must start at 2 or more");
  const auto rows = conjecture_scan(range.lo, range.hi, opts);
  if (a.emit_graphs) {
    for (const auto& r : rows) out << r.best.graph6 << '\n';
    return kOk;
  }
  Json json = Json::array();
  for (const auto& r : rows) json.push_back(to_json(r));
  emit(json, c.format, out);
  return kOk;
}

int cmd_enumerate(int n, bool emit_graphs, const Common& c, std::ostream& out) {
  if (emit_graphs) {
    for (const auto& g : connected_graphs(n, c.workers())) out << to_graph6(unpack(g)) << '\n';
    return kOk;
  }
  const EnumerationStats stats = enumerate_connected(n, [](const PackedGraph&) {}, c.workers());
  emit(Json::array({to_json(stats)}), c.format, out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Signless Laplacian eigenvalue-sum toolkit", "qsum"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "qsum 0.1.0");

  auto* compute = app.add_subcommand("compute", "Spectral invariants of graphs");
  Common compute_common;
  std::vector<std::string> compute_inputs;
  bool with_spectrum = false;
  compute_common.attach(compute);
  compute->add_option("graphs", compute_inputs, "graph6:S, firefly:r,s,t, star-plus:n, join:k,t, file:PATH or - for stdin");
  compute->add_flag("--spectrum", with_spectrum, "Include the full Q-spectrum");

  auto* certify = app.add_subcommand("certify", "Check one lemma over a parameter grid");
  Common certify_common;
  CertifyArgs cert;
  certify_common.attach(certify);
  certify->add_option("lemma", cert.lemma, "ineq1, lemma2.3, lemma2.4, lemma2.5, lemma3.1 .. lemma3.5, prop3.6")->required();
  certify->add_option("--graph", cert.graphs, "Graph inputs instead of a parameter grid");
  certify->add_option("--n", cert.n.text, "Order range a..b");
  certify->add_option("--r", cert.r.text, "Triangle count range");
  certify->add_option("--s", cert.s.text, "Pendant edge count range");
  certify->add_option("--t", cert.t.text, "Pendant path count range");
  certify->add_option("--k", cert.k.text, "Clique size range");
  certify->add_option("--samples", cert.samples, "Random instances")->check(CLI::NonNegativeNumber);
  certify->add_option("--seed", cert.seed, "Random seed");
  certify->add_option("--max-order", cert.max_order, "Largest order for random coalescences")->check(CLI::Range(4, 128));

  auto* quotient = app.add_subcommand("quotient", "Quotient matrix and characteristic polynomial of a family");
  Common quotient_common;
  std::string family;
  quotient_common.attach(quotient);
  quotient->add_option("family", family, "star-plus:n or firefly:r,s,t")->required();

  const auto add_search_options = [](CLI::App* sub, SearchArgs& s) {
    sub->add_option("--mode", s.mode, "Search mode")->check(CLI::IsMember({"exhaustive", "vns", "random"}));
    sub->add_option("--budget", s.budget, "f evaluations")->check(CLI::PositiveNumber);
    sub->add_option("--seed", s.seed, "Random seed");
    sub->add_option("--schedule", s.schedule, "Neighborhood order, e.g. add,delete,rotate");
    sub->add_option("--max-shake", s.max_shake, "Largest shaking strength")->check(CLI::PositiveNumber);
    sub->add_flag("--include-disconnected", s.include_disconnected, "Search disconnected graphs too");
    sub->add_flag("--emit-graphs", s.emit_graphs, "Print argmin graph6 strings instead of the table");
  };

  auto* search = app.add_subcommand("search", "Minimize f at one order");
  Common search_common;
  SearchArgs search_args;
  search_common.attach(search);
  search->add_option("--n", search_args.n, "Order")->required()->check(CLI::Range(2, kMaxVertices));
  add_search_options(search, search_args);

  auto* conjecture = app.add_subcommand("conjecture", "Is the star plus an edge the f-minimizer, per order");
  Common conjecture_common;
  SearchArgs conjecture_args;
  RangeOption conjecture_n;
  bool exhaustive = false;
  int exhaustive_max = 8;
  conjecture_common.attach(conjecture);
  conjecture->add_option("--n", conjecture_n.text, "Order range a..b");
  conjecture->add_flag("--exhaustive", exhaustive, "Enumerate every order in the range");
  conjecture->add_option("--exhaustive-max", exhaustive_max, "Enumerate up to this order, search above")
      ->check(CLI::Range(0, kMaxEnumerationOrder));
  add_search_options(conjecture, conjecture_args);

  auto* convergence = app.add_subcommand("convergence", "Gap comparison against complete split graphs");
  Common convergence_common;
  CertifyArgs conv;
  convergence_common.attach(convergence);
  convergence->add_option("--n", conv.n.text, "Order range a..b");
  convergence->add_option("--k", conv.k.text, "Clique size range");

  auto* enumerate = app.add_subcommand("enumerate", "Connected graphs up to isomorphism");
  Common enumerate_common;
  int enumerate_n = 0;
  bool enumerate_emit = false;
  enumerate_common.attach(enumerate);
  enumerate->add_option("--n", enumerate_n, "Order")->required();
  enumerate->add_flag("--emit-graphs", enumerate_emit, "Print graph6 strings, one per line");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*compute) return cmd_compute(compute_inputs, with_spectrum, compute_common, in, out);
    if (*certify) return cmd_certify(cert, certify_common, in, out);
    if (*quotient) return cmd_quotient(family, quotient_common, out);
    if (*search) return cmd_search(search_args, search_common, out);
    if (*conjecture)
      return cmd_conjecture(conjecture_n, exhaustive, exhaustive_max, conjecture_args, conjecture_common, out);
    if (*convergence) {
      conv.lemma = "prop3.6";
      return cmd_certify(conv, convergence_common, in, out);
    }
    if (*enumerate) return cmd_enumerate(enumerate_n, enumerate_emit, enumerate_common, out);
  } catch (const SolverError& e) {
    err << "qsum: numerical failure: " << e.what() << '\n';
    return kNumericalFailure;
  } catch (const ArithmeticError& e) {
    err << "qsum: numerical failure: " << e.what() << '\n';
    return kNumericalFailure;
  } catch (const Error& e) {
    err << "qsum: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "qsum: " << e.what() << '\n';
    return kNumericalFailure;
  }
  return kUsageError;
}

}  // namespace qsum::cli
