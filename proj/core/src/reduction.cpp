#include "qsum/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "qsum/error.hpp"

namespace qsum {
namespace {

std::vector<int> range(int begin, int end) {
  std::vector<int> out(static_cast<std::size_t>(std::max(0, end - begin)));
  std::iota(out.begin(), out.end(), begin);
  return out;
}

std::vector<std::vector<int>> family_cells(const FamilyInstance& f) {
  const FireflyParams p = firefly_params(f);
  const FireflyLayout layout = firefly_layout(p);
  const std::vector<int> triangle = range(layout.triangles_begin, layout.pendants_begin);
  const std::vector<int> leaves = range(layout.pendants_begin, layout.paths_begin);
  switch (f.family) {
    case Family::StarPlusEdge:
      return {triangle, {layout.center}, leaves};
    case Family::PendantPathFirefly:
      return {triangle, {layout.center}, {layout.paths_begin}, {layout.paths_begin + 1}, leaves};
    case Family::TriangleFirefly:
      return {{layout.center}, leaves, triangle};
  }
  throw InvalidParameter("unknown family");
}

IntMatrix closed_form_quotient(const FamilyInstance& f) {
  const std::int64_t n = f.n;
  const std::int64_t r = f.r;
  const std::int64_t s = f.s;
  switch (f.family) {
    case Family::StarPlusEdge:
      return IntMatrix{{3, 1, 0}, {2, n - 1, n - 3}, {0, 1, 1}};
    case Family::PendantPathFirefly:
      return IntMatrix{{3, 1, 0, 0, 0}, {2, n - 2, 1, 0, n - 5}, {0, 1, 2, 1, 0}, {0, 0, 1, 1, 0}, {0, 1, 0, 0, 1}};
    case Family::TriangleFirefly:
      return IntMatrix{{2 * r + s, s, 2 * r}, {1, 1, 0}, {1, 0, 3}};
  }
  throw InvalidParameter("unknown family");
}

}  // namespace

void check_family_range(const FamilyInstance& f) {
  switch (f.family) {
    case Family::StarPlusEdge:
      if (f.n < 7) throw DomainError("F(1,n-3,0) family needs n >= 7, got n=" + std::to_string(f.n));
      break;
    case Family::PendantPathFirefly:
      if (f.n < 9) throw DomainError("F(1,n-5,1) family needs n >= 9, got n=" + std::to_string(f.n));
      break;
    case Family::TriangleFirefly:
      if (f.r < 2 || f.s < 0 || 2 * f.r + f.s + 1 < 6)
        throw DomainError("F(r,s,0) family needs r >= 2, s >= 0 and 2r+s+1 >= 6");
      if (f.n != 2 * f.r + f.s + 1) throw InvalidParameter("F(r,s,0) order must be 2r+s+1");
      break;
  }
}

FireflyParams firefly_params(const FamilyInstance& f) {
  switch (f.family) {
    case Family::StarPlusEdge:
      return {1, f.n - 3, 0};
    case Family::PendantPathFirefly:
      return {1, f.n - 5, 1};
    case Family::TriangleFirefly:
      return {f.r, f.s, 0};
  }
  throw InvalidParameter("unknown family");
}

Graph family_graph(const FamilyInstance& f) {
  check_family_range(f);
  return build_firefly(firefly_params(f));
}

std::string family_name(const FamilyInstance& f) {
  const FireflyParams p = firefly_params(f);
  return "F(" + std::to_string(p.r) + "," + std::to_string(p.s) + "," + std::to_string(p.t) + ")";
}

QuotientMatrix equitable_quotient(const Graph& g, const std::vector<std::vector<int>>& cells, std::string source) {
  const int n = g.order();
  std::vector<int> cell_of(static_cast<std::size_t>(n), -1);
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (cells[c].empty()) throw InvalidParameter("partition cell " + std::to_string(c) + " is empty");
    for (int v : cells[c]) {
      if (v < 0 || v >= n) throw InvalidParameter("partition vertex " + std::to_string(v) + " out of range");
      if (cell_of[v] != -1) throw InvalidParameter("vertex " + std::to_string(v) + " appears in two cells");
      cell_of[v] = static_cast<int>(c);
    }
  }
  if (std::count(cell_of.begin(), cell_of.end(), -1) != 0) throw InvalidParameter("partition does not cover every vertex");

  const int k = static_cast<int>(cells.size());
  // row_sums(v, j) = sum over w in cell j of Q(v, w)
  auto row_sum = [&](int v, int j) {
    std::int64_t sum = 0;
    for (int w : cells[j]) sum += g.adjacent(v, w) ? 1 : 0;
    if (cell_of[v] == j) sum += g.degree(v);
    return sum;
  };

  QuotientMatrix out;
  out.entries = IntMatrix(k);
  out.cells = cells;
  out.source = std::move(source);
  for (int i = 0; i < k; ++i) {
    const int lead = cells[i].front();
    for (int j = 0; j < k; ++j) {
      const std::int64_t value = row_sum(lead, j);
      for (int v : cells[i]) {
        if (row_sum(v, j) != value) {
          throw EquitabilityError("partition not equitable: vertices " + std::to_string(lead) + " and " +
                                      std::to_string(v) + " of cell " + std::to_string(i) +
                                      " see different counts in cell " + std::to_string(j),
                                  lead, v);
        }
      }
      out.entries(i, j) = value;
    }
  }
  return out;
}

QuotientMatrix lemma_quotient(const FamilyInstance& f) {
  check_family_range(f);
  const Graph g = family_graph(f);
  const auto cells = family_cells(f);
  const IntMatrix closed = closed_form_quotient(f);

  std::vector<int> kept;
  std::vector<std::vector<int>> nonempty;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (!cells[c].empty()) {
      kept.push_back(static_cast<int>(c));
      nonempty.push_back(cells[c]);
    }
  }
  const QuotientMatrix measured = equitable_quotient(g, nonempty);
  for (std::size_t i = 0; i < kept.size(); ++i)
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (measured.entries(static_cast<int>(i), static_cast<int>(j)) != closed(kept[i], kept[j]))
        throw Error("closed-form quotient disagrees with the constructed graph for " + family_name(f));

  QuotientMatrix out;
  out.entries = closed;
  out.cells = cells;
  out.source = family_name(f);
  return out;
}

IntPolynomial lemma_polynomial(const FamilyInstance& f) {
  check_family_range(f);
  const std::int64_t n = f.n;
  const std::int64_t r = f.r;
  const std::int64_t s = f.s;
  switch (f.family) {
    case Family::StarPlusEdge:
      return IntPolynomial({1, -(n + 3), 3 * n, -4});
    case Family::PendantPathFirefly:
      return IntPolynomial({1, -(n + 5), 6 * n + 4, -(10 * n - 2), 3 * n + 12, -4});
    case Family::TriangleFirefly:
      return IntPolynomial({-1, s + 2 * r + 4, -(3 * s + 6 * r + 3), 4 * r});
  }
  throw InvalidParameter("unknown family");
}

int unit_eigenvalue_multiplicity(const FamilyInstance& f) {
  check_family_range(f);
  switch (f.family) {
    case Family::StarPlusEdge:
      return f.n - 3;
    case Family::PendantPathFirefly:
      return f.n - 5;
    case Family::TriangleFirefly:
      return f.r + f.s - 1;
  }
  throw InvalidParameter("unknown family");
}

long double SignPoint::value() const {
  if (const auto* q = std::get_if<Rational>(&at)) return q->value();
  return std::get<RealPoint>(at).value;
}

SignPattern::SignPattern(std::vector<SignPoint> points) : points_(std::move(points)) {
  for (const auto& p : points_)
    if (p.expected_sign != 1 && p.expected_sign != -1) throw InvalidParameter("expected sign must be +1 or -1");
  for (std::size_t i = 1; i < points_.size(); ++i)
    if (!(points_[i - 1].value() < points_[i].value()))
      throw InvalidParameter("sign pattern points must be strictly increasing (" + points_[i - 1].label + ", " +
                             points_[i].label + ")");
}

SignReport verify_sign_pattern(const IntPolynomial& p, const SignPattern& pattern) {
  SignReport report;
  report.passed = true;
  for (const auto& point : pattern.points()) {
    SignCheck check;
    check.label = point.label;
    check.point = point.value();
    check.expected_sign = point.expected_sign;
    if (const auto* q = std::get_if<Rational>(&point.at)) {
      const auto v = p.evaluate_exact(*q);
      check.exact = true;
      check.value = v.value;
      check.observed_sign = v.sign;
    } else {
      const auto& real = std::get<RealPoint>(point.at);
      const auto v = p.evaluate(real.value, real.error);
      check.value = v.value;
      check.error = v.error;
      if (std::fabs(v.value) > v.error) check.observed_sign = v.value > 0 ? 1 : -1;
    }
    check.ok = check.observed_sign == check.expected_sign;
    if (!check.ok && report.passed) {
      report.passed = false;
      report.failed_point = check.label;
    }
    report.checks.push_back(std::move(check));
  }
  return report;
}

SignPattern lemma_sign_pattern(const FamilyInstance& f) {
  check_family_range(f);
  const std::int64_t n = f.n;
  std::vector<SignPoint> points;
  switch (f.family) {
    case Family::StarPlusEdge:
      points = {
          {"0", Rational(0), -1},
          {"1", Rational(1), 1},
          {"3-2.5/n", Rational(6 * n - 5, 2 * n), 1},
          {"3-1/n", Rational(3 * n - 1, n), -1},
          {"n", Rational(n), -1},
          {"n+1/n", Rational(n * n + 1, n), 1},
      };
      break;
    case Family::PendantPathFirefly: {
      const long double x = 3.0L - 0.8L / std::log(static_cast<long double>(n));
      const long double ulp = std::numeric_limits<long double>::epsilon();
      points = {
          {"0", Rational(0), -1},
          {"0.3", Rational(3, 10), 1},
          {"1", Rational(1), -1},
          {"2.7", Rational(27, 10), 1},
          {"3-0.8/ln(n)", RealPoint{x, 8.0L * ulp * x}, 1},
          {"3-5/(4n)", Rational(12 * n - 5, 4 * n), -1},
          {"n-1", Rational(n - 1), -1},
          {"n-1+5/(4n)", Rational(4 * n * n - 4 * n + 5, 4 * n), 1},
      };
      std::sort(points.begin(), points.end(),
                [](const SignPoint& a, const SignPoint& b) { return a.value() < b.value(); });
      break;
    }
    case Family::TriangleFirefly: {
      const std::int64_t base = 2 * f.r + f.s;
      points = {
          {"2r+s+1", Rational(base + 1), 1},
          {"2r+s+3/2", Rational(2 * base + 3, 2), -1},
      };
      break;
    }
  }
  return SignPattern(std::move(points));
}

double root_bracket(const IntPolynomial& p, double lo, double hi, double tol) {
  if (!(tol > 0.0)) throw InvalidParameter("bisection tolerance must be positive");
  if (lo > hi) std::swap(lo, hi);
  auto sign_at = [&](long double x) {
    const long double v = p.evaluate(x).value;
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
  };
  long double a = lo;
  long double b = hi;
  int sa = sign_at(a);
  const int sb = sign_at(b);
  if (sa == 0) return lo;
  if (sb == 0) return hi;
  if (sa == sb) throw BracketError("no sign change on [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  while (b - a > tol) {
    const long double mid = a + (b - a) / 2;
    if (mid <= a || mid >= b) break;
    const int sm = sign_at(mid);
    if (sm == 0) return static_cast<double>(mid);
    if (sm == sa) {
      a = mid;
    } else {
      b = mid;
    }
  }
  return static_cast<double>(a + (b - a) / 2);
}

}  // namespace qsum
