#include "qsum/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <string>

#include "qsum/error.hpp"

namespace qsum {

SymmetricMatrix::SymmetricMatrix(int order) : order_(order) {
  if (order < 1 || order > kMaxVertices)
    throw CapacityError("matrix order " + std::to_string(order) + " outside 1.." + std::to_string(kMaxVertices));
  entries_.assign(static_cast<std::size_t>(order) * static_cast<std::size_t>(order), 0.0);
}

void SymmetricMatrix::set(int i, int j, double value) {
  if (i < 0 || j < 0 || i >= order_ || j >= order_) throw InvalidParameter("matrix index out of range");
  entries_[index(i, j)] = value;
  entries_[index(j, i)] = value;
}

double SymmetricMatrix::trace() const {
  double t = 0.0;
  for (int i = 0; i < order_; ++i) t += (*this)(i, i);
  return t;
}

double SymmetricMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double x : entries_) s += x * x;
  return std::sqrt(s);
}

double Spectrum::sum() const { return std::accumulate(values.begin(), values.end(), 0.0); }

SymmetricMatrix adjacency_matrix(const Graph& g) {
  SymmetricMatrix a(g.order());
  for (auto [u, v] : g.edges()) a.set(u, v, 1.0);
  return a;
}

SymmetricMatrix signless_laplacian(const Graph& g) {
  SymmetricMatrix q = adjacency_matrix(g);
  for (int v = 0; v < g.order(); ++v) q.set(v, v, static_cast<double>(g.degree(v)));
  return q;
}

Spectrum eigenvalues(const SymmetricMatrix& m, double tol) {
  if (!(tol > 0.0)) throw InvalidParameter("solver tolerance must be positive");
  constexpr int kMaxSweeps = 100;

  const int n = m.order();
  const auto at = [n](int i, int j) { return static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j); };
  std::vector<double> a(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[at(i, j)] = m(i, j);

  const double norm = m.frobenius_norm();
  const double target = tol * std::max(1.0, norm);
  auto off_norm = [&] {
    double s = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) s += a[at(p, q)] * a[at(p, q)];
    return std::sqrt(2.0 * s);
  };

  double off = off_norm();
  int sweep = 0;
  while (off > target) {
    if (++sweep > kMaxSweeps)
      throw SolverError("Jacobi iteration did not converge after " + std::to_string(kMaxSweeps) +
                        " sweeps (off-diagonal norm " + std::to_string(off) + ")");
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a[at(p, q)];
        if (apq == 0.0) continue;
        const double theta = (a[at(q, q)] - a[at(p, p)]) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);
        a[at(p, p)] -= t * apq;
        a[at(q, q)] += t * apq;
        a[at(p, q)] = 0.0;
        a[at(q, p)] = 0.0;
        for (int r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double g = a[at(r, p)];
          const double h = a[at(r, q)];
          const double rp = g - s * (h + g * tau);
          const double rq = h + s * (g - h * tau);
          a[at(r, p)] = rp;
          a[at(p, r)] = rp;
          a[at(r, q)] = rq;
          a[at(q, r)] = rq;
        }
      }
    }
    off = off_norm();
  }

  Spectrum out;
  out.values.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.values[i] = a[at(i, i)];
  std::sort(out.values.begin(), out.values.end(), std::greater<>());
  out.tol = off + 4.0 * n * std::numeric_limits<double>::epsilon() * std::max(1.0, norm);
  return out;
}

Spectrum q_spectrum(const Graph& g, double tol) { return eigenvalues(signless_laplacian(g), tol); }

GapSummary gap_summary(const Graph& g, double tol) {
  if (g.order() < 2) throw DomainError("S2 needs at least two vertices");
  const Spectrum spec = q_spectrum(g, tol);
  GapSummary out;
  out.edges = edge_count(g);
  out.q1 = spec.values[0];
  out.q2 = spec.values[1];
  out.s2 = out.q1 + out.q2;
  out.f = out.edges + 3.0 - out.s2;
  out.tol = spec.tol;
  return out;
}

double s2(const Graph& g, double tol) { return gap_summary(g, tol).s2; }

double f_gap(const Graph& g, double tol) { return gap_summary(g, tol).f; }

int multiplicity(const Spectrum& s, double lambda, double eps) {
  if (eps < s.tol) throw InvalidParameter("multiplicity window narrower than the solver bound");
  return static_cast<int>(std::count_if(s.values.begin(), s.values.end(),
                                        [&](double x) { return std::abs(x - lambda) <= eps; }));
}

}  // namespace qsum
