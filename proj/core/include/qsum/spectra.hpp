#pragma once

#include <vector>

#include "qsum/graph.hpp"

namespace qsum {

inline constexpr double kDefaultSolverTol = 1e-10;

/// Dense symmetric matrix; set() writes both (i, j) and (j, i).
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(int order);

  int order() const noexcept { return order_; }
  double operator()(int i, int j) const { return entries_[index(i, j)]; }
  void set(int i, int j, double value);

  double trace() const;
  double frobenius_norm() const;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(order_) + static_cast<std::size_t>(j);
  }

  int order_;
  std::vector<double> entries_;
};

/// Eigenvalues in non-increasing order plus the error bound that was achieved.
struct Spectrum {
  std::vector<double> values;
  double tol = 0.0;

  double largest() const { return values.front(); }
  double smallest() const { return values.back(); }
  double sum() const;
};

SymmetricMatrix adjacency_matrix(const Graph& g);
/// Q = A + D.
SymmetricMatrix signless_laplacian(const Graph& g);

/**
 * Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops to
 * tol * max(1, ||m||_F). The reported Spectrum::tol is the residual
 * off-diagonal norm plus a rounding term, which bounds the distance of every
 * value from a true eigenvalue. Throws SolverError when the sweep budget
 * runs out.
 */
Spectrum eigenvalues(const SymmetricMatrix& m, double tol = kDefaultSolverTol);

Spectrum q_spectrum(const Graph& g, double tol = kDefaultSolverTol);

/// q1 + q2. Throws DomainError for a single vertex.
double s2(const Graph& g, double tol = kDefaultSolverTol);
/// e(g) + 3 - s2(g).
double f_gap(const Graph& g, double tol = kDefaultSolverTol);

/// The summary quantities most callers want from one eigensolve.
struct GapSummary {
  int edges = 0;
  double q1 = 0.0;
  double q2 = 0.0;
  double s2 = 0.0;
  double f = 0.0;
  double tol = 0.0;
};
GapSummary gap_summary(const Graph& g, double tol = kDefaultSolverTol);

/// Entries within eps of lambda. Throws InvalidParameter if eps < s.tol.
int multiplicity(const Spectrum& s, double lambda, double eps);

}  // namespace qsum
