#pragma once

#include <string>
#include <variant>
#include <vector>

#include "qsum/graph.hpp"
#include "qsum/polynomial.hpp"

namespace qsum {

/// The three firefly families whose spectra reduce to a small quotient.
enum class Family {
  StarPlusEdge,        ///< F(1, n-3, 0), n >= 7
  PendantPathFirefly,  ///< F(1, n-5, 1), n >= 9
  TriangleFirefly,     ///< F(r, s, 0), r >= 2, 2r+s+1 >= 6
};

struct FamilyInstance {
  Family family = Family::StarPlusEdge;
  int n = 0;  ///< order, for the two single-parameter families
  int r = 0;  ///< TriangleFirefly only
  int s = 0;  ///< TriangleFirefly only

  static FamilyInstance star_plus_edge(int n) { return {Family::StarPlusEdge, n, 1, n - 3}; }
  static FamilyInstance pendant_path(int n) { return {Family::PendantPathFirefly, n, 1, n - 5}; }
  static FamilyInstance triangles(int r, int s) { return {Family::TriangleFirefly, 2 * r + s + 1, r, s}; }
};

/// Throws DomainError if the instance is outside its family's range.
void check_family_range(const FamilyInstance& f);
FireflyParams firefly_params(const FamilyInstance& f);
Graph family_graph(const FamilyInstance& f);
std::string family_name(const FamilyInstance& f);

/// Quotient of Q(G) by a vertex partition, with the partition it came from.
struct QuotientMatrix {
  IntMatrix entries;
  std::vector<std::vector<int>> cells;
  std::string source;
};

/**
 * Entry (i, j) is the sum of Q(v, w) over w in cell j, for any v in cell i:
 * off the diagonal that is the neighbor count of v in cell j, on the diagonal
 * it is deg(v) plus the neighbors of v inside its own cell. With this
 * convention every eigenvalue of the quotient is a Q-eigenvalue. Cells must
 * be non-empty and cover the vertex set exactly once; a non-equitable
 * partition throws EquitabilityError naming two vertices that disagree.
 */
QuotientMatrix equitable_quotient(const Graph& g, const std::vector<std::vector<int>>& cells,
                                  std::string source = {});

/**
 * The closed-form quotient for a family instance, cell order as in the
 * literature: (triangle pair, center, leaves), (triangle pair, center, path
 * inner, path leaf, leaves), (center, leaves, triangle vertices). The matrix
 * is checked against equitable_quotient on the constructed graph; for
 * F(r, 0, 0) the leaf cell is empty and only the non-empty cells are checked.
 */
QuotientMatrix lemma_quotient(const FamilyInstance& f);

/**
 * The closed-form polynomial whose roots are the quotient eigenvalues:
 *   x^3 - (n+3)x^2 + 3n x - 4
 *   x^5 - (n+5)x^4 + (6n+4)x^3 - (10n-2)x^2 + (3n+12)x - 4
 *   -(x^3 - (s+2r+4)x^2 + (3s+6r+3)x - 4r)
 */
IntPolynomial lemma_polynomial(const FamilyInstance& f);

/// Lower bound on the multiplicity of the eigenvalue 1: n-3, n-5, r+s-1.
int unit_eigenvalue_multiplicity(const FamilyInstance& f);

/// A point that is not rational, carried with a bound on its own error.
struct RealPoint {
  long double value = 0.0L;
  long double error = 0.0L;
};

struct SignPoint {
  std::string label;
  std::variant<Rational, RealPoint> at;
  int expected_sign = 1;  ///< +1 or -1

  long double value() const;
};

/// Points in strictly increasing order; the constructor enforces it.
class SignPattern {
 public:
  explicit SignPattern(std::vector<SignPoint> points);
  const std::vector<SignPoint>& points() const noexcept { return points_; }

 private:
  std::vector<SignPoint> points_;
};

struct SignCheck {
  std::string label;
  long double point = 0.0L;
  long double value = 0.0L;
  long double error = 0.0L;  ///< zero for exact evaluations
  int expected_sign = 0;
  int observed_sign = 0;     ///< 0 when |value| does not exceed error
  bool exact = false;
  bool ok = false;
};

struct SignReport {
  std::vector<SignCheck> checks;
  bool passed = false;
  std::string failed_point;  ///< label of the first failing point
};

/// Evaluates p at each point (exactly at rational points) and compares signs.
SignReport verify_sign_pattern(const IntPolynomial& p, const SignPattern& pattern);

/// The bracketing evaluations that pin each quotient root to an interval.
SignPattern lemma_sign_pattern(const FamilyInstance& f);

/// Bisection to width tol. Throws BracketError without a sign change.
double root_bracket(const IntPolynomial& p, double lo, double hi, double tol);

}  // namespace qsum
