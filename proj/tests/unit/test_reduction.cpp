#include <doctest.h>

#include "qsum/error.hpp"
#include "qsum/reduction.hpp"
#include "qsum/spectra.hpp"
#include "support.hpp"

using namespace qsum;

namespace {

std::vector<std::vector<std::int64_t>> rows(const IntMatrix& m) {
  std::vector<std::vector<std::int64_t>> out(m.order, std::vector<std::int64_t>(m.order));
  for (int i = 0; i < m.order; ++i)
    for (int j = 0; j < m.order; ++j) out[i][j] = m(i, j);
  return out;
}

std::vector<FamilyInstance> instances() {
  std::vector<FamilyInstance> out;
  for (int n = 7; n <= 20; ++n) out.push_back(FamilyInstance::star_plus_edge(n));
  for (int n = 9; n <= 20; ++n) out.push_back(FamilyInstance::pendant_path(n));
  for (int r = 2; r <= 4; ++r)
    for (int s = 0; s <= 5; ++s)
      if (2 * r + s + 1 >= 6) out.push_back(FamilyInstance::triangles(r, s));
  return out;
}

}  // namespace

TEST_CASE("reduction: closed-form polynomials match the oracle determinant") {
  for (const auto& f : instances()) {
    CAPTURE(family_name(f));
    const auto m = lemma_quotient(f);
    const auto ref = oracle::char_poly(rows(m.entries));
    CHECK(lemma_polynomial(f).equal_up_to_sign(IntPolynomial(ref)));
    CHECK(char_poly_exact(m.entries).coefficients() == ref);
  }
}

TEST_CASE("reduction: the published polynomials") {
  const std::int64_t n = 12;
  CHECK(lemma_polynomial(FamilyInstance::star_plus_edge(12)).coefficients() ==
        std::vector<std::int64_t>{1, -(n + 3), 3 * n, -4});
  CHECK(lemma_polynomial(FamilyInstance::pendant_path(12)).coefficients() ==
        std::vector<std::int64_t>{1, -(n + 5), 6 * n + 4, -(10 * n - 2), 3 * n + 12, -4});
  const std::int64_t r = 3, s = 2;
  CHECK(lemma_polynomial(FamilyInstance::triangles(3, 2)).coefficients() ==
        std::vector<std::int64_t>{-1, s + 2 * r + 4, -(3 * s + 6 * r + 3), 4 * r});
}

TEST_CASE("reduction: quotient roots are Q-eigenvalues") {
  for (const auto& f : instances()) {
    CAPTURE(family_name(f));
    const auto spec = oracle::q_spectrum(testing::to_oracle(family_graph(f)));
    for (double root : oracle::real_roots(lemma_polynomial(f).coefficients())) {
      double nearest = 1e9;
      for (double v : spec) nearest = std::min(nearest, std::abs(v - root));
      CHECK(nearest <= 1e-9);
    }
  }
}

TEST_CASE("reduction: equitable quotient of general partitions") {
  // K_{2,3}: the bipartition is equitable
  const Graph k23 = join(empty_graph(2), empty_graph(3));
  const auto m = equitable_quotient(k23, {{0, 1}, {2, 3, 4}}, "K2,3");
  CHECK(m.entries == IntMatrix{{3, 3}, {2, 2}});
  // discrete partition gives Q itself
  const Graph p3 = path_graph(3);
  CHECK(equitable_quotient(p3, {{0}, {1}, {2}}, "P3").entries == IntMatrix{{1, 1, 0}, {1, 2, 1}, {0, 1, 1}});
  CHECK_THROWS_AS(equitable_quotient(p3, {{0, 1}, {2}}, "bad"), EquitabilityError);
  CHECK_THROWS_AS(equitable_quotient(p3, {{0}, {1}}, "missing"), InvalidParameter);
  CHECK_THROWS_AS(equitable_quotient(p3, {{0, 1}, {1, 2}}, "overlap"), InvalidParameter);
  CHECK_THROWS_AS(equitable_quotient(p3, {{0, 1, 2}, {}}, "empty"), InvalidParameter);
}

TEST_CASE("reduction: sign patterns pass and bracket the roots") {
  for (const auto& f : instances()) {
    CAPTURE(family_name(f));
    const auto p = lemma_polynomial(f);
    const auto report = verify_sign_pattern(p, lemma_sign_pattern(f));
    CHECK(report.passed);
    // each sign change brackets a root the oracle finds
    const auto& pts = lemma_sign_pattern(f).points();
    const auto roots = oracle::real_roots(p.coefficients());
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      if (pts[i].expected_sign == pts[i + 1].expected_sign) continue;
      const double lo = static_cast<double>(pts[i].value());
      const double hi = static_cast<double>(pts[i + 1].value());
      const double root = root_bracket(p, lo, hi, 1e-12);
      bool found = false;
      for (double r : roots) found = found || std::abs(r - root) < 1e-9;
      CHECK(found);
    }
  }
}

TEST_CASE("reduction: unit eigenvalue multiplicity bound holds") {
  for (const auto& f : instances()) {
    CAPTURE(family_name(f));
    CHECK(multiplicity(q_spectrum(family_graph(f)), 1.0, 1e-6) >= unit_eigenvalue_multiplicity(f));
  }
}

TEST_CASE("reduction: ranges and errors") {
  CHECK_THROWS_AS(check_family_range(FamilyInstance::star_plus_edge(6)), DomainError);
  CHECK_THROWS_AS(check_family_range(FamilyInstance::pendant_path(8)), DomainError);
  CHECK_THROWS_AS(check_family_range(FamilyInstance::triangles(2, 0)), DomainError);
  CHECK_THROWS_AS(lemma_quotient(FamilyInstance::triangles(1, 5)), DomainError);
  CHECK(family_name(FamilyInstance::triangles(2, 3)) == "F(2,3,0)");
  CHECK_THROWS_AS(root_bracket(IntPolynomial({1, 0, 1}), -1, 1, 1e-9), BracketError);
  CHECK(root_bracket(IntPolynomial({1, 0, -2}), 1, 2, 1e-12) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK_THROWS_AS(SignPattern({{"b", Rational(2), 1}, {"a", Rational(1), -1}}), InvalidParameter);
}
