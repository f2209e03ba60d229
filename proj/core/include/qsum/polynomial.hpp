#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qsum {

/// Exact rational with positive denominator, always in lowest terms.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1);

  long double value() const { return static_cast<long double>(num) / static_cast<long double>(den); }
  std::string str() const;

  friend bool operator==(const Rational&, const Rational&) = default;
};

/// Square integer matrix, row-major.
struct IntMatrix {
  int order = 0;
  std::vector<std::int64_t> entries;

  IntMatrix() = default;
  explicit IntMatrix(int n) : order(n), entries(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  std::int64_t& operator()(int i, int j) { return entries[static_cast<std::size_t>(i * order + j)]; }
  std::int64_t operator()(int i, int j) const { return entries[static_cast<std::size_t>(i * order + j)]; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

/// Integer polynomial, coefficients from the leading term down.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  /// Leading zeros are stripped; the zero polynomial is rejected.
  explicit IntPolynomial(std::vector<std::int64_t> coefficients);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<std::int64_t>& coefficients() const noexcept { return coeffs_; }

  IntPolynomial negated() const;
  /// Equal, or equal after multiplying one side by -1.
  bool equal_up_to_sign(const IntPolynomial& other) const;

  /// Exact sign of p(x) for rational x, with the value itself when it is representable.
  struct ExactValue {
    int sign = 0;
    long double value = 0.0L;
  };
  ExactValue evaluate_exact(const Rational& x) const;

  /// Horner in long double with a running rounding bound, plus the effect of
  /// an input uncertainty `x_error` through |p'|.
  struct RealValue {
    long double value = 0.0L;
    long double error = 0.0L;
  };
  RealValue evaluate(long double x, long double x_error = 0.0L) const;

  std::string str() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  std::vector<std::int64_t> coeffs_;
};

/**
 * det(xI - m) by the Faddeev-LeVerrier recurrence in checked 128-bit
 * integers. Every division in the recurrence is exact for integer input; a
 * non-exact division or an overflow throws ArithmeticError. Order <= 16.
 */
IntPolynomial char_poly_exact(const IntMatrix& m);

}  // namespace qsum
