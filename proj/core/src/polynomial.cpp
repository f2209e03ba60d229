#include "qsum/polynomial.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "qsum/error.hpp"

namespace qsum {
namespace {

__extension__ typedef __int128 Wide;

Wide add(Wide a, Wide b) {
  Wide r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticError("128-bit integer overflow (add)");
  return r;
}

Wide mul(Wide a, Wide b) {
  Wide r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticError("128-bit integer overflow (multiply)");
  return r;
}

std::int64_t narrow(Wide x) {
  if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
    throw ArithmeticError("coefficient does not fit in 64 bits");
  return static_cast<std::int64_t>(x);
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw InvalidParameter("zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const std::int64_t g = std::gcd(n < 0 ? -n : n, d);
  num = n / (g == 0 ? 1 : g);
  den = d / (g == 0 ? 1 : g);
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : order(static_cast<int>(rows.size())) {
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != order) throw InvalidParameter("IntMatrix rows must be square");
    entries.insert(entries.end(), row.begin(), row.end());
  }
}

IntPolynomial::IntPolynomial(std::vector<std::int64_t> coefficients) : coeffs_(std::move(coefficients)) {
  auto first = coeffs_.begin();
  while (first != coeffs_.end() && *first == 0) ++first;
  coeffs_.erase(coeffs_.begin(), first);
  if (coeffs_.empty()) throw InvalidParameter("zero polynomial");
}

IntPolynomial IntPolynomial::negated() const {
  std::vector<std::int64_t> c = coeffs_;
  for (auto& x : c) x = -x;
  return IntPolynomial(std::move(c));
}

bool IntPolynomial::equal_up_to_sign(const IntPolynomial& other) const {
  return *this == other || negated() == other;
}

IntPolynomial::ExactValue IntPolynomial::evaluate_exact(const Rational& x) const {
  // den^d * p(num/den) = sum c_k num^(d-k) den^k, by Horner in num:
  // ((c0*num + c1*den)*num + c2*den^2)*num + ...
  Wide acc = 0;
  Wide den_k = 1;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k > 0) den_k = mul(den_k, x.den);
    acc = add(mul(acc, x.num), mul(coeffs_[k], den_k));
  }
  ExactValue out;
  out.sign = acc > 0 ? 1 : (acc < 0 ? -1 : 0);
  out.value = static_cast<long double>(acc) / static_cast<long double>(den_k);
  return out;
}

IntPolynomial::RealValue IntPolynomial::evaluate(long double x, long double x_error) const {
  long double s = 0.0L;
  long double magnitude = 0.0L;
  long double slope = 0.0L;
  const int d = degree();
  for (int k = 0; k <= d; ++k) {
    s = s * x + static_cast<long double>(coeffs_[k]);
    // |c_k| |x|^(d-k), and (d-k) |c_k| |x|^(d-k-1) for the derivative bound.
    const int power = d - k;
    const long double ck = std::fabs(static_cast<long double>(coeffs_[k]));
    magnitude += ck * std::pow(std::fabs(x), static_cast<long double>(power));
    if (power > 0) slope += power * ck * std::pow(std::fabs(x), static_cast<long double>(power - 1));
  }
  const long double u = std::numeric_limits<long double>::epsilon() / 2.0L;
  const long double gamma = 2.0L * d * u / (1.0L - 2.0L * d * u);
  RealValue out;
  out.value = s;
  out.error = 2.0L * (gamma * magnitude + slope * x_error) + u * magnitude;
  return out;
}

std::string IntPolynomial::str() const {
  std::ostringstream os;
  const int d = degree();
  bool first = true;
  for (int k = 0; k <= d; ++k) {
    const std::int64_t c = coeffs_[k];
    if (c == 0) continue;
    const int power = d - k;
    const std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || power == 0) os << mag;
    if (power >= 1) os << "x";
    if (power >= 2) os << "^" << power;
    first = false;
  }
  return os.str();
}

IntPolynomial char_poly_exact(const IntMatrix& m) {
  const int n = m.order;
  if (n < 1 || n > 16) throw InvalidParameter("char_poly_exact supports orders 1..16");
  if (static_cast<int>(m.entries.size()) != n * n) throw InvalidParameter("IntMatrix storage size mismatch");

  auto idx = [n](int i, int j) { return static_cast<std::size_t>(i * n + j); };
  std::vector<Wide> a(m.entries.begin(), m.entries.end());
  std::vector<Wide> prev(static_cast<std::size_t>(n * n), 0);  // M_{k-1}
  std::vector<Wide> cur(static_cast<std::size_t>(n * n), 0);
  std::vector<Wide> c(static_cast<std::size_t>(n + 1), 0);  // c[power]
  c[n] = 1;

  for (int k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        Wide s = 0;
        for (int l = 0; l < n; ++l) s = add(s, mul(a[idx(i, l)], prev[idx(l, j)]));
        if (i == j) s = add(s, c[n - k + 1]);
        cur[idx(i, j)] = s;
      }
    }
    // c_{n-k} = -tr(A M_k) / k
    Wide tr = 0;
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) tr = add(tr, mul(a[idx(i, l)], cur[idx(l, i)]));
    if (tr % k != 0) throw ArithmeticError("non-exact division in Faddeev-LeVerrier step");
    c[n - k] = -(tr / k);
    std::swap(prev, cur);
  }

  std::vector<std::int64_t> coeffs;
  coeffs.reserve(static_cast<std::size_t>(n + 1));
  for (int power = n; power >= 0; --power) coeffs.push_back(narrow(c[power]));
  return IntPolynomial(std::move(coeffs));
}

}  // namespace qsum
