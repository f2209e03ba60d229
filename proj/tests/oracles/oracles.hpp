#pragma once

// Reference implementations used only by the tests. Each one uses a
// different method from the library code it checks.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Adjacency = std::vector<std::vector<int>>;  // 0/1 matrix

inline Adjacency adjacency(int n, const std::vector<std::pair<int, int>>& edges) {
  Adjacency a(n, std::vector<int>(n, 0));
  for (auto [u, v] : edges) a[u][v] = a[v][u] = 1;
  return a;
}

// graph6 via an explicit bit string.
inline std::string graph6(const Adjacency& a) {
  const int n = static_cast<int>(a.size());
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(63 + n);
  } else {
    out += static_cast<char>(126);
    for (int shift : {12, 6, 0}) out += static_cast<char>(63 + ((n >> shift) & 63));
  }
  std::string bits;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bits += a[i][j] ? '1' : '0';
  while (bits.size() % 6) bits += '0';
  for (std::size_t p = 0; p < bits.size(); p += 6) out += static_cast<char>(63 + std::stoi(bits.substr(p, 6), nullptr, 2));
  return out;
}

// Lexicographically least upper-triangle bit string over all n! relabelings.
inline std::string brute_canonical(const Adjacency& a) {
  const int n = static_cast<int>(a.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string key;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) key += a[perm[i]][perm[j]] ? '1' : '0';
    if (best.empty() || key < best) best = key;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best + "/" + std::to_string(n);
}

inline bool connected(const Adjacency& a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return true;
  std::vector<int> seen(n, 0), stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w = 0; w < n; ++w)
      if (a[v][w] && !seen[w]) seen[w] = 1, stack.push_back(w);
  }
  return std::count(seen.begin(), seen.end(), 1) == n;
}

// Connected graph counts for orders 0..max_n: Burnside over cycle types for
// all graphs, then the inverse Euler transform.
inline std::vector<std::int64_t> connected_counts(int max_n) {
  std::vector<std::int64_t> total(max_n + 1, 0);
  for (int n = 0; n <= max_n; ++n) {
    // sum over partitions of n of (n!/z) * 2^orbits, divided by n!
    long double sum = 0;
    std::vector<int> parts;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
      if (remaining == 0) {
        long double z = 1;
        for (std::size_t i = 0; i < parts.size();) {
          std::size_t j = i;
          while (j < parts.size() && parts[j] == parts[i]) ++j;
          const int m = static_cast<int>(j - i);
          for (int t = 0; t < m; ++t) z *= parts[i];
          for (int t = 2; t <= m; ++t) z *= t;
          i = j;
        }
        long long orbits = 0;
        for (std::size_t i = 0; i < parts.size(); ++i) {
          orbits += parts[i] / 2;
          for (std::size_t j = i + 1; j < parts.size(); ++j) orbits += std::gcd(parts[i], parts[j]);
        }
        sum += std::ldexp(1.0L, static_cast<int>(orbits)) / z;
        return;
      }
      for (int p = std::min(remaining, max_part); p >= 1; --p) {
        parts.push_back(p);
        self(self, remaining - p, p);
        parts.pop_back();
      }
    };
    rec(rec, n, n);
    total[n] = std::llround(sum);
  }
  std::vector<std::int64_t> conn(max_n + 1, 0), d(max_n + 1, 0);
  for (int n = 1; n <= max_n; ++n) {
    std::int64_t dn = n * total[n];
    for (int k = 1; k < n; ++k) dn -= d[k] * total[n - k];
    d[n] = dn;
    std::int64_t rest = dn;
    for (int q = 1; q < n; ++q)
      if (n % q == 0) rest -= q * conn[q];
    conn[n] = rest / n;
  }
  return conn;
}

// Symmetric eigenvalues, descending: Householder tridiagonalization and
// Sturm-sequence bisection in long double.
inline std::vector<double> eigenvalues(std::vector<std::vector<long double>> a) {
  const int n = static_cast<int>(a.size());
  for (int k = 0; k + 2 < n; ++k) {
    long double alpha = 0;
    for (int i = k + 1; i < n; ++i) alpha += a[i][k] * a[i][k];
    alpha = std::sqrt(alpha);
    if (alpha == 0) continue;
    if (a[k + 1][k] > 0) alpha = -alpha;
    std::vector<long double> v(n, 0);
    v[k + 1] = a[k + 1][k] - alpha;
    for (int i = k + 2; i < n; ++i) v[i] = a[i][k];
    long double vv = 0;
    for (long double x : v) vv += x * x;
    if (vv == 0) continue;
    // A <- H A H with H = I - 2 v v^T / (v^T v)
    std::vector<long double> p(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) p[i] += a[i][j] * v[j];
    for (auto& x : p) x *= 2 / vv;
    long double c = 0;
    for (int i = 0; i < n; ++i) c += v[i] * p[i];
    c /= vv;
    std::vector<long double> w(n);
    for (int i = 0; i < n; ++i) w[i] = p[i] - c * v[i];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a[i][j] -= v[i] * w[j] + w[i] * v[j];
  }
  std::vector<long double> diag(n), off(n, 0);
  long double bound = 0;
  for (int i = 0; i < n; ++i) {
    diag[i] = a[i][i];
    if (i + 1 < n) off[i] = a[i + 1][i];
  }
  for (int i = 0; i < n; ++i) {
    long double r = std::fabs(diag[i]);
    if (i > 0) r += std::fabs(off[i - 1]);
    if (i + 1 < n) r += std::fabs(off[i]);
    bound = std::max(bound, r);
  }
  // number of eigenvalues below x
  auto below = [&](long double x) {
    int count = 0;
    long double q = 1;
    for (int i = 0; i < n; ++i) {
      const long double b2 = i > 0 ? off[i - 1] * off[i - 1] : 0;
      q = diag[i] - x - (i > 0 ? b2 / q : 0);
      if (q == 0) q = -1e-300L;
      if (q < 0) ++count;
    }
    return count;
  };
  std::vector<double> out;
  for (int k = 0; k < n; ++k) {
    long double lo = -bound - 1, hi = bound + 1;
    for (int it = 0; it < 200; ++it) {
      const long double mid = (lo + hi) / 2;
      if (below(mid) > k) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    out.push_back(static_cast<double>((lo + hi) / 2));
  }
  std::reverse(out.begin(), out.end());
  return out;
}

inline std::vector<std::vector<long double>> signless_laplacian(const Adjacency& a) {
  const int n = static_cast<int>(a.size());
  std::vector<std::vector<long double>> q(n, std::vector<long double>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      q[i][j] += a[i][j];
      q[i][i] += a[i][j];
    }
  return q;
}

inline std::vector<double> q_spectrum(const Adjacency& a) { return eigenvalues(signless_laplacian(a)); }

__extension__ typedef __int128 Wide;

// Exact integer determinant by Bareiss elimination.
inline Wide determinant(std::vector<std::vector<Wide>> m) {
  const int n = static_cast<int>(m.size());
  Wide sign = 1, prev = 1;
  for (int k = 0; k < n; ++k) {
    if (m[k][k] == 0) {
      int p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// det(xI - M) through its values at x = 0..n and Newton forward differences.
inline std::vector<std::int64_t> char_poly(const std::vector<std::vector<std::int64_t>>& m) {
  const int n = static_cast<int>(m.size());
  std::vector<Wide> values(n + 1);
  for (int x = 0; x <= n; ++x) {
    std::vector<std::vector<Wide>> a(n, std::vector<Wide>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a[i][j] = (i == j ? x : 0) - m[i][j];
    values[x] = determinant(a);
  }
  // Newton form p(x) = sum c_k * C(x, k), c_k the k-th forward difference at 0
  std::vector<Wide> diff = values, coeff_newton;
  for (int k = 0; k <= n; ++k) {
    coeff_newton.push_back(diff[0]);
    for (int i = 0; i + 1 < static_cast<int>(diff.size()); ++i) diff[i] = diff[i + 1] - diff[i];
    diff.pop_back();
  }
  // expand over the common denominator n!, since single terms are not integral
  Wide n_factorial = 1;
  for (int k = 2; k <= n; ++k) n_factorial *= k;
  std::vector<Wide> ascending(n + 1, 0), falling{1};
  Wide k_factorial = 1;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) {
      k_factorial *= k;
      std::vector<Wide> next(falling.size() + 1, 0);
      for (std::size_t i = 0; i < falling.size(); ++i) {
        next[i + 1] += falling[i];
        next[i] -= falling[i] * (k - 1);
      }
      falling = next;
    }
    for (std::size_t i = 0; i < falling.size(); ++i) ascending[i] += coeff_newton[k] * falling[i] * (n_factorial / k_factorial);
  }
  for (auto& c : ascending) c /= n_factorial;
  std::vector<std::int64_t> out;
  for (int i = n; i >= 0; --i) out.push_back(static_cast<std::int64_t>(ascending[i]));
  return out;
}

inline long double eval(const std::vector<long double>& desc, long double x) {
  long double acc = 0;
  for (long double c : desc) acc = acc * x + c;
  return acc;
}

// Real roots, ascending, of a polynomial whose roots are all real, by
// bisection between the roots of its derivative.
inline std::vector<double> real_roots(const std::vector<std::int64_t>& coefficients) {
  std::vector<long double> p(coefficients.begin(), coefficients.end());
  const int d = static_cast<int>(p.size()) - 1;
  if (d == 0) return {};
  long double cauchy = 0;
  for (int i = 1; i <= d; ++i) cauchy = std::max(cauchy, std::fabs(p[i] / p[0]));
  cauchy += 1;
  std::vector<std::int64_t> deriv;
  for (int i = 0; i < d; ++i) deriv.push_back(coefficients[i] * (d - i));
  std::vector<long double> marks{-cauchy};
  for (double c : real_roots(deriv)) marks.push_back(c);
  marks.push_back(cauchy);
  std::vector<double> roots;
  for (std::size_t i = 0; i + 1 < marks.size(); ++i) {
    long double lo = marks[i], hi = marks[i + 1];
    long double flo = eval(p, lo), fhi = eval(p, hi);
    if (std::fabs(flo) < 1e-12L) {
      if (roots.empty() || std::fabs(roots.back() - lo) > 1e-9) roots.push_back(static_cast<double>(lo));
      continue;
    }
    if ((flo < 0) == (fhi < 0)) continue;
    for (int it = 0; it < 200; ++it) {
      const long double mid = (lo + hi) / 2;
      if ((eval(p, mid) < 0) == (flo < 0)) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    roots.push_back(static_cast<double>((lo + hi) / 2));
  }
  if (std::fabs(eval(p, marks.back())) < 1e-12L) roots.push_back(static_cast<double>(marks.back()));
  return roots;
}

}  // namespace oracle
