#pragma once

// Reference values computed without the library: monomial enumeration,
// exact Gaussian elimination on dense rational matrices, sphere moments from
// Gamma functions, and classical closed forms in low dimension.

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

using Complex = std::complex<double>;
using Monomial = std::vector<int>;

// All exponent vectors of length n with total degree m, by brute force over
// the box [0, m]^n.
inline std::vector<Monomial> enumerate_monomials(int n, int m) {
  std::vector<Monomial> out;
  Monomial e(n, 0);
  std::function<void(int)> visit = [&](int j) {
    if (j == n) {
      if (std::accumulate(e.begin(), e.end(), 0) == m) out.push_back(e);
      return;
    }
    for (int a = 0; a <= m; ++a) {
      e[j] = a;
      visit(j + 1);
    }
  };
  visit(0);
  return out;
}

inline std::uint64_t count_monomials(int n, int m) { return m < 0 ? 0 : enumerate_monomials(n, m).size(); }

// Sparse polynomial as monomial -> rational, only what the rank oracle needs.
using Poly = std::map<Monomial, mpq_class>;

inline Poly laplacian(const Poly& q) {
  Poly out;
  for (const auto& [e, c] : q) {
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] < 2) continue;
      Monomial d = e;
      d[j] -= 2;
      out[d] += c * e[j] * (e[j] - 1);
    }
  }
  for (auto it = out.begin(); it != out.end();) it = (it->second == 0) ? out.erase(it) : std::next(it);
  return out;
}

// Rank of a dense rational matrix by fraction Gaussian elimination.
inline std::size_t rank(std::vector<std::vector<mpq_class>> a) {
  std::size_t r = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < a.size() && a[pivot][c] == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[r], a[pivot]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      if (a[i][c] == 0) continue;
      const mpq_class f = a[i][c] / a[r][c];
      for (std::size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
    }
    ++r;
  }
  return r;
}

// dim ker(Delta^p : P_m -> P_{m-2p}) over Q.
inline std::uint64_t polyharmonic_nullity(int n, int m, int p) {
  const auto from = enumerate_monomials(n, m);
  if (m < 2 * p) return from.size();
  const auto to = enumerate_monomials(n, m - 2 * p);
  std::vector<std::vector<mpq_class>> a(to.size(), std::vector<mpq_class>(from.size()));
  for (std::size_t c = 0; c < from.size(); ++c) {
    Poly q{{from[c], mpq_class(1)}};
    for (int k = 0; k < p; ++k) q = laplacian(q);
    for (std::size_t r = 0; r < to.size(); ++r) {
      const auto it = q.find(to[r]);
      if (it != q.end()) a[r][c] = it->second;
    }
  }
  return from.size() - rank(a);
}

// Normalized surface moment of x^alpha on S^{n-1}:
// Gamma(n/2) prod Gamma((a_j+1)/2) / (pi^{n/2} Gamma((|a|+n)/2)), zero for any odd a_j.
inline double sphere_moment(const Monomial& alpha) {
  const int n = static_cast<int>(alpha.size());
  int total = 0;
  double log_value = std::lgamma(0.5 * n) - 0.5 * n * std::log(M_PI);
  for (int a : alpha) {
    if (a % 2) return 0.0;
    log_value += std::lgamma(0.5 * (a + 1));
    total += a;
  }
  return std::exp(log_value - std::lgamma(0.5 * (total + n)));
}

// C_m^lambda(t) from the explicit sum with exact rational coefficients;
// lambda must be a multiple of 1/2 and t rational.
inline double gegenbauer_exact(mpq_class lambda, int m, mpq_class t) {
  mpq_class sum = 0;
  for (int k = 0; 2 * k <= m; ++k) {
    mpq_class rising = 1;  // (lambda)_{m-k}
    for (int i = 0; i < m - k; ++i) rising *= lambda + i;
    mpz_class fk = 1, fr = 1;
    for (int i = 2; i <= k; ++i) fk *= i;
    for (int i = 2; i <= m - 2 * k; ++i) fr *= i;
    mpq_class power = 1;
    for (int i = 0; i < m - 2 * k; ++i) power *= 2 * t;
    mpq_class term = rising * power / (mpq_class(fk) * mpq_class(fr));
    sum += (k % 2 ? -term : term);
  }
  return sum.get_d();
}

// Classical Poisson kernel of the unit disc in polar coordinates.
inline double disc_poisson(double r, double theta) { return (1 - r * r) / (1 - 2 * r * std::cos(theta) + r * r); }

// Classical zonal harmonics: circle 2 r^m cos(m theta) (m >= 1), sphere (2m+1) r^m P_m(cos theta).
inline double circle_zonal(int m, double r, double theta) { return m == 0 ? 1.0 : 2 * std::pow(r, m) * std::cos(m * theta); }

inline double legendre(int m, double t) {
  double prev = 1.0, cur = t;
  if (m == 0) return prev;
  for (int k = 1; k < m; ++k) {
    const double next = ((2 * k + 1) * t * cur - k * prev) / (k + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

inline double sphere_zonal(int m, double r, double cos_angle) { return (2 * m + 1) * std::pow(r, m) * legendre(m, cos_angle); }

}  // namespace oracle
