#include "polyharm/gegenbauer.hpp"

#include <gmpxx.h>

#include <cmath>
#include <string>

#include "polyharm/detail/numeric.hpp"
#include "polyharm/error.hpp"

namespace polyharm {

namespace {

void check_lambda(double lambda) {
  if (!(lambda > -0.5)) {
    throw DomainError("Gegenbauer order lambda must exceed -1/2, got " + std::to_string(lambda));
  }
}

template <class T>
T homogeneous_recurrence(double lambda, int m, T s, T W) {
  if (m < 0) return T(0);
  T prev(1);
  if (m == 0) return prev;
  T cur = 2.0 * lambda * s;
  for (int k = 2; k <= m; ++k) {
    T next = (2.0 * (k + lambda - 1.0) * s * cur - (k + 2.0 * lambda - 2.0) * W * prev) / double(k);
    prev = cur;
    cur = next;
  }
  return cur;
}

// (-1)^k Gamma(m + lambda - k) 2^{m-2k} / (Gamma(lambda) k! (m-2k)!), built as
// a product of m-k ratios so that no factorial or Gamma value is formed.
double explicit_coefficient(double lambda, int m, int k) {
  const int numerators = m - k;
  double c = 1.0;
  int kfact = 1;
  int rest = 1;
  for (int i = 0; i < numerators; ++i) {
    double denom;
    if (kfact <= k) {
      denom = kfact++;
    } else {
      denom = rest++;
    }
    c *= (lambda + i) / denom;
  }
  c = std::ldexp(c, m - 2 * k);
  return (k % 2 == 0) ? c : -c;
}

}  // namespace

Complex gegenbauer(double lambda, int m, Complex t) {
  check_lambda(lambda);
  return homogeneous_recurrence<Complex>(lambda, m, t, Complex(1.0));
}

double gegenbauer(double lambda, int m, double t) {
  check_lambda(lambda);
  return homogeneous_recurrence<double>(lambda, m, t, 1.0);
}

Complex gegenbauer_explicit(double lambda, int m, Complex t) {
  return gegenbauer_homogeneous_explicit(lambda, m, t, Complex(1.0));
}

double gegenbauer_explicit(double lambda, int m, double t) {
  check_lambda(lambda);
  if (m < 0) return 0.0;
  const mpq_class lam(lambda);
  const mpq_class x(t);
  // coefficient of (2t)^{m-2k}: (-1)^k (lambda)_{m-k} / (k! (m-2k)!)
  mpq_class sum = 0;
  for (int k = 0; 2 * k <= m; ++k) {
    mpq_class c = 1;
    for (int i = 0; i < m - k; ++i) c *= lam + i;
    for (int i = 2; i <= k; ++i) c /= i;
    for (int i = 2; i <= m - 2 * k; ++i) c /= i;
    mpq_class power = 1;
    for (int i = 0; i < m - 2 * k; ++i) power *= 2 * x;
    sum += (k % 2 == 0 ? c : mpq_class(-c)) * power;
  }
  return sum.get_d();
}

Complex gegenbauer_homogeneous(double lambda, int m, Complex s, Complex W) {
  check_lambda(lambda);
  return homogeneous_recurrence<Complex>(lambda, m, s, W);
}

double gegenbauer_homogeneous(double lambda, int m, double s, double W) {
  check_lambda(lambda);
  return homogeneous_recurrence<double>(lambda, m, s, W);
}

std::vector<Complex> gegenbauer_homogeneous_table(double lambda, int max_m, Complex s, Complex W) {
  check_lambda(lambda);
  std::vector<Complex> g;
  if (max_m < 0) return g;
  g.reserve(static_cast<std::size_t>(max_m) + 1);
  g.push_back(1.0);
  if (max_m >= 1) g.push_back(2.0 * lambda * s);
  for (int k = 2; k <= max_m; ++k) {
    g.push_back((2.0 * (k + lambda - 1.0) * s * g[k - 1] - (k + 2.0 * lambda - 2.0) * W * g[k - 2]) /
                double(k));
  }
  return g;
}

Complex gegenbauer_homogeneous_explicit(double lambda, int m, Complex s, Complex W) {
  check_lambda(lambda);
  if (m < 0) return 0.0;
  Complex sum{};
  for (int k = 0; 2 * k <= m; ++k) {
    sum += explicit_coefficient(lambda, m, k) * detail::ipow(s, m - 2 * k) * detail::ipow(W, k);
  }
  return sum;
}

Complex generating_partial_sum(double lambda, double t, Complex w, int max_degree) {
  check_lambda(lambda);
  if (!(std::abs(w) < 1.0)) throw DomainError("generating function needs |w| < 1");
  if (!(t >= -1.0 && t <= 1.0)) throw DomainError("generating function needs t in [-1, 1]");
  // sum_m C_m(t) w^m = sum_m G_m(t w, w^2)
  Complex sum{};
  const auto g = gegenbauer_homogeneous_table(lambda, max_degree, t * w, w * w);
  for (auto it = g.begin(); it != g.end(); ++it) sum += *it;
  return sum;
}

Complex generating_function(double lambda, double t, Complex w) {
  check_lambda(lambda);
  return std::pow(1.0 - 2.0 * t * w + w * w, -lambda);
}

}  // namespace polyharm
