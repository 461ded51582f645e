#include "polyharm/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <random>
#include <string>

#include "polyharm/detail/numeric.hpp"
#include "polyharm/error.hpp"
#include "polyharm/gegenbauer.hpp"

namespace polyharm {

namespace {

constexpr int kMaxSeriesDegree = 10000;
constexpr double kUnitTolerance = 1e-12;
constexpr double kSeriesMargin = 1e-6;

void require_np(int n, int p) {
  if (n < 2) throw DomainError("dimension n must be at least 2, got " + std::to_string(n));
  if (p < 1) throw DomainError("order p must be positive, got " + std::to_string(p));
}

void require_unit(const RotatedVector& zeta) {
  if (std::abs(zeta.radius() - 1.0) > kUnitTolerance) {
    throw DomainError("zeta must lie on a rotated unit sphere (|Re| = 1), got radius " +
                      std::to_string(zeta.radius()));
  }
}

void require_on_sphere(const RotatedVector& zeta, int p) {
  require_unit(zeta);
  if (!zeta.sector(p)) {
    throw DomainError("zeta is not on the rotated sphere: angle is not a multiple of pi/" + std::to_string(p));
  }
}

void require_in_ball(const RotatedVector& x, int p) {
  if (!(x.radius() < 1.0)) throw DomainError("x must lie inside the rotated ball (|Re| < 1)");
  if (!x.sector(p)) {
    throw DomainError("x is not in the rotated ball: angle is not a multiple of pi/" + std::to_string(p));
  }
}

void require_size(std::size_t got, int n) {
  if (got != static_cast<std::size_t>(n)) {
    throw DimensionMismatch("point has dimension " + std::to_string(got) + ", expected " + std::to_string(n));
  }
}

// s = x . conj(zeta) and W = x^2 conj(zeta)^2 for rotated arguments.
struct Invariants {
  Complex s;
  Complex W;
};

double real_dot(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) sum += a[j] * b[j];
  return sum;
}

Invariants invariants(const RotatedVector& x, const RotatedVector& zeta) {
  if (x.size() != zeta.size()) throw DimensionMismatch("x and zeta have different dimensions");
  const double delta = x.angle() - zeta.angle();
  const auto a = x.coords();
  const auto b = zeta.coords();
  return {std::polar(real_dot(a, b), delta), std::polar(real_dot(a, a) * real_dot(b, b), 2.0 * delta)};
}

Invariants invariants(const ComplexVector& x, const ComplexVector& w) {
  return {hermitian_dot(x, w), bilinear_square(x) * std::conj(bilinear_square(w))};
}

Complex half_power(Complex z, int n) {
  if (n % 2 == 0) return detail::ipow(z, n / 2);
  return std::exp(0.5 * n * std::log(z));
}

Complex checked_denominator(Complex den, const char* what) {
  if (std::abs(den) <= kSingularThreshold) {
    throw SingularEvaluation(std::string(what) + " denominator vanishes");
  }
  return den;
}

Complex gegenbauer_diff(int n, int m, int p, Complex s, Complex W) {
  if (m < 0) return 0.0;
  const double lambda = 0.5 * n;
  Complex out = gegenbauer_homogeneous(lambda, m, s, W);
  if (m >= 2 * p) out -= detail::ipow(W, p) * gegenbauer_homogeneous(lambda, m - 2 * p, s, W);
  return out;
}

// Coefficient of s^{m-2k} W^k in G_m - W^p G_{m-2p}:
//   (-1)^k / (k! 2^k (m-2k)!) * [ prod_{j<m-k} (n+2j)
//                                 - (-1)^p 2^p k!/(k-p)! prod_{j<m-p-k} (n+2j) ]
// where the second product is present for k >= p only.
long double explicit_coefficient(int n, int m, int p, int k) {
  long double first = 1.0L;
  for (int j = 0; j < m - k; ++j) first *= n + 2 * j;
  long double bracket = first;
  if (k >= p) {
    long double second = std::ldexp(1.0L, p);
    for (int j = k - p + 1; j <= k; ++j) second *= j;
    for (int j = 0; j < m - p - k; ++j) second *= n + 2 * j;
    bracket += (p % 2 == 0) ? -second : second;
  }
  long double denom = std::ldexp(1.0L, k);
  for (int j = 2; j <= k; ++j) denom *= j;
  for (int j = 2; j <= m - 2 * k; ++j) denom *= j;
  const long double c = bracket / denom;
  return (k % 2 == 0) ? c : -c;
}

Complex explicit_sum(int n, int m, int p, Complex s, Complex W) {
  if (m < 0) return 0.0;
  Complex out{};
  for (int k = 0; 2 * k <= m; ++k) {
    out += static_cast<double>(explicit_coefficient(n, m, p, k)) * detail::ipow(s, m - 2 * k) *
           detail::ipow(W, k);
  }
  return out;
}

// Z_j = G_j - W G_{j-2} from the explicit homogenized Gegenbauer sum.
Complex zonal_from_explicit(int n, int j, Complex s, Complex W) {
  if (j < 0) return 0.0;
  const double lambda = 0.5 * n;
  Complex out = gegenbauer_homogeneous_explicit(lambda, j, s, W);
  if (j >= 2) out -= W * gegenbauer_homogeneous_explicit(lambda, j - 2, s, W);
  return out;
}

Complex sum_of_zonals(int n, int m, int p, Complex s, Complex W) {
  Complex out{};
  Complex wk = 1.0;
  for (int k = 0; k < p && 2 * k <= m; ++k) {
    out += wk * zonal_from_explicit(n, m - 2 * k, s, W);
    wk *= W;
  }
  return out;
}

// Rotated arguments: Z^p_m(e^{i phi} a, e^{i psi} b) = e^{i m (phi - psi)} Z^p_m(a, b)
// with the real zonal harmonics Z_j(a, b) = G_j(a.b, |a|^2|b|^2) - |a|^2|b|^2 G_{j-2}.
Complex sum_of_zonals_rotated(int n, int m, int p, const RotatedVector& x, const RotatedVector& zeta) {
  if (m < 0) return 0.0;
  const double lambda = 0.5 * n;
  const auto a = x.coords();
  const auto b = zeta.coords();
  const double dot = real_dot(a, b);
  const double norms = real_dot(a, a) * real_dot(b, b);
  double sum = 0.0;
  double wk = 1.0;
  for (int k = 0; k < p && 2 * k <= m; ++k) {
    const int j = m - 2 * k;
    double zonal = gegenbauer_homogeneous(lambda, j, dot, norms);
    if (j >= 2) zonal -= norms * gegenbauer_homogeneous(lambda, j - 2, dot, norms);
    sum += wk * zonal;
    wk *= norms;
  }
  return std::polar(sum, m * (x.angle() - zeta.angle()));
}

Complex route_value(const KernelParams& params, Invariants inv, ZonalRoute route) {
  switch (route) {
    case ZonalRoute::kSumOfZonals:
      return sum_of_zonals(params.n, params.m, params.p, inv.s, inv.W);
    case ZonalRoute::kGegenbauerDiff:
      return gegenbauer_diff(params.n, params.m, params.p, inv.s, inv.W);
    case ZonalRoute::kExplicitSum:
      return explicit_sum(params.n, params.m, params.p, inv.s, inv.W);
  }
  throw DomainError("unknown zonal route");
}

// sum_{m > M} a(m) r^m for positive a with non-increasing a(m+1)/a(m); the
// remainder past the last summed term is bounded geometrically.
template <class Growth>
double tail_sum(int M, double r, Growth a) {
  if (r <= 0.0) return 0.0;
  double sum = 0.0;
  double rm = std::pow(r, M + 1);
  for (int m = M + 1;; ++m) {
    const double t = a(m) * rm;
    sum += t;
    const double q = r * a(m + 1) / a(m);
    if (q < 1.0) {
      const double rest = t * q / (1.0 - q);
      if (rest <= 1e-3 * sum || t == 0.0 || m - M > 1000) return sum + rest;
    }
    if (m - M > 50'000'000) return std::numeric_limits<double>::infinity();
    rm *= r;
  }
}

template <class Growth>
std::pair<int, double> choose_degree(double scale, double r, double tol, Growth a, const char* what) {
  if (!(tol > 0.0)) throw DomainError("series tolerance must be positive");
  auto bound = [&](int M) { return scale * tail_sum(M, r, a); };
  if (bound(0) < tol) return {0, bound(0)};
  if (!(bound(kMaxSeriesDegree) < tol)) {
    throw DomainError(std::string(what) + ": x is too close to the boundary for tolerance " +
                      std::to_string(tol) + " (more than " + std::to_string(kMaxSeriesDegree) + " terms)");
  }
  int lo = 0;
  int hi = kMaxSeriesDegree;
  while (hi - lo > 1) {
    const int mid = lo + (hi - lo) / 2;
    if (bound(mid) < tol) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return {hi, bound(hi)};
}

void require_series_radius(const RotatedVector& x) {
  if (!(x.radius() < 1.0 - kSeriesMargin)) {
    throw DomainError("series evaluation needs |x| < 1 - 1e-6");
  }
}

}  // namespace

const char* route_name(ZonalRoute route) {
  switch (route) {
    case ZonalRoute::kSumOfZonals:
      return "sum_of_zonals";
    case ZonalRoute::kGegenbauerDiff:
      return "gegenbauer_diff";
    case ZonalRoute::kExplicitSum:
      return "explicit_sum";
  }
  return "unknown";
}

Complex zonal_harmonic(int n, int m, const RotatedVector& x, const RotatedVector& zeta) {
  require_np(n, 1);
  require_unit(zeta);
  require_size(x.size(), n);
  require_size(zeta.size(), n);
  return route_value({n, 1, m}, invariants(x, zeta), ZonalRoute::kGegenbauerDiff);
}

Complex zonal_harmonic(int n, int m, const ComplexVector& x, const RotatedVector& zeta) {
  require_np(n, 1);
  require_unit(zeta);
  require_size(x.size(), n);
  require_size(zeta.size(), n);
  return route_value({n, 1, m}, invariants(x, zeta.embed()), ZonalRoute::kGegenbauerDiff);
}

Complex zonal_polyharmonic(const KernelParams& params, const RotatedVector& x, const RotatedVector& zeta,
                           ZonalRoute route) {
  require_np(params.n, params.p);
  require_size(x.size(), params.n);
  require_size(zeta.size(), params.n);
  require_on_sphere(zeta, params.p);
  if (route == ZonalRoute::kSumOfZonals) {
    return sum_of_zonals_rotated(params.n, params.m, params.p, x, zeta);
  }
  return route_value(params, invariants(x, zeta), route);
}

Complex zonal_polyharmonic(const KernelParams& params, const ComplexVector& x, const RotatedVector& zeta,
                           ZonalRoute route) {
  require_np(params.n, params.p);
  require_size(x.size(), params.n);
  require_size(zeta.size(), params.n);
  require_on_sphere(zeta, params.p);
  return route_value(params, invariants(x, zeta.embed()), route);
}

Complex zonal_polyharmonic_ext(const KernelParams& params, const ComplexVector& x, const ComplexVector& w,
                               ZonalRoute route) {
  require_np(params.n, params.p);
  require_size(x.size(), params.n);
  require_size(w.size(), params.n);
  return route_value(params, invariants(x, w), route);
}

Complex poisson_kernel(int n, int p, const RotatedVector& x, const RotatedVector& zeta) {
  require_np(n, p);
  require_size(x.size(), n);
  require_size(zeta.size(), n);
  require_in_ball(x, p);
  require_on_sphere(zeta, p);
  const auto [s, W] = invariants(x, zeta);
  const Complex den = checked_denominator(W - 2.0 * s + 1.0, "Poisson kernel");
  return (1.0 - detail::ipow(bilinear_square(x), p)) / half_power(den, n);
}

KernelValue poisson_kernel_series(int n, int p, const RotatedVector& x, const RotatedVector& zeta, double tol) {
  require_np(n, p);
  require_size(x.size(), n);
  require_size(zeta.size(), n);
  require_on_sphere(zeta, p);
  require_series_radius(x);
  const auto [M, bound] = series_degree(n, p, x.radius(), tol);
  const auto [s, W] = invariants(x, zeta);
  const auto g = gegenbauer_homogeneous_table(0.5 * n, M, s, W);
  const Complex wp = detail::ipow(W, p);
  Complex sum{};
  for (int m = 0; m <= M; ++m) {
    Complex z = g[m];
    if (m >= 2 * p) z -= wp * g[m - 2 * p];
    sum += z;
  }
  return {sum, M + 1, bound};
}

KernelValue poisson_kernel_gegenbauer(int n, int p, const RotatedVector& x, const RotatedVector& zeta,
                                      double tol) {
  require_np(n, p);
  require_size(x.size(), n);
  require_size(zeta.size(), n);
  require_on_sphere(zeta, p);
  require_series_radius(x);
  const Complex factor = 1.0 - detail::ipow(bilinear_square(x), p);
  // C_m^{n/2}(1) = binomial(m + n - 1, n - 1)
  auto growth = [n](int m) {
    double c = 1.0;
    for (int j = 1; j < n; ++j) c *= double(m + j) / j;
    return c;
  };
  const auto [M, bound] =
      choose_degree(std::max(std::abs(factor), 1e-300), x.radius(), tol, growth, "Gegenbauer series");
  const auto [s, W] = invariants(x, zeta);
  const auto g = gegenbauer_homogeneous_table(0.5 * n, M, s, W);
  Complex sum{};
  for (const auto& v : g) sum += v;
  return {factor * sum, M + 1, bound};
}

Complex poisson_boundary_form(int n, int p, int j, const RotatedVector& x, std::span<const double> zeta) {
  require_np(n, p);
  if (j < 0 || j >= p) throw DomainError("sector index j must lie in [0, p)");
  require_size(x.size(), n);
  require_size(zeta.size(), n);
  require_in_ball(x, p);
  if (std::abs(std::sqrt(real_dot(zeta, zeta)) - 1.0) > kUnitTolerance) {
    throw DomainError("zeta must be a real unit vector");
  }
  const ComplexVector v = x.rotated(-kPi * j / p).embed() - ComplexVector::from_real(zeta);
  const Complex dist = complex_abs(v);
  if (std::norm(dist) <= kSingularThreshold) throw SingularEvaluation("Poisson boundary form denominator vanishes");
  return (1.0 - detail::ipow(bilinear_square(x), p)) / detail::ipow(dist, n);
}

Complex poisson_boundary_form_ext(int n, int p, int j, const ComplexVector& z, std::span<const double> zeta) {
  require_np(n, p);
  require_size(z.size(), n);
  require_size(zeta.size(), n);
  const ComplexVector v = z.scaled(std::polar(1.0, -kPi * j / p)) - ComplexVector::from_real(zeta);
  const Complex dist = complex_abs(v);
  if (std::norm(dist) <= kSingularThreshold) throw SingularEvaluation("Poisson boundary form denominator vanishes");
  return (1.0 - detail::ipow(bilinear_square(z), p)) / detail::ipow(dist, n);
}

Complex poisson_kernel_extended(int n, int p, const ComplexVector& z, const ComplexVector& w) {
  require_np(n, p);
  require_size(z.size(), n);
  require_size(w.size(), n);
  const auto [s, W] = invariants(z, w);
  const Complex den = checked_denominator(W - 2.0 * s + 1.0, "Poisson kernel");
  return (1.0 - detail::ipow(W, p)) / half_power(den, n);
}

Complex cauchy_hua(int n, const ComplexVector& z, const ComplexVector& w) {
  require_np(n, 1);
  require_size(z.size(), n);
  require_size(w.size(), n);
  const auto [s, W] = invariants(z, w);
  const Complex den = checked_denominator(W - 2.0 * s + 1.0, "Cauchy-Hua kernel");
  return 1.0 / half_power(den, n);
}

Complex cauchy_hua(int n, const ComplexVector& z, double angle, std::span<const double> zeta) {
  require_np(n, 1);
  require_size(z.size(), n);
  require_size(zeta.size(), n);
  // w = e^{i angle} zeta: conj(w)^2 = e^{-2 i angle} |zeta|^2, z.conj(w) = e^{-i angle} z.zeta
  Complex dot{};
  for (int j = 0; j < n; ++j) dot += z[j] * zeta[j];
  const Complex back = std::polar(1.0, -angle);
  const Complex W = bilinear_square(z) * back * back * real_dot(zeta, zeta);
  const Complex den = checked_denominator(W - 2.0 * back * dot + 1.0, "Cauchy-Hua kernel");
  return 1.0 / half_power(den, n);
}

HuaGap hua_convergence_gap(int n, std::span<const std::pair<ComplexVector, ComplexVector>> sample, int p) {
  require_np(n, p);
  HuaGap out{0.0, 0.0, 0.0, 0.0};
  for (const auto& [z, w] : sample) {
    if (!in_lie_domain(z, w)) throw DomainError("sample pair lies outside the Lie domain");
    const Complex h = cauchy_hua(n, z, w);
    out.gap = std::max(out.gap, std::abs(poisson_kernel_extended(n, p, z, w) - h));
    out.max_h = std::max(out.max_h, std::abs(h));
    out.alpha = std::max(out.alpha, hermitian_norm(z) * hermitian_norm(w));
  }
  out.bound = std::pow(out.alpha, 2 * p) * out.max_h;
  return out;
}

double tail_constant(int n, int p) {
  require_np(n, p);
  static std::mutex mutex;
  static std::map<std::pair<int, int>, double> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find({n, p}); it != cache.end()) return it->second;
  }
  std::mt19937_64 rng(0x7a11ULL * 1000003ULL + static_cast<unsigned>(n) * 131ULL + static_cast<unsigned>(p));
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> radius(0.05, 0.95);
  std::uniform_int_distribution<int> sector(0, p - 1);
  std::uniform_int_distribution<int> degree(1, 20);
  auto direction = [&] {
    RealVector v(n);
    double norm2 = 0.0;
    for (auto& c : v) {
      c = normal(rng);
      norm2 += c * c;
    }
    for (auto& c : v) c /= std::sqrt(norm2);
    return v;
  };
  double worst = 0.0;
  for (int probe = 0; probe < 200; ++probe) {
    const double r = radius(rng);
    RealVector a = direction();
    for (auto& c : a) c *= r;
    const RotatedVector x = RotatedVector::sector_point(sector(rng), p, std::move(a));
    const RotatedVector zeta = RotatedVector::sector_point(sector(rng), p, direction());
    const int m = degree(rng);
    const auto inv = invariants(x, zeta);
    const double ratio = std::abs(gegenbauer_diff(n, m, p, inv.s, inv.W)) / (p * std::pow(m, n - 2) * std::pow(r, m));
    worst = std::max(worst, ratio);
  }
  const double constant = 2.0 * worst;
  std::lock_guard lock(mutex);
  cache.emplace(std::make_pair(n, p), constant);
  return constant;
}

std::pair<int, double> series_degree(int n, int p, double r, double tol) {
  require_np(n, p);
  if (!(r >= 0.0 && r < 1.0 - kSeriesMargin)) throw DomainError("series evaluation needs |x| < 1 - 1e-6");
  const int power = n - 2;
  return choose_degree(tail_constant(n, p) * p, r, tol, [power](int m) { return std::pow(double(m), power); },
                       "Poisson series");
}

}  // namespace polyharm
