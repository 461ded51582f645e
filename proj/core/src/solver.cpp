#include "polyharm/solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "polyharm/detail/numeric.hpp"
#include "polyharm/error.hpp"
#include "polyharm/gegenbauer.hpp"
#include "polyharm/kernels.hpp"
#include "polyharm/polyalg.hpp"

namespace polyharm {

namespace {

constexpr int kMaxCircleNodes = 1 << 20;
constexpr int kMaxLegendreNodes = 600;

void require_dimension(const BoundaryData& f, const SphereRule& rule) {
  if (f.dimension() != rule.dimension()) throw DimensionMismatch("boundary data and rule dimensions differ");
}

Complex kernel_weight(KernelForm form, int n, int p, int j, const RotatedVector& x, std::span<const double> zeta) {
  if (form == KernelForm::kBoundaryForm) return poisson_boundary_form(n, p, j, x, zeta);
  return poisson_kernel(n, p, x, RotatedVector::sector_point(j, p, RealVector(zeta.begin(), zeta.end())));
}

// Boundary values f_j(zeta_i), laid out [sector][node].
std::vector<Complex> sample(const BoundaryData& f, const SphereRule& rule) {
  const int p = f.order();
  std::vector<Complex> values(static_cast<std::size_t>(p) * rule.size());
  for (int j = 0; j < p; ++j) {
    for (std::size_t i = 0; i < rule.size(); ++i) {
      try {
        values[j * rule.size() + i] = f(j, rule.node(i));
      } catch (const SingularEvaluation&) {
        throw;
      } catch (const std::exception& e) {
        throw EvaluationError(std::string(e.what()) + " (sector " + std::to_string(j) + ")", i);
      }
    }
  }
  return values;
}

int smallest_kernel_degree(double radius, int n, double tol) {
  // |terms of degree m| <~ (m + 1)^n radius^m
  int m = 0;
  while (std::pow(m + 1.0, n) * std::pow(radius, m) >= tol) {
    if (++m > 5000) throw DomainError("Lie-sphere point too close to the boundary for the tolerance");
  }
  return m;
}

}  // namespace

PoissonIntegrator::PoissonIntegrator(int n, int p, std::vector<RotatedVector> points, SphereRule rule,
                                     KernelForm form)
    : n_(n), p_(p), points_(std::move(points)), rule_(std::move(rule)) {
  if (rule_.dimension() != n) throw DimensionMismatch("rule dimension differs from n");
  const std::size_t per_point = static_cast<std::size_t>(p) * rule_.size();
  weights_.resize(points_.size() * per_point);
  for (std::size_t k = 0; k < points_.size(); ++k) {
    require_interior(points_[k], p);
    Complex* w = weights_.data() + k * per_point;
    for (int j = 0; j < p; ++j) {
      for (std::size_t i = 0; i < rule_.size(); ++i) {
        try {
          w[j * rule_.size() + i] = rule_.weight(i) / p * kernel_weight(form, n, p, j, points_[k], rule_.node(i));
        } catch (const SingularEvaluation& e) {
          throw SingularEvaluation(std::string(e.what()) + " (point " + std::to_string(k) + ", node " +
                                   std::to_string(i) + ")");
        }
      }
    }
  }
}

std::vector<Complex> PoissonIntegrator::apply(const BoundaryData& f) const {
  if (f.order() != p_) throw DomainError("boundary data order differs from the integrator's p");
  require_dimension(f, rule_);
  const auto values = sample(f, rule_);
  std::vector<Complex> out(points_.size());
  for (std::size_t k = 0; k < points_.size(); ++k) {
    const Complex* w = weights_.data() + k * values.size();
    CompensatedSum sum;
    for (std::size_t i = 0; i < values.size(); ++i) sum += w[i] * values[i];
    out[k] = sum.value();
  }
  return out;
}

void require_interior(const RotatedVector& x, int p) {
  if (!(x.radius() < 1.0 - kInteriorMargin)) {
    throw DomainError("point is not inside the rotated ball (|Re x| = " + std::to_string(x.radius()) + ")");
  }
  if (!x.sector(p)) {
    throw DomainError("point is not in the rotated ball: angle " + std::to_string(x.angle()) +
                      " is not a multiple of pi/" + std::to_string(p));
  }
}

Complex poisson_integral(const BoundaryData& f, const RotatedVector& x, const SphereRule& rule) {
  return PoissonIntegrator(f.dimension(), f.order(), {x}, rule, KernelForm::kClosedForm).apply(f)[0];
}

SphereRule auto_rule(int n, int p, int data_degree, double max_radius, double kernel_tol, std::uint64_t seed) {
  if (n >= 4) return sphere_rule_for_degree(n, 0, seed);
  const int kernel_degree = max_radius > 0.0 ? series_degree(n, p, max_radius, kernel_tol).first : 0;
  const int degree = std::max(0, data_degree) + kernel_degree;
  if ((n == 2 && degree + 1 > kMaxCircleNodes) || (n == 3 && (degree + 2) / 2 > kMaxLegendreNodes)) {
    throw DomainError("automatic quadrature would need exactness " + std::to_string(degree) +
                      "; points are too close to the boundary");
  }
  return sphere_rule_for_degree(n, degree, seed);
}

DirichletSolution dirichlet_solve(const BoundaryData& f, std::vector<RotatedVector> points,
                                  const DirichletOptions& options) {
  const int n = f.dimension();
  const int p = f.order();
  double max_radius = 0.0;
  std::vector<int> sectors;
  for (const auto& x : points) {
    require_interior(x, p);
    max_radius = std::max(max_radius, x.radius());
    sectors.push_back(*x.sector(p));
  }

  std::optional<double> doubling;
  const bool automatic = !options.resolution;
  SphereRule rule = [&] {
    if (options.resolution) return sphere_rule(n, *options.resolution, options.seed);
    if (!f.polynomial()) {
      throw DomainError("boundary data without a polynomial tag needs an explicit quadrature resolution");
    }
    return auto_rule(n, p, f.polynomial()->degree(), max_radius, options.kernel_tolerance, options.seed);
  }();

  auto values = PoissonIntegrator(n, p, points, rule, KernelForm::kBoundaryForm).apply(f);
  if (!automatic && !f.polynomial()) {
    const SphereRule finer = sphere_rule(n, 2 * *options.resolution, options.seed);
    const auto refined = PoissonIntegrator(n, p, points, finer, KernelForm::kBoundaryForm).apply(f);
    double change = 0.0;
    for (std::size_t k = 0; k < values.size(); ++k) change = std::max(change, std::abs(refined[k] - values[k]));
    doubling = change;
  }

  auto evaluator = [f, rule, n, p](const RotatedVector& x) {
    return PoissonIntegrator(n, p, {x}, rule, KernelForm::kBoundaryForm).apply(f)[0];
  };
  return DirichletSolution{n,         p,         std::move(points), std::move(values), std::move(sectors),
                           rule,      automatic, doubling,          evaluator};
}

std::vector<Complex> spectral_components(const BoundaryData& f, int max_degree, const RotatedVector& eta,
                                         const SphereRule& rule) {
  const int n = f.dimension();
  const int p = f.order();
  require_dimension(f, rule);
  if (std::abs(eta.radius() - 1.0) > 1e-12 || !eta.sector(p)) {
    throw DomainError("eta must lie on the rotated sphere");
  }
  if (max_degree < 0) return {};
  const auto values = sample(f, rule);
  const auto b = eta.coords();
  std::vector<CompensatedSum> sums(max_degree + 1);
  for (int j = 0; j < p; ++j) {
    const double delta = kPi * j / p - eta.angle();
    for (std::size_t i = 0; i < rule.size(); ++i) {
      const auto zeta = rule.node(i);
      double dot = 0.0;
      for (int c = 0; c < n; ++c) dot += zeta[c] * b[c];
      // invariants of (e^{j pi i/p} zeta, eta); both have unit real part
      const Complex s = std::polar(dot, delta);
      const Complex W = std::polar(1.0, 2.0 * delta);
      const auto g = gegenbauer_homogeneous_table(0.5 * n, max_degree, s, W);
      const Complex wp = detail::ipow(W, p);
      const Complex fv = rule.weight(i) * values[j * rule.size() + i];
      for (int m = 0; m <= max_degree; ++m) {
        Complex z = g[m];
        if (m >= 2 * p) z -= wp * g[m - 2 * p];
        sums[m] += fv * std::conj(z);
      }
    }
  }
  std::vector<Complex> out;
  for (const auto& s : sums) out.push_back(s.value() / double(p));
  return out;
}

Complex spectral_component(const BoundaryData& f, int m, const RotatedVector& eta, const SphereRule& rule) {
  if (m < 0) return 0.0;
  return spectral_components(f, m, eta, rule).back();
}

std::vector<Complex> hua_reproduce(std::span<const NumericPoly> us, const ComplexVector& z,
                                   const LieSphereRule& rule) {
  const int n = static_cast<int>(z.size());
  if (rule.base.dimension() != n) throw DimensionMismatch("rule dimension differs from z");
  if (!(lie_norm(z) < 1.0)) throw DomainError("z must lie in the Lie ball");
  const std::size_t nodes = rule.base.size();
  std::vector<Complex> kernel(static_cast<std::size_t>(rule.angular_count) * nodes);
  for (int a = 0; a < rule.angular_count; ++a) {
    for (std::size_t i = 0; i < nodes; ++i) {
      kernel[a * nodes + i] = rule.base.weight(i) * cauchy_hua(n, z, rule.angle(a), rule.base.node(i));
    }
  }
  std::vector<Complex> out;
  for (const auto& u : us) {
    if (u.nvars() != n) throw DimensionMismatch("polynomial and z dimensions differ");
    CompensatedSum sum;
    for (int a = 0; a < rule.angular_count; ++a) {
      for (std::size_t i = 0; i < nodes; ++i) {
        sum += kernel[a * nodes + i] * evaluate(u, rule.angle(a), rule.base.node(i));
      }
    }
    out.push_back(sum.value() / double(rule.angular_count));
  }
  return out;
}

Complex hua_reproduce(const NumericPoly& u, const ComplexVector& z, const LieSphereRule& rule) {
  return hua_reproduce(std::span<const NumericPoly>(&u, 1), z, rule)[0];
}

LieSphereRule auto_lie_rule(int n, int data_degree, double lie_radius, double kernel_tol) {
  if (!(lie_radius >= 0.0 && lie_radius < 1.0)) throw DomainError("Lie radius must lie in [0, 1)");
  const int kernel_degree = smallest_kernel_degree(lie_radius, n, kernel_tol);
  const int degree = std::max(0, data_degree) + kernel_degree;
  return lie_sphere_rule(sphere_rule_for_degree(n, degree), degree / 2 + 2);
}

SphereRule auto_limit_rule(int n, int data_degree, const ComplexVector& z, double kernel_tol, std::uint64_t seed) {
  const double lie_radius = lie_norm(z);
  if (!(lie_radius < 1.0)) throw DomainError("z must lie in the Lie ball");
  return sphere_rule_for_degree(n, std::max(0, data_degree) + smallest_kernel_degree(lie_radius, n, kernel_tol), seed);
}

bool LimitExperiment::non_increasing(double slack) const {
  for (std::size_t k = 1; k < rows.size(); ++k) {
    if (rows[k].error > rows[k - 1].error + slack) return false;
  }
  return true;
}

LimitExperiment polyharmonic_limit_experiment(const NumericPoly& u, const ComplexVector& z,
                                              std::span<const int> p_list, const SphereRule& rule,
                                              const LieSphereRule& lie_rule) {
  const int n = static_cast<int>(z.size());
  if (u.nvars() != n) throw DimensionMismatch("polynomial and z dimensions differ");
  if (rule.dimension() != n) throw DimensionMismatch("rule dimension differs from z");
  if (!(lie_norm(z) < 1.0)) throw DomainError("z must lie in the Lie ball");
  for (std::size_t k = 0; k < p_list.size(); ++k) {
    if (p_list[k] < 1) throw DomainError("p values must be positive");
    if (k > 0 && p_list[k] <= p_list[k - 1]) throw DomainError("p list must be strictly ascending");
  }
  LimitExperiment out;
  out.exact = evaluate(u, z);
  for (const int p : p_list) {
    CompensatedSum sum;
    for (int k = 0; k < p; ++k) {
      const double angle = kPi * k / p;
      for (std::size_t i = 0; i < rule.size(); ++i) {
        const auto zeta = rule.node(i);
        sum += rule.weight(i) * poisson_boundary_form_ext(n, p, k, z, zeta) * evaluate(u, angle, zeta);
      }
    }
    const Complex value = sum.value() / double(p);
    out.rows.push_back({p, value, std::abs(value - out.exact)});
  }
  out.hua_value = hua_reproduce(u, z, lie_rule);
  return out;
}

}  // namespace polyharm
