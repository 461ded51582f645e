#pragma once

// Poisson integrals over the rotated sphere, the Dirichlet problem on the
// union of rotated balls, spectral components, and the Cauchy-Hua
// reproducing integral over the Lie sphere.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "polyharm/boundary.hpp"
#include "polyharm/geometry.hpp"
#include "polyharm/multipoly.hpp"
#include "polyharm/quadrature.hpp"

namespace polyharm {

/// Points of the rotated ball must keep this distance from the boundary.
inline constexpr double kInteriorMargin = 1e-9;

/// How the kernel weight conj(P_p(e^{j pi i/p} zeta, x)) is computed.
enum class KernelForm {
  kClosedForm,    // P_p(x, e^{j pi i/p} zeta) from the closed form
  kBoundaryForm,  // (1 - |x|^{2p}) / |e^{-j pi i/p} x - zeta|^n
};

/// Precomputes kernel weights for a fixed point set and rule, so that many
/// boundary data can be integrated against them.
class PoissonIntegrator {
 public:
  PoissonIntegrator(int n, int p, std::vector<RotatedVector> points, SphereRule rule, KernelForm form);

  /// (1/p) sum_j int_S f(e^{j pi i/p} zeta) conj(P_p(e^{j pi i/p} zeta, x)) dsigma
  /// at every point, in point order.
  std::vector<Complex> apply(const BoundaryData& f) const;

  const SphereRule& rule() const noexcept { return rule_; }
  const std::vector<RotatedVector>& points() const noexcept { return points_; }

 private:
  int n_;
  int p_;
  std::vector<RotatedVector> points_;
  SphereRule rule_;
  std::vector<Complex> weights_;  // [point][sector][node]
};

/// Throws DomainError unless x lies in the rotated ball with the interior margin.
void require_interior(const RotatedVector& x, int p);

/// Poisson integral with the closed-form kernel.
Complex poisson_integral(const BoundaryData& f, const RotatedVector& x, const SphereRule& rule);

/// Exact-degree rule for polynomial data of the given degree at points of
/// radius <= max_radius: exactness data_degree + M with M the kernel series
/// degree for kernel_tol. Throws DomainError past the resolution cap.
SphereRule auto_rule(int n, int p, int data_degree, double max_radius, double kernel_tol,
                     std::uint64_t seed = kDefaultSeed);

struct DirichletSolution {
  int n;
  int p;
  std::vector<RotatedVector> points;
  std::vector<Complex> values;
  std::vector<int> sectors;  // sector index of each point
  SphereRule rule;
  bool auto_resolution;
  /// Change on doubling the resolution (untagged data with a user rule), else empty.
  std::optional<double> doubling_change;
  /// u at any interior point, with the same rule and kernel form.
  std::function<Complex(const RotatedVector&)> evaluate;

  bool converged() const { return !doubling_change || *doubling_change < 1e-8; }
};

struct DirichletOptions {
  std::optional<int> resolution;  // empty: choose from the polynomial tag
  double kernel_tolerance = 1e-13;
  std::uint64_t seed = kDefaultSeed;
};

/// u(x) = (1/p) sum_k int_S (1 - |x|^{2p}) / |e^{-k pi i/p} x - zeta|^n f(e^{k pi i/p} zeta) dsigma.
DirichletSolution dirichlet_solve(const BoundaryData& f, std::vector<RotatedVector> points,
                                  const DirichletOptions& options = {});

/// <f, Z^p_m(., eta)> on the rotated sphere for m = 0..max_degree.
std::vector<Complex> spectral_components(const BoundaryData& f, int max_degree, const RotatedVector& eta,
                                         const SphereRule& rule);
Complex spectral_component(const BoundaryData& f, int m, const RotatedVector& eta, const SphereRule& rule);

/// int_{LS} H(z, w) u(w) dsigma~(w) for each u; z must be in the Lie ball.
std::vector<Complex> hua_reproduce(std::span<const NumericPoly> us, const ComplexVector& z,
                                   const LieSphereRule& rule);
Complex hua_reproduce(const NumericPoly& u, const ComplexVector& z, const LieSphereRule& rule);

/// Lie-sphere rule resolving H(z, .) u to about kernel_tol for L(z) <= lie_radius
/// and u of the given degree (n in {2, 3}).
LieSphereRule auto_lie_rule(int n, int data_degree, double lie_radius, double kernel_tol);

/// Sphere rule for the u_p(z) integrals of polyharmonic_limit_experiment,
/// resolving the kernel at z to about kernel_tol.
SphereRule auto_limit_rule(int n, int data_degree, const ComplexVector& z, double kernel_tol,
                           std::uint64_t seed = kDefaultSeed);

struct LimitRow {
  int p;
  Complex value;
  double error;  // |u_p(z) - u(z)|
};

struct LimitExperiment {
  std::vector<LimitRow> rows;
  Complex exact;       // u(z)
  Complex hua_value;   // Lie-sphere integral of H(z, .) u
  bool non_increasing(double slack = 1e-12) const;
};

/// u_p(z) = (1/p) sum_k int_S (1 - (z^2)^p) / |e^{-k pi i/p} z - zeta|^n u(e^{k pi i/p} zeta) dsigma
/// for each p of the ascending p_list, plus the Cauchy-Hua value.
LimitExperiment polyharmonic_limit_experiment(const NumericPoly& u, const ComplexVector& z,
                                              std::span<const int> p_list, const SphereRule& rule,
                                              const LieSphereRule& lie_rule);

}  // namespace polyharm
