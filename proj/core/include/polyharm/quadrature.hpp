#pragma once

// Quadrature on the unit sphere S^{n-1} with the normalized measure
// (sigma(S) = 1), the rotated inner product on the union of rotated spheres
// and the invariant measure on the Lie sphere.
//
// n = 2: N equally spaced angles, exact through degree N - 1.
// n = 3: Gauss-Legendre in the polar cosine times 2L uniform azimuths, exact
//        through degree 2L - 1.
// n >= 4: seeded Monte Carlo (exactness 0); error ~ 1/sqrt(N).

#include <complex>
#include <cstddef>
#include <cstdint>
#include <cmath>
#include <exception>
#include <nlohmann/json_fwd.hpp>
#include <span>
#include <string>
#include <vector>

#include "polyharm/boundary.hpp"
#include "polyharm/error.hpp"
#include "polyharm/geometry.hpp"

namespace polyharm {

inline constexpr std::uint64_t kDefaultSeed = 20240601;

/// Neumaier summation, separately on real and imaginary parts.
class CompensatedSum {
 public:
  void add(Complex x) {
    add_part(re_, re_c_, x.real());
    add_part(im_, im_c_, x.imag());
  }
  CompensatedSum& operator+=(Complex x) {
    add(x);
    return *this;
  }
  Complex value() const { return {re_ + re_c_, im_ + im_c_}; }

 private:
  static void add_part(double& sum, double& comp, double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }
  double re_ = 0.0, re_c_ = 0.0, im_ = 0.0, im_c_ = 0.0;
};

class SphereRule {
 public:
  /// nodes are stored row-major, n coordinates per node.
  SphereRule(int n, int resolution, std::vector<double> nodes, std::vector<double> weights,
             int exactness_degree, bool monte_carlo, std::uint64_t seed);

  int dimension() const noexcept { return n_; }
  int resolution() const noexcept { return resolution_; }
  std::size_t size() const noexcept { return weights_.size(); }
  std::span<const double> node(std::size_t i) const {
    return {nodes_.data() + i * static_cast<std::size_t>(n_), static_cast<std::size_t>(n_)};
  }
  double weight(std::size_t i) const { return weights_[i]; }
  std::span<const double> weights() const noexcept { return weights_; }
  std::span<const double> nodes() const noexcept { return nodes_; }
  int exactness_degree() const noexcept { return exactness_; }
  bool monte_carlo() const noexcept { return monte_carlo_; }
  std::uint64_t seed() const noexcept { return seed_; }

 private:
  int n_;
  int resolution_;
  std::vector<double> nodes_;
  std::vector<double> weights_;
  int exactness_;
  bool monte_carlo_;
  std::uint64_t seed_;
};

/// Throws DomainError for resolution < 4 or n < 2.
SphereRule sphere_rule(int n, int resolution, std::uint64_t seed = kDefaultSeed);
/// Smallest exact rule integrating polynomials of the given degree (n in
/// {2, 3}); a 20000-sample Monte Carlo rule for n >= 4.
SphereRule sphere_rule_for_degree(int n, int degree, std::uint64_t seed = kDefaultSeed);

/// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int count, std::vector<double>& nodes, std::vector<double>& weights);

/// sum_i w_i f(node_i) in node order with compensated summation. f takes a
/// std::span<const double> and returns something convertible to Complex.
template <class F>
Complex sphere_integral(F&& f, const SphereRule& rule) {
  CompensatedSum sum;
  std::size_t i = 0;
  try {
    for (; i < rule.size(); ++i) sum += rule.weight(i) * Complex(f(rule.node(i)));
  } catch (const SingularEvaluation& e) {
    throw SingularEvaluation(std::string(e.what()) + " (node " + std::to_string(i) + ")");
  } catch (const EvaluationError&) {
    throw;
  } catch (const std::exception& e) {
    throw EvaluationError(e.what(), i);
  }
  return sum.value();
}

/// Product rule for the Lie sphere measure (1/pi) int_0^pi int_S F(e^{i phi} zeta).
struct LieSphereRule {
  SphereRule base;
  int angular_count;

  double angle(int a) const { return kPi * a / angular_count; }
};

LieSphereRule lie_sphere_rule(SphereRule base, int angular_count);

/// (1/A) sum_phi sum_zeta w_zeta F(phi, zeta); F receives the rotation angle
/// and the real unit vector.
template <class F>
Complex lie_sphere_integral(F&& f, const LieSphereRule& rule) {
  CompensatedSum sum;
  for (int a = 0; a < rule.angular_count; ++a) {
    const double phi = rule.angle(a);
    std::size_t i = 0;
    try {
      for (; i < rule.base.size(); ++i) {
        sum += rule.base.weight(i) * Complex(f(phi, rule.base.node(i)));
      }
    } catch (const SingularEvaluation& e) {
      throw SingularEvaluation(std::string(e.what()) + " (angle " + std::to_string(a) + ", node " +
                               std::to_string(i) + ")");
    } catch (const std::exception& e) {
      throw EvaluationError(std::string(e.what()) + " (angle " + std::to_string(a) + ")", i);
    }
  }
  return sum.value() / double(rule.angular_count);
}

/// <f, g> = (1/p) int_S sum_j f(e^{j pi i/p} zeta) conj(g(e^{j pi i/p} zeta)) dsigma.
Complex rotated_inner_product(const BoundaryData& f, const BoundaryData& g, const SphereRule& rule);

nlohmann::json rule_to_json(const SphereRule& rule);
SphereRule rule_from_json(const nlohmann::json& j);

}  // namespace polyharm
