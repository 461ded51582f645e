#include "polyharm/quadrature.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <random>

namespace polyharm {

namespace {

constexpr int kMonteCarloSamples = 20000;

// Legendre P_count and its derivative at x by the three-term recurrence.
std::pair<double, double> legendre_with_derivative(int count, double x) {
  double p0 = 1.0;
  double p1 = x;
  for (int k = 2; k <= count; ++k) {
    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  const double dp = count * (x * p1 - p0) / (x * x - 1.0);
  return {p1, dp};
}

SphereRule circle_rule(int count) {
  std::vector<double> nodes;
  nodes.reserve(2 * static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    const double theta = 2.0 * kPi * k / count;
    nodes.push_back(std::cos(theta));
    nodes.push_back(std::sin(theta));
  }
  return SphereRule(2, count, std::move(nodes), std::vector<double>(count, 1.0 / count), count - 1,
                    false, 0);
}

SphereRule product_rule_3d(int legendre_count) {
  std::vector<double> cosines, gl_weights;
  gauss_legendre(legendre_count, cosines, gl_weights);
  const int azimuths = 2 * legendre_count;
  std::vector<double> nodes, weights;
  nodes.reserve(3 * static_cast<std::size_t>(legendre_count) * azimuths);
  for (int i = 0; i < legendre_count; ++i) {
    const double t = cosines[i];
    const double s = std::sqrt(std::max(0.0, 1.0 - t * t));
    for (int k = 0; k < azimuths; ++k) {
      const double phi = 2.0 * kPi * k / azimuths;
      nodes.push_back(s * std::cos(phi));
      nodes.push_back(s * std::sin(phi));
      nodes.push_back(t);
      weights.push_back(gl_weights[i] / (2.0 * azimuths));
    }
  }
  return SphereRule(3, legendre_count, std::move(nodes), std::move(weights), 2 * legendre_count - 1,
                    false, 0);
}

SphereRule monte_carlo_rule(int n, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::vector<double> nodes(static_cast<std::size_t>(n) * samples);
  for (int s = 0; s < samples; ++s) {
    double* x = nodes.data() + static_cast<std::size_t>(s) * n;
    double norm2 = 0.0;
    do {
      norm2 = 0.0;
      for (int j = 0; j < n; ++j) {
        x[j] = normal(rng);
        norm2 += x[j] * x[j];
      }
    } while (norm2 == 0.0);
    const double inv = 1.0 / std::sqrt(norm2);
    for (int j = 0; j < n; ++j) x[j] *= inv;
  }
  return SphereRule(n, samples, std::move(nodes), std::vector<double>(samples, 1.0 / samples), 0,
                    true, seed);
}

}  // namespace

SphereRule::SphereRule(int n, int resolution, std::vector<double> nodes, std::vector<double> weights,
                       int exactness_degree, bool monte_carlo, std::uint64_t seed)
    : n_(n),
      resolution_(resolution),
      nodes_(std::move(nodes)),
      weights_(std::move(weights)),
      exactness_(exactness_degree),
      monte_carlo_(monte_carlo),
      seed_(seed) {
  if (n < 2) throw DomainError("sphere dimension n must be at least 2");
  if (weights_.empty() || nodes_.size() != weights_.size() * static_cast<std::size_t>(n)) {
    throw DomainError("sphere rule needs n coordinates per weight");
  }
  CompensatedSum total;
  for (double w : weights_) {
    if (!(w > 0.0)) throw DomainError("sphere rule weights must be positive");
    total += w;
  }
  if (std::abs(total.value().real() - 1.0) > 1e-12) throw DomainError("sphere rule weights must sum to 1");
  for (std::size_t i = 0; i < size(); ++i) {
    double norm2 = 0.0;
    for (double c : node(i)) norm2 += c * c;
    if (std::abs(norm2 - 1.0) > 1e-12) throw DomainError("sphere rule node off the unit sphere");
  }
}

void gauss_legendre(int count, std::vector<double>& nodes, std::vector<double>& weights) {
  if (count < 1) throw DomainError("Gauss-Legendre needs at least one node");
  nodes.assign(count, 0.0);
  weights.assign(count, 0.0);
  for (int i = 0; i < (count + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (count + 0.5));
    for (int iter = 0; iter < 100; ++iter) {
      const auto [p, dp] = legendre_with_derivative(count, x);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const auto [p, dp] = legendre_with_derivative(count, x);
    (void)p;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    nodes[i] = -x;
    nodes[count - 1 - i] = x;
    weights[i] = w;
    weights[count - 1 - i] = w;
  }
  if (count % 2 == 1) nodes[count / 2] = 0.0;
}

SphereRule sphere_rule(int n, int resolution, std::uint64_t seed) {
  if (n < 2) throw DomainError("sphere dimension n must be at least 2");
  if (resolution < 4) throw DomainError("quadrature resolution must be at least 4");
  if (n == 2) return circle_rule(resolution);
  if (n == 3) return product_rule_3d(resolution);
  return monte_carlo_rule(n, resolution, seed);
}

SphereRule sphere_rule_for_degree(int n, int degree, std::uint64_t seed) {
  if (degree < 0) degree = 0;
  if (n == 2) return sphere_rule(2, std::max(4, degree + 1), seed);
  if (n == 3) return sphere_rule(3, std::max(4, (degree + 2) / 2), seed);
  return sphere_rule(n, kMonteCarloSamples, seed);
}

LieSphereRule lie_sphere_rule(SphereRule base, int angular_count) {
  if (angular_count < 1) throw DomainError("Lie sphere rule needs at least one angle");
  return LieSphereRule{std::move(base), angular_count};
}

Complex rotated_inner_product(const BoundaryData& f, const BoundaryData& g, const SphereRule& rule) {
  if (f.order() != g.order()) throw DomainError("inner product of data on different rotated spheres");
  if (f.dimension() != g.dimension() || f.dimension() != rule.dimension()) {
    throw DimensionMismatch("boundary data and rule dimensions differ");
  }
  const int p = f.order();
  CompensatedSum sum;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const auto zeta = rule.node(i);
    for (int j = 0; j < p; ++j) {
      try {
        sum += rule.weight(i) * f(j, zeta) * std::conj(g(j, zeta));
      } catch (const SingularEvaluation&) {
        throw;
      } catch (const std::exception& e) {
        throw EvaluationError(std::string(e.what()) + " (sector " + std::to_string(j) + ")", i);
      }
    }
  }
  return sum.value() / double(p);
}

nlohmann::json rule_to_json(const SphereRule& rule) {
  nlohmann::json nodes = nlohmann::json::array();
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const auto x = rule.node(i);
    nodes.push_back(std::vector<double>(x.begin(), x.end()));
  }
  return {{"dimension", rule.dimension()},
          {"resolution", rule.resolution()},
          {"exactness_degree", rule.exactness_degree()},
          {"monte_carlo", rule.monte_carlo()},
          {"seed", rule.seed()},
          {"nodes", std::move(nodes)},
          {"weights", std::vector<double>(rule.weights().begin(), rule.weights().end())}};
}

SphereRule rule_from_json(const nlohmann::json& j) {
  const int n = j.at("dimension").get<int>();
  std::vector<double> nodes;
  for (const auto& x : j.at("nodes")) {
    if (x.size() != static_cast<std::size_t>(n)) throw DomainError("rule node has the wrong dimension");
    for (const auto& c : x) nodes.push_back(c.get<double>());
  }
  return SphereRule(n, j.at("resolution").get<int>(), std::move(nodes),
                    j.at("weights").get<std::vector<double>>(), j.at("exactness_degree").get<int>(),
                    j.at("monte_carlo").get<bool>(), j.at("seed").get<std::uint64_t>());
}

}  // namespace polyharm
