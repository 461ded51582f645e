#include <doctest.h>

#include <nlohmann/json.hpp>

#include "oracles.hpp"
#include "polyharm/error.hpp"
#include "polyharm/polyalg.hpp"
#include "polyharm/polytext.hpp"
#include "polyharm/quadrature.hpp"

using namespace polyharm;

namespace {

double monomial(std::span<const double> x, const std::vector<int>& alpha) {
  double v = 1;
  for (std::size_t j = 0; j < alpha.size(); ++j) v *= std::pow(x[j], alpha[j]);
  return v;
}

}  // namespace

TEST_CASE("circle rule layout") {
  const SphereRule rule = sphere_rule(2, 8);
  CHECK(rule.size() == 8);
  CHECK(rule.exactness_degree() == 7);
  CHECK_FALSE(rule.monte_carlo());
  for (std::size_t i = 0; i < rule.size(); ++i) {
    CHECK(rule.weight(i) == doctest::Approx(0.125).epsilon(1e-15));
    const auto x = rule.node(i);
    CHECK(x[0] * x[0] + x[1] * x[1] == doctest::Approx(1.0).epsilon(1e-15));
  }
  CHECK_THROWS_AS(sphere_rule(2, 3), DomainError);
  CHECK_THROWS_AS(sphere_rule(1, 8), DomainError);
}

TEST_CASE("moments are exact through the stated degree") {
  for (int n : {2, 3}) {
    for (int degree : {4, 9, 16}) {
      const SphereRule rule = sphere_rule_for_degree(n, degree);
      CHECK(rule.exactness_degree() >= degree);
      for (int m = 0; m <= degree; ++m) {
        for (const auto& alpha : oracle::enumerate_monomials(n, m)) {
          const Complex got = sphere_integral([&](std::span<const double> x) { return monomial(x, alpha); }, rule);
          CAPTURE(n);
          CAPTURE(m);
          CHECK(std::abs(got - oracle::sphere_moment(alpha)) <= 1e-13);
        }
      }
    }
  }
}

TEST_CASE("classical moments") {
  const SphereRule ball = sphere_rule_for_degree(3, 2);
  CHECK(std::abs(sphere_integral([](std::span<const double> x) { return x[0] * x[0]; }, ball) - 1.0 / 3) < 1e-15);
  const SphereRule circle = sphere_rule_for_degree(2, 4);
  CHECK(std::abs(sphere_integral([](std::span<const double> x) { return std::pow(x[0], 4); }, circle) - 3.0 / 8) <
        1e-15);
}

TEST_CASE("mean value property of harmonics") {
  for (int n : {2, 3}) {
    const SphereRule rule = sphere_rule_for_degree(n, 8);
    for (int m = 1; m <= 6; ++m) {
      for (const auto& h : harmonic_basis(n, m)) {
        const NumericPoly q = to_numeric(h);
        CHECK(std::abs(sphere_integral([&](std::span<const double> x) { return evaluate(q, x); }, rule)) <= 1e-13);
      }
    }
  }
}

TEST_CASE("rotated inner product") {
  const SphereRule rule = sphere_rule_for_degree(2, 10);
  for (int p = 1; p <= 3; ++p) {
    const BoundaryData one = BoundaryData::constant(2, p, 1.0);
    CHECK(std::abs(rotated_inner_product(one, one, rule) - 1.0) < 1e-15);
  }
  // two polynomials of equal degree: every sector contributes the same S product
  const NumericPoly f = to_numeric(parse_exact_poly("x1^3 - 2*x1*x2^2", 2));
  const NumericPoly g = to_numeric(parse_exact_poly("x1^2*x2 + x2^3", 2));
  const Complex plain =
      sphere_integral([&](std::span<const double> x) { return evaluate(f, x) * std::conj(evaluate(g, x)); }, rule);
  for (int p = 1; p <= 4; ++p) {
    const Complex rotated =
        rotated_inner_product(BoundaryData::from_polynomial(f, p), BoundaryData::from_polynomial(g, p), rule);
    CHECK(std::abs(rotated - plain) <= 1e-14);
  }
  // different degrees pick up the averaged phase: degrees 2 and 0 are orthogonal for p >= 2
  const NumericPoly square = to_numeric(parse_exact_poly("x1^2", 2));
  const Complex cross = rotated_inner_product(BoundaryData::from_polynomial(square, 2),
                                              BoundaryData::constant(2, 2, 1.0), rule);
  CHECK(std::abs(cross) <= 1e-15);
}

TEST_CASE("Lie sphere integrals") {
  const LieSphereRule rule = lie_sphere_rule(sphere_rule_for_degree(2, 10), 8);
  CHECK(std::abs(lie_sphere_integral([](double, std::span<const double>) { return 1.0; }, rule) - 1.0) < 1e-15);
  const Complex first = lie_sphere_integral(
      [](double phi, std::span<const double> zeta) { return std::polar(1.0, phi) * zeta[0]; }, rule);
  CHECK(std::abs(first) <= 1e-15);
  CHECK(rule.angle(4) == doctest::Approx(kPi / 2));
}

TEST_CASE("Gauss-Legendre") {
  std::vector<double> nodes, weights;
  gauss_legendre(6, nodes, weights);
  REQUIRE(nodes.size() == 6);
  double total = 0, fourth = 0, tenth = 0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    total += weights[i];
    fourth += weights[i] * std::pow(nodes[i], 4);
    tenth += weights[i] * std::pow(nodes[i], 10);
  }
  CHECK(total == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(fourth == doctest::Approx(0.4).epsilon(1e-14));
  CHECK(tenth == doctest::Approx(2.0 / 11).epsilon(1e-14));
}

TEST_CASE("rule JSON round trip") {
  for (int n : {2, 3, 4}) {
    const SphereRule rule = sphere_rule(n, 12, 77);
    const SphereRule back = rule_from_json(rule_to_json(rule));
    CHECK(back.dimension() == rule.dimension());
    CHECK(back.resolution() == rule.resolution());
    CHECK(back.seed() == rule.seed());
    CHECK(back.monte_carlo() == rule.monte_carlo());
    CHECK(back.exactness_degree() == rule.exactness_degree());
    REQUIRE(back.size() == rule.size());
    for (std::size_t i = 0; i < rule.size(); ++i) {
      CHECK(back.weight(i) == rule.weight(i));
      for (int j = 0; j < n; ++j) CHECK(back.node(i)[j] == rule.node(i)[j]);
    }
  }
}

TEST_CASE("Monte Carlo rules") {
  const SphereRule rule = sphere_rule_for_degree(4, 6, 9);
  CHECK(rule.monte_carlo());
  CHECK(rule.exactness_degree() == 0);
  double total = 0;
  for (double w : rule.weights()) total += w;
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  for (std::size_t i = 0; i < rule.size(); i += 97) {
    double r2 = 0;
    for (double c : rule.node(i)) r2 += c * c;
    CHECK(r2 == doctest::Approx(1.0).epsilon(1e-14));
  }
  // same seed, same nodes
  const SphereRule again = sphere_rule_for_degree(4, 6, 9);
  CHECK(again.node(5)[2] == rule.node(5)[2]);
  // second moment 1/4 within a few standard errors
  const Complex second = sphere_integral([](std::span<const double> x) { return x[0] * x[0]; }, rule);
  CHECK(std::abs(second - 0.25) <= 5 * std::sqrt(0.0625 / double(rule.size())));
}

TEST_CASE("integrand failures carry the node") {
  const SphereRule rule = sphere_rule(2, 8);
  auto thrower = [](std::span<const double> x) -> double {
    if (x[1] < -0.5) throw std::runtime_error("boom");
    return 1.0;
  };
  CHECK_THROWS_AS(sphere_integral(thrower, rule), EvaluationError);
}
