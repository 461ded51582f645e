#include <doctest.h>

#include <random>

#include "polyharm/error.hpp"
#include "polyharm/geometry.hpp"

using namespace polyharm;

namespace {

ComplexVector rotated(double phi, std::vector<double> x) { return RotatedVector(phi, std::move(x)).embed(); }

bool close(Complex a, Complex b, double tol = 1e-13) { return std::abs(a - b) <= tol; }

}  // namespace

TEST_CASE("bilinear square") {
  CHECK(close(bilinear_square(ComplexVector::from_real(std::vector<double>{1, 0})), 1.0));
  CHECK(close(bilinear_square(ComplexVector({Complex(0, 1), 0})), -1.0));
  CHECK(close(bilinear_square(rotated(kPi / 3, {3, 4})), std::polar(25.0, 2 * kPi / 3), 1e-12));
  CHECK(close(bilinear_square(RotatedVector(kPi / 3, {3, 4})), std::polar(25.0, 2 * kPi / 3), 1e-12));
}

TEST_CASE("complex abs uses the principal root") {
  CHECK(close(complex_abs(ComplexVector::from_real(std::vector<double>{3, 4})), 5.0));
  CHECK(close(complex_abs(rotated(kPi / 4, {1, 0})), std::polar(1.0, kPi / 4)));
  // past pi/2 the root leaves the rotation angle
  CHECK(close(complex_abs(rotated(3 * kPi / 4, {1, 0})), std::polar(1.0, -kPi / 4)));
}

TEST_CASE("hermitian dot") {
  CHECK(close(hermitian_dot(rotated(0, {1, 0}), rotated(0, {1, 0})), 1.0));
  CHECK(close(hermitian_dot(rotated(kPi / 2, {1, 0}), rotated(0, {1, 0})), Complex(0, 1)));
  CHECK(close(hermitian_dot(rotated(kPi / 3, {1, 2}), rotated(kPi / 6, {2, 1})), std::polar(4.0, kPi / 6), 1e-12));
}

TEST_CASE("lie norm") {
  CHECK(lie_norm(ComplexVector::from_real(std::vector<double>{3, 4})) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(lie_norm(ComplexVector({1.0, Complex(0, 1)})) == doctest::Approx(2.0).epsilon(1e-15));
  for (double phi : {0.1, 1.0, 2.0, 3.0}) {
    CHECK(lie_norm(rotated(phi, {0.6, 0.8})) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("Lie domain membership") {
  const ComplexVector w = ComplexVector::from_real(std::vector<double>{0.6, 0.0});
  CHECK(in_lie_domain(ComplexVector::zero(2), ComplexVector::from_real(std::vector<double>{50.0, 1.0})));
  CHECK(in_lie_domain(ComplexVector::from_real(std::vector<double>{0.9, 0}), ComplexVector::from_real(std::vector<double>{0.9, 0})));
  CHECK_FALSE(in_lie_domain(ComplexVector({1.0, Complex(0, 1)}), w));
}

TEST_CASE("sector points") {
  const RotatedVector x = RotatedVector::sector_point(1, 3, {0.5, 0.5});
  CHECK(x.angle() == doctest::Approx(kPi / 3));
  REQUIRE(x.sector(3).has_value());
  CHECK(*x.sector(3) == 1);
  CHECK_FALSE(RotatedVector(0.3, {0.5, 0.5}).sector(3).has_value());
  // e^{i pi} a is stored as -a in sector 0
  const RotatedVector wrapped = RotatedVector::sector_point(3, 3, {1.0, 0.0});
  CHECK(wrapped.angle() == 0.0);
  CHECK(wrapped.coords()[0] == -1.0);
  CHECK_THROWS_AS(RotatedVector::sector_point(0, 0, {1.0, 0.0}), DomainError);
}

TEST_CASE("geometry invariants on random samples") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> coord(-10, 10), angle(0, 2 * kPi), unit(0, 1);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + trial % 3;
    std::vector<Complex> entries(n);
    std::vector<double> real(n);
    for (int j = 0; j < n; ++j) {
      entries[j] = {coord(rng), coord(rng)};
      real[j] = coord(rng);
    }
    const ComplexVector z(entries);
    const Complex root = complex_abs(z);
    const Complex square = bilinear_square(z);
    CHECK(std::abs(root * root - square) <= 1e-12 * std::max(1.0, std::abs(square)));

    const Complex self = hermitian_dot(z, z);
    CHECK(std::abs(self.imag()) <= 1e-12 * self.real());
    CHECK(self.real() == doctest::Approx(hermitian_norm(z) * hermitian_norm(z)).epsilon(1e-12));
    CHECK(hermitian_norm(z) <= lie_norm(z) * (1 + 1e-12));

    const ComplexVector x = ComplexVector::from_real(real);
    double euclid = 0;
    for (double c : real) euclid += c * c;
    euclid = std::sqrt(euclid);
    CHECK(std::abs(complex_abs(x)) == doctest::Approx(euclid).epsilon(1e-12));
    CHECK(lie_norm(x) == doctest::Approx(euclid).epsilon(1e-12));
    CHECK(lie_norm(rotated(angle(rng), real)) == doctest::Approx(euclid).epsilon(1e-12));
  }
}

TEST_CASE("rotated sphere lies on the Lie sphere, rotated ball inside the Lie ball") {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> unit(0, 1);
  for (int p = 1; p <= 4; ++p) {
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<double> v(3);
      double norm = 0;
      for (auto& c : v) {
        c = normal(rng);
        norm += c * c;
      }
      for (auto& c : v) c /= std::sqrt(norm);
      const int j = trial % p;
      CHECK(std::abs(lie_norm(RotatedVector::sector_point(j, p, v).embed()) - 1.0) <= 1e-12);
      const double r = 0.999 * unit(rng);
      for (auto& c : v) c *= r;
      CHECK(lie_norm(RotatedVector::sector_point(j, p, v).embed()) < 1.0);
    }
  }
}
