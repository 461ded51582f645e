#include "polyharm/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "polyharm/error.hpp"
#include "polyharm/polyalg.hpp"

namespace polyharm {

namespace {

constexpr int kSpotChecks = 10;
constexpr double kSpotTolerance = 1e-12;

double sector_angle(int j, int p) { return kPi * j / p; }

}  // namespace

BoundaryData::BoundaryData(int n, int p, std::vector<SectorFunction> sectors,
                           std::optional<NumericPoly> polynomial)
    : n_(n), p_(p), sectors_(std::move(sectors)), polynomial_(std::move(polynomial)) {
  if (n < 2) throw DomainError("dimension n must be at least 2");
  if (p < 1) throw DomainError("order p must be positive");
  if (static_cast<int>(sectors_.size()) != p) {
    throw DomainError("boundary data needs " + std::to_string(p) + " sectors, got " +
                      std::to_string(sectors_.size()));
  }
  for (const auto& f : sectors_) {
    if (!f) throw DomainError("empty sector evaluator");
  }
  if (!polynomial_) return;
  if (polynomial_->nvars() != n) throw DimensionMismatch("boundary polynomial has the wrong variable count");

  std::mt19937_64 rng(0x5eedULL + static_cast<unsigned>(n));
  std::normal_distribution<double> normal;
  std::vector<double> zeta(n);
  for (int check = 0; check < kSpotChecks; ++check) {
    double norm2 = 0.0;
    for (auto& c : zeta) {
      c = normal(rng);
      norm2 += c * c;
    }
    for (auto& c : zeta) c /= std::sqrt(norm2);
    const int j = check % p;
    const Complex expected = evaluate(*polynomial_, sector_angle(j, p), zeta);
    const Complex got = sectors_[j](zeta);
    if (std::abs(got - expected) > kSpotTolerance * std::max(1.0, std::abs(expected))) {
      throw DomainError("sector evaluator " + std::to_string(j) +
                        " disagrees with its polynomial tag");
    }
  }
}

BoundaryData BoundaryData::from_polynomial(const NumericPoly& q, int p) {
  if (p < 1) throw DomainError("order p must be positive");
  std::vector<SectorFunction> sectors;
  for (int j = 0; j < p; ++j) {
    const double angle = sector_angle(j, p);
    sectors.emplace_back([q, angle](std::span<const double> zeta) { return evaluate(q, angle, zeta); });
  }
  BoundaryData out(q.nvars(), p, std::move(sectors));
  out.polynomial_ = q;
  return out;
}

BoundaryData BoundaryData::from_polynomial(const ExactPoly& q, int p) {
  return from_polynomial(to_numeric(q), p);
}

BoundaryData BoundaryData::from_function(int n, int p,
                                         std::function<Complex(const RotatedVector&)> f) {
  if (p < 1) throw DomainError("order p must be positive");
  std::vector<SectorFunction> sectors;
  for (int j = 0; j < p; ++j) {
    const double angle = sector_angle(j, p);
    sectors.emplace_back([f, angle](std::span<const double> zeta) {
      return f(RotatedVector(angle, RealVector(zeta.begin(), zeta.end())));
    });
  }
  return BoundaryData(n, p, std::move(sectors));
}

BoundaryData BoundaryData::constant(int n, int p, Complex value) {
  return from_polynomial(NumericPoly::constant(n, value), p);
}

}  // namespace polyharm
