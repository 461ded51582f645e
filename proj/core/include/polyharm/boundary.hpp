#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "polyharm/geometry.hpp"
#include "polyharm/multipoly.hpp"

namespace polyharm {

/// A function on the union of rotated spheres, given sector by sector:
/// sector j maps zeta in S to f(e^{j pi i / p} zeta). Polynomial data also
/// carries its polynomial, which drives resolution choice and oracles.
class BoundaryData {
 public:
  using SectorFunction = std::function<Complex(std::span<const double>)>;

  /// When a polynomial tag is given, every sector is spot-checked against it
  /// at 10 nodes (relative 1e-12); a mismatch throws DomainError.
  BoundaryData(int n, int p, std::vector<SectorFunction> sectors,
               std::optional<NumericPoly> polynomial = std::nullopt);

  static BoundaryData from_polynomial(const NumericPoly& q, int p);
  static BoundaryData from_polynomial(const ExactPoly& q, int p);
  /// f evaluated at the rotated point e^{j pi i / p} zeta.
  static BoundaryData from_function(int n, int p, std::function<Complex(const RotatedVector&)> f);
  static BoundaryData constant(int n, int p, Complex value);

  int dimension() const noexcept { return n_; }
  int order() const noexcept { return p_; }
  Complex operator()(int sector, std::span<const double> zeta) const { return sectors_.at(sector)(zeta); }
  const std::optional<NumericPoly>& polynomial() const noexcept { return polynomial_; }

 private:
  int n_;
  int p_;
  std::vector<SectorFunction> sectors_;
  std::optional<NumericPoly> polynomial_;
};

}  // namespace polyharm
