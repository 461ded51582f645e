#pragma once

// Complex bilinear geometry on C^n: rotated real vectors e^{i phi} a, the
// complex extension of the euclidean norm, hermitian products and the Lie
// norm.

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace polyharm {

using Complex = std::complex<double>;
using RealVector = std::vector<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// Vector in C^n, n >= 2, all entries finite.
class ComplexVector {
 public:
  explicit ComplexVector(std::vector<Complex> entries);
  static ComplexVector from_real(std::span<const double> coords);
  static ComplexVector zero(std::size_t n);

  std::size_t size() const noexcept { return entries_.size(); }
  const Complex& operator[](std::size_t j) const { return entries_[j]; }
  std::span<const Complex> entries() const noexcept { return entries_; }

  ComplexVector scaled(Complex factor) const;
  ComplexVector operator-(const ComplexVector& other) const;

  friend bool operator==(const ComplexVector&, const ComplexVector&) = default;

 private:
  std::vector<Complex> entries_;
};

/// A real vector rotated into C^n, z = e^{i angle} coords. The angle is kept
/// in [0, pi); construction reduces it mod pi, flipping the sign of the
/// coordinates for odd multiples. Keeping the real part separate lets
/// homogeneous quantities be evaluated as phase * real value without any
/// complex square roots.
class RotatedVector {
 public:
  RotatedVector(double angle, RealVector coords);
  /// Point of the sector e^{j pi i / p} R^n.
  static RotatedVector sector_point(int j, int p, RealVector coords);
  static RotatedVector real(RealVector coords) { return RotatedVector(0.0, std::move(coords)); }

  double angle() const noexcept { return angle_; }
  std::span<const double> coords() const noexcept { return coords_; }
  std::size_t size() const noexcept { return coords_.size(); }

  /// Euclidean norm of the real part; equals the hermitian norm ||z||.
  double radius() const;
  ComplexVector embed() const;
  Complex phase() const;

  /// Sector index j with angle == j pi / p (within 1e-12), if any.
  std::optional<int> sector(int p) const;
  RotatedVector rotated(double delta) const { return RotatedVector(angle_ + delta, coords_); }

 private:
  double angle_;
  RealVector coords_;
};

Complex bilinear_square(const ComplexVector& z);
/// e^{2 i angle} |a|^2, computed without forming the complex embedding.
Complex bilinear_square(const RotatedVector& z);

/// Principal square root of z^2 (branch cut on the non-positive real axis).
Complex complex_abs(const ComplexVector& z);

/// sum_j x_j conj(w_j)
Complex hermitian_dot(const ComplexVector& x, const ComplexVector& w);
double hermitian_norm(const ComplexVector& z);

struct LieGeometry {
  double lie_norm;
  double hermitian_norm;
  Complex bilinear_square;
};

LieGeometry lie_geometry(const ComplexVector& z);
double lie_norm(const ComplexVector& z);
/// (z, w) in LD, i.e. L(z) L(w) < 1.
bool in_lie_domain(const ComplexVector& z, const ComplexVector& w);

}  // namespace polyharm
