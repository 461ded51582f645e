#include "polyharm/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "polyharm/error.hpp"

namespace polyharm {

namespace {

void require_dimension(std::size_t n) {
  if (n < 2) {
    throw DomainError("dimension must be at least 2, got " + std::to_string(n));
  }
}

void require_same(std::size_t a, std::size_t b) {
  if (a != b) {
    throw DimensionMismatch("vector dimensions differ: " + std::to_string(a) + " vs " +
                            std::to_string(b));
  }
}

}  // namespace

ComplexVector::ComplexVector(std::vector<Complex> entries) : entries_(std::move(entries)) {
  require_dimension(entries_.size());
  for (const auto& z : entries_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw DomainError("complex vector entries must be finite");
    }
  }
}

ComplexVector ComplexVector::from_real(std::span<const double> coords) {
  return ComplexVector(std::vector<Complex>(coords.begin(), coords.end()));
}

ComplexVector ComplexVector::zero(std::size_t n) {
  return ComplexVector(std::vector<Complex>(n, Complex{}));
}

ComplexVector ComplexVector::scaled(Complex factor) const {
  std::vector<Complex> out(entries_);
  for (auto& z : out) z *= factor;
  return ComplexVector(std::move(out));
}

ComplexVector ComplexVector::operator-(const ComplexVector& other) const {
  require_same(size(), other.size());
  std::vector<Complex> out(entries_);
  for (std::size_t j = 0; j < out.size(); ++j) out[j] -= other.entries_[j];
  return ComplexVector(std::move(out));
}

RotatedVector::RotatedVector(double angle, RealVector coords) : coords_(std::move(coords)) {
  require_dimension(coords_.size());
  if (!std::isfinite(angle)) throw DomainError("rotation angle must be finite");
  for (double c : coords_) {
    if (!std::isfinite(c)) throw DomainError("coordinates must be finite");
  }
  const double turns = std::floor(angle / kPi);
  double reduced = angle - turns * kPi;
  bool flip = std::fmod(std::abs(turns), 2.0) == 1.0;
  // e^{i pi} a == e^{0} (-a): snap angles that land a rounding error below pi
  if (kPi - reduced < 1e-13) {
    reduced = 0.0;
    flip = !flip;
  }
  if (reduced < 1e-15) reduced = 0.0;
  if (flip) {
    for (double& c : coords_) c = -c;
  }
  angle_ = reduced;
}

RotatedVector RotatedVector::sector_point(int j, int p, RealVector coords) {
  if (p < 1) throw DomainError("sector count p must be positive");
  return RotatedVector(j * kPi / p, std::move(coords));
}

double RotatedVector::radius() const {
  double s = 0.0;
  for (double c : coords_) s += c * c;
  return std::sqrt(s);
}

Complex RotatedVector::phase() const { return std::polar(1.0, angle_); }

ComplexVector RotatedVector::embed() const {
  const Complex e = phase();
  std::vector<Complex> z(coords_.size());
  std::transform(coords_.begin(), coords_.end(), z.begin(), [&](double c) { return e * c; });
  return ComplexVector(std::move(z));
}

std::optional<int> RotatedVector::sector(int p) const {
  if (p < 1) return std::nullopt;
  const double scaled = angle_ * p / kPi;
  const double j = std::round(scaled);
  if (std::abs(scaled - j) > 1e-12 * std::max(1.0, static_cast<double>(p))) return std::nullopt;
  return static_cast<int>(j) % p;
}

Complex bilinear_square(const ComplexVector& z) {
  Complex s{};
  for (const auto& c : z.entries()) s += c * c;
  return s;
}

Complex bilinear_square(const RotatedVector& z) {
  const double r = z.radius();
  return std::polar(r * r, 2.0 * z.angle());
}

Complex complex_abs(const ComplexVector& z) { return std::sqrt(bilinear_square(z)); }

Complex hermitian_dot(const ComplexVector& x, const ComplexVector& w) {
  require_same(x.size(), w.size());
  Complex s{};
  for (std::size_t j = 0; j < x.size(); ++j) s += x[j] * std::conj(w[j]);
  return s;
}

double hermitian_norm(const ComplexVector& z) {
  double s = 0.0;
  for (const auto& c : z.entries()) s += std::norm(c);
  return std::sqrt(s);
}

LieGeometry lie_geometry(const ComplexVector& z) {
  double h2 = 0.0;
  for (const auto& c : z.entries()) h2 += std::norm(c);
  const Complex sq = bilinear_square(z);
  // ||z||^4 - |z^2|^2 = 4 |Re z ^ Im z|^2 (Lagrange), summed without cancellation
  double wedge = 0.0;
  for (std::size_t j = 0; j < z.size(); ++j) {
    for (std::size_t k = j + 1; k < z.size(); ++k) {
      const double d = z[j].real() * z[k].imag() - z[k].real() * z[j].imag();
      wedge += d * d;
    }
  }
  const double inner = std::max(0.0, 4.0 * wedge);
  return LieGeometry{std::sqrt(h2 + std::sqrt(inner)), std::sqrt(h2), sq};
}

double lie_norm(const ComplexVector& z) { return lie_geometry(z).lie_norm; }

bool in_lie_domain(const ComplexVector& z, const ComplexVector& w) {
  require_same(z.size(), w.size());
  return lie_norm(z) * lie_norm(w) < 1.0;
}

}  // namespace polyharm
