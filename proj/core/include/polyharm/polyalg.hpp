#pragma once

// Polynomial algebra for harmonic and polyharmonic spaces: the Laplacian,
// dimension formulas, Almansi decompositions and harmonic bases.

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "polyharm/geometry.hpp"
#include "polyharm/multipoly.hpp"

namespace polyharm {

template <class Coeff>
MultiPoly<Coeff> laplacian(const MultiPoly<Coeff>& q) {
  MultiPoly<Coeff> out(q.nvars());
  for (const auto& [e, c] : q.terms()) {
    for (int j = 0; j < q.nvars(); ++j) {
      if (e[j] < 2) continue;
      Exponent d = e;
      d[j] -= 2;
      out.add_term(std::move(d), c * Coeff(e[j] * (e[j] - 1)));
    }
  }
  return out;
}

template <class Coeff>
MultiPoly<Coeff> iterated_laplacian(MultiPoly<Coeff> q, int p) {
  for (int i = 0; i < p && !q.is_zero(); ++i) q = laplacian(q);
  return q;
}

/// Exact test for exact coefficients. Numeric coefficients count as zero
/// below 1e-9 relative to the largest coefficient of q.
bool is_polyharmonic(const ExactPoly& q, int p);
bool is_polyharmonic(const NumericPoly& q, int p);

/// binomial(n+m-1, n-1); throws std::overflow_error past 64 bits.
std::uint64_t dim_P(int n, int m);
std::uint64_t dim_H(int n, int m);
std::uint64_t dim_Hp(int n, int m, int p);

/// q = sum_k |x|^{radial_step * k} components[k]. For order 1 the radial step
/// is 2 and every component is harmonic; for order p it is 2p and every
/// component is p-harmonic. Trailing zero components are dropped.
struct AlmansiDecomposition {
  int order = 1;
  int degree = 0;
  int nvars = 2;
  std::vector<ExactPoly> components;

  int radial_step() const { return 2 * order; }
  /// Component k, or the zero polynomial when k is past the stored ones.
  ExactPoly component(std::size_t k) const;
  ExactPoly reassemble() const;
};

/// Unique q = sum_k |x|^{2k} u_k with u_k harmonic of degree m - 2k.
/// Throws DomainError for non-homogeneous q.
AlmansiDecomposition harmonic_almansi(const ExactPoly& q);

/// Unique q = sum_k |x|^{2kp} q_k with q_k p-harmonic of degree m - 2kp,
/// grouped from the harmonic decomposition as q_k = sum_{j<p} |x|^{2j} u_{kp+j}.
AlmansiDecomposition polyharmonic_almansi(const ExactPoly& q, int p);

/// For deg q >= 2p: q = h + |x|^{2p} r with h p-harmonic (the algebraic
/// direct sum P_m = H^p_m + |x|^{2p} P_{m-2p}).
std::pair<ExactPoly, ExactPoly> polyharmonic_split(const ExactPoly& q, int p);

/// Spanning set of H_m(C^n): an exact basis of ker(Laplacian) on P_m, one
/// element per free monomial of the reduced row echelon form in grlex order.
std::vector<ExactPoly> harmonic_basis(int n, int m);

/// Basis of H^p_m(C^n): |x|^{2k} h for h in harmonic_basis(n, m-2k), k < p.
std::vector<ExactPoly> polyharmonic_basis(int n, int m, int p);

/// harmonic_basis(n, m) orthonormalized (modified Gram-Schmidt, input order)
/// under the L^2(S) inner product, integrated with an exact-degree sphere
/// rule. Only n in {2, 3}.
std::vector<NumericPoly> orthonormal_harmonic_basis(int n, int m);

Complex evaluate(const NumericPoly& q, const ComplexVector& z);
Complex evaluate(const ExactPoly& q, const ComplexVector& z);
/// Homogeneity route: q_d(e^{i phi} a) = e^{i d phi} q_d(a) per homogeneous part.
Complex evaluate(const NumericPoly& q, const RotatedVector& z);
Complex evaluate(const ExactPoly& q, const RotatedVector& z);
/// q(e^{i angle} a) for a real point a.
Complex evaluate(const NumericPoly& q, double angle, std::span<const double> a);
/// Evaluation at a real point.
Complex evaluate(const NumericPoly& q, std::span<const double> a);

}  // namespace polyharm
