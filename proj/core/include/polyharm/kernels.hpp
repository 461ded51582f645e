#pragma once

// Zonal harmonics, zonal polyharmonics, the Poisson kernel of the union of
// rotated balls and the Cauchy-Hua kernel of the Lie ball.
//
// Everything is written in the two invariants
//     s = x . conj(zeta)        W = x^2 conj(zeta)^2
// so that |x|^{2k} |conj zeta|^{2k} = W^k and the homogenized Gegenbauer
// polynomial G_m(s, W) = (|x||zeta|)^m C_m^{n/2}(t) never needs a square root.
// A principal square root appears only in the n/2 power of odd dimensions and
// in the distance |e^{-j pi i/p} x - zeta| of the boundary form.

#include <span>
#include <utility>
#include <vector>

#include "polyharm/geometry.hpp"

namespace polyharm {

struct KernelParams {
  int n = 2;  // dimension >= 2
  int p = 1;  // polyharmonic order >= 1
  int m = 0;  // degree; negative degrees give the zero kernel
};

enum class ZonalRoute {
  kSumOfZonals,     // sum_{k<p} W^k Z_{m-2k}
  kGegenbauerDiff,  // G_m - W^p G_{m-2p}
  kExplicitSum,     // coefficients of s^{m-2k} W^k in closed form
};

inline constexpr ZonalRoute kAllRoutes[] = {ZonalRoute::kSumOfZonals, ZonalRoute::kGegenbauerDiff,
                                            ZonalRoute::kExplicitSum};
const char* route_name(ZonalRoute route);

struct KernelValue {
  Complex value;
  int terms_used = 0;
  double tail_bound = 0.0;
};

/// Singularity threshold on |denominator|.
inline constexpr double kSingularThreshold = 1e-14;

/// Z_m(x, zeta); zeta must have a unit real part.
Complex zonal_harmonic(int n, int m, const RotatedVector& x, const RotatedVector& zeta);
Complex zonal_harmonic(int n, int m, const ComplexVector& x, const RotatedVector& zeta);

/// Z^p_m(x, zeta) for zeta on the rotated sphere S_p (unit real part, angle
/// a multiple of pi/p). Throws DomainError otherwise.
Complex zonal_polyharmonic(const KernelParams& params, const RotatedVector& x, const RotatedVector& zeta,
                           ZonalRoute route);
Complex zonal_polyharmonic(const KernelParams& params, const ComplexVector& x, const RotatedVector& zeta,
                           ZonalRoute route);
/// The polynomial extension of Z^p_m to C^n x C^n (holomorphic in x,
/// antiholomorphic in w), with no restriction on w.
Complex zonal_polyharmonic_ext(const KernelParams& params, const ComplexVector& x, const ComplexVector& w,
                               ZonalRoute route);

/// Closed form (1 - (x^2)^p) / (x^2 conj(zeta)^2 - 2 x.conj(zeta) + 1)^{n/2}
/// for x in the rotated ball and zeta on the rotated sphere. Odd n uses the
/// principal power. Throws SingularEvaluation when the denominator vanishes.
Complex poisson_kernel(int n, int p, const RotatedVector& x, const RotatedVector& zeta);

/// sum_{m <= M} Z^p_m(x, zeta), with M the smallest degree whose calibrated
/// tail bound C p sum_{m>M} m^{n-2} r^m is below tol (r = |x|). Throws
/// DomainError for r >= 1 - 1e-6 or when M would exceed 10000.
KernelValue poisson_kernel_series(int n, int p, const RotatedVector& x, const RotatedVector& zeta, double tol);

/// (1 - (x^2)^p) sum_{m <= M} G_m(s, W): the Gegenbauer generating series,
/// truncated with the bound |G_m| <= C_m^{n/2}(1) r^m.
KernelValue poisson_kernel_gegenbauer(int n, int p, const RotatedVector& x, const RotatedVector& zeta,
                                      double tol);

/// (1 - (x^2)^p) / |e^{-j pi i/p} x - zeta|^n for a real unit zeta: the
/// conjugate of the kernel with the boundary point e^{j pi i/p} zeta first.
Complex poisson_boundary_form(int n, int p, int j, const RotatedVector& x, std::span<const double> zeta);
/// Same expression for an arbitrary complex point; no domain check on z.
Complex poisson_boundary_form_ext(int n, int p, int j, const ComplexVector& z, std::span<const double> zeta);

/// (1 - (z^2 conj(w^2))^p) (conj(w^2) z^2 - 2 z.conj(w) + 1)^{-n/2}.
Complex poisson_kernel_extended(int n, int p, const ComplexVector& z, const ComplexVector& w);

/// (conj(w^2) z^2 - 2 z.conj(w) + 1)^{-n/2}, principal branch for odd n.
/// Evaluates outside the Lie domain too; callers that care check
/// in_lie_domain first. Throws SingularEvaluation on a vanishing denominator.
Complex cauchy_hua(int n, const ComplexVector& z, const ComplexVector& w);
/// H(z, e^{i angle} zeta) for a real zeta, without forming the rotated vector.
Complex cauchy_hua(int n, const ComplexVector& z, double angle, std::span<const double> zeta);

struct HuaGap {
  double gap;     // max |P_p - H| over the sample
  double bound;   // alpha^{2p} max |H|
  double alpha;   // max ||z|| ||w||
  double max_h;
  bool holds() const { return gap <= bound * (1.0 + 1e-9); }
};

/// Throws DomainError if a pair lies outside the Lie domain.
HuaGap hua_convergence_gap(int n, std::span<const std::pair<ComplexVector, ComplexVector>> sample, int p);

/// Empirical tail constant for (n, p): twice the largest
/// |Z^p_m| / (p m^{n-2} r^m) seen on 200 seeded probes with m <= 20. Cached.
double tail_constant(int n, int p);
/// Smallest M with C p sum_{m>M} m^{n-2} r^m < tol, and that bound.
std::pair<int, double> series_degree(int n, int p, double r, double tol);

}  // namespace polyharm
