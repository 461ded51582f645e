#pragma once

// Gegenbauer (ultraspherical) polynomials C_m^lambda.
//
// Besides the usual C_m^lambda(t), the kernels need the homogenized form
//     G_m(s, W) = w^m C_m^lambda(s / w),   W = w^2,
// which is a polynomial in s and W. Evaluating G directly avoids forming
// t = s / w, which needs a square root and is singular at w = 0.

#include <complex>
#include <vector>

namespace polyharm {

using Complex = std::complex<double>;

/// Three-term recurrence. Negative degrees return 0.
Complex gegenbauer(double lambda, int m, Complex t);
double gegenbauer(double lambda, int m, double t);

/// Explicit alternating sum over k <= m/2 with the Gamma ratio taken as a
/// running product. Cross-check for the recurrence; cancels badly for large m.
Complex gegenbauer_explicit(double lambda, int m, Complex t);
/// Explicit sum for real t in exact rational arithmetic (lambda and t are
/// dyadic rationals), rounded once at the end.
double gegenbauer_explicit(double lambda, int m, double t);

/// G_m(s, W) via the homogenized recurrence
///   m G_m = 2 s (m + lambda - 1) G_{m-1} - (m + 2 lambda - 2) W G_{m-2}.
Complex gegenbauer_homogeneous(double lambda, int m, Complex s, Complex W);
double gegenbauer_homogeneous(double lambda, int m, double s, double W);
/// G_0 .. G_max_m in one pass.
std::vector<Complex> gegenbauer_homogeneous_table(double lambda, int max_m, Complex s, Complex W);
/// G_m(s, W) from the explicit sum.
Complex gegenbauer_homogeneous_explicit(double lambda, int m, Complex s, Complex W);

/// sum_{m=0}^{M} C_m^lambda(t) w^m for t in [-1, 1], |w| < 1.
Complex generating_partial_sum(double lambda, double t, Complex w, int max_degree);
/// (1 - 2 t w + w^2)^{-lambda}, principal branch.
Complex generating_function(double lambda, double t, Complex w);

}  // namespace polyharm
