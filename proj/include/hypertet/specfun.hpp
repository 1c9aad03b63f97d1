#pragma once

// Special functions used by the volume formulas: the complex dilogarithm,
// the Lobachevsky function, a clamped arccosh and 1-D adaptive quadrature.

#include <complex>
#include <functional>
#include <numbers>

namespace hypertet {

using Complex = std::complex<double>;

/// Slack applied to cosh/cos arguments that should lie in [1, inf) or
/// [-1, 1] but carry last-digit noise.
inline constexpr double kClampEpsilon = 1e-12;

/// Li2(1) = pi^2 / 6.
inline constexpr double kZeta2 = std::numbers::pi * std::numbers::pi / 6.0;

/// Spence's dilogarithm Li2(z) on the principal branch (cut along [1, inf);
/// values on the cut are limits from the upper half plane).
/// Throws Error(invalid_argument) for non-finite input.
Complex dilog(Complex z);

/// Lobachevsky function L(t) = -int_0^t log|2 sin u| du. Odd, pi-periodic.
double lobachevsky(double theta);

/// arccosh(max(x, 1)); throws DomainError when x < 1 - eps.
double acosh_checked(double x, double eps = kClampEpsilon);

/// Adaptive Gauss-Kronrod (7/15) quadrature of f over [a, b]. The panel with
/// the largest error estimate is bisected until the summed estimate drops
/// below `tol`. Throws AccuracyError (carrying the best estimate) when
/// `max_subdivisions` bisections do not reach `tol`.
double integrate(const std::function<double(double)>& f, double a, double b, double tol,
                 int max_subdivisions = 60);

}  // namespace hypertet
