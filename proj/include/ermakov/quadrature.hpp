#pragma once

#include <functional>
#include <span>

namespace ermakov::quad {

struct Result {
  double value = 0.0;
  double error = 0.0;
  int evaluations = 0;
  int panels = 0;
};

struct Options {
  double abs_tol = 1e-10;
  int max_panels = 20000;
};

/// Globally adaptive Gauss-Kronrod (G7/K15) quadrature of f over [lo, hi].
///
/// The panel with the largest error estimate is bisected until the summed
/// estimate drops below abs_tol. Breakpoints strictly inside (lo, hi) become
/// initial panel boundaries, so piecewise integrands are never straddled.
/// lo > hi is allowed and flips the sign. Throws QuadratureFailure when
/// max_panels is exhausted or the integrand returns a non-finite value.
Result integrate(const std::function<double(double)>& f, double lo, double hi,
                 const Options& opts = {}, std::span<const double> breakpoints = {});

inline double integral(const std::function<double(double)>& f, double lo, double hi,
                       double abs_tol = 1e-10, std::span<const double> breakpoints = {}) {
  return integrate(f, lo, hi, Options{abs_tol}, breakpoints).value;
}

/// Nested 2D integral over the rectangle [xlo,xhi] x [ylo,yhi]. The inner
/// tolerance is tightened relative to the outer one by the outer width.
double integral_2d(const std::function<double(double, double)>& f, double xlo, double xhi,
                   double ylo, double yhi, double abs_tol = 1e-9);

}  // namespace ermakov::quad
