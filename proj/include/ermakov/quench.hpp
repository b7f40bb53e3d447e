#pragma once

#include <vector>

#include "ermakov/profile.hpp"

namespace ermakov {

/// Ending protocol: the Lorentz bell with amplitude a = αε², held at its
/// initial value for t <= 0 and released for t > 0. Everything is expressed
/// in the scaled time s = t/ε and the rate parameter β = αε.
struct QuenchSetup {
  double alpha;
  double eps;

  static QuenchSetup from_beta(double beta, double eps = 1.0);

  double beta() const { return alpha * eps; }
  double lambda() const;  // √(1 + β²)
  double s_of(double t) const { return t / eps; }
  double t_of(double s) const { return s * eps; }
  FrequencyProfile profile() const;
  void validate() const;
};

/// b²(s) for s >= 0.
double b2_scaled(const QuenchSetup& q, double s);
/// Adiabatic reference b²_ad(s) = ω0/ω = 1 + s².
double b2_adiabatic(double s);
/// b²_ad - b² = (s² + 1)/(1 + β²)·sin²(λ·atan s).
double delta_b2(const QuenchSetup& q, double s);

struct KzTime {
  double t_c;      // αε²/2 (Landau estimate)
  double s_c;      // β (the scaled convention)
  double t_exact;  // root of |ω̇|/ω² = 1 by bisection
  double s_exact;
};
KzTime kz_time(const QuenchSetup& q);

/// b²(s_c) = β² + cos²(λ·atan β).
double b2_at_critical(const QuenchSetup& q);

/// Late-time, fast-quench expansion s²β² - sπβ²/2 + β² + 1. Meant for
/// β << 1 and s >> 1; no accuracy contract elsewhere.
double late_time(const QuenchSetup& q, double s);
/// The same expansion before truncating in β (exact λ dependence).
double late_time_lambda(const QuenchSetup& q, double s);

/// ⟨Ô⟩ for Ô = ∫x²Ψ†Ψ, up to a proportionality constant that is not fixed:
/// returns b²(s).
double fermion_observable(const QuenchSetup& q, double s);
/// Subregion entanglement entropy proxy b⁻¹(s), up to a constant factor.
double subregion_entropy_proxy(const QuenchSetup& q, double s);

/// Zeros s_k = tan(kπ/λ) of Δb² on (0, ∞).
std::vector<double> predicted_zeros(const QuenchSetup& q);
/// ⌈λ/2⌉ - 1.
int predicted_zero_count(const QuenchSetup& q);
/// Zeros of Δb² located numerically: local minima of Δb² over u = atan s on
/// a uniform grid, refined by golden-section search, kept when Δb² < tol.
std::vector<double> locate_zeros(const QuenchSetup& q, int samples = 200000, double tol = 1e-20);

struct QuenchReport {
  std::vector<double> s;
  std::vector<double> b2, b2_ad, delta;
  double s_c;
  // late_time = c2·s² + c1·s + c0
  double c2, c1, c0;
};
/// Series on the given grid (s >= 0); Δb² is computed from the sine-squared
/// form, not as the difference b²_ad - b².
QuenchReport quench_report(const QuenchSetup& q, const std::vector<double>& s);

}  // namespace ermakov
