#pragma once

#include "ermakov/emp_solution.hpp"
#include "ermakov/profile.hpp"

namespace ermakov {

/// Closed-form EMP solution for a catalogued (profile, initial condition)
/// pair. The catalogue:
///
///   Constant            any finite t0 (ω0 > 0); also t0 = -inf
///   SechBump            t0 = 0 (a > 0 and a = 0), t0 = -inf (a > 0)
///   QuenchedSechBump    finite t0 <= 0
///   LorentzBell         any finite t0
///   QuenchedLorentz     finite t0 <= t_start
///   WindowedLorentz     finite t0 <= t_start
///   AbruptDrop          finite t0 <= 0 (α > 0)
///   AbruptJump          finite t0 <= 0 (ω0 > 0)
///
/// τ is continuous and strictly increasing with τ(t0) = 0 (τ(0) = 0 for
/// t0 = -inf). Throws NoClosedForm for anything else.
EmpSolution closed_form_emp(const FrequencyProfile& profile, const InitialCondition& ic);

/// Fundamental solutions of ẍ = -ω²x for the Lorentz bell,
/// √(t²+ε²)·{cos, sin}(λ·atan(t/ε) - λ·atan(t0/ε)) combined so that
/// x1(t0) = 1, ẋ1(t0) = 0, x2(t0) = 0, ẋ2(t0) = 1.
struct LorentzFundamental {
  double x1, x1dot, x2, x2dot;
};
LorentzFundamental lorentz_fundamental(double a, double eps, double t0, double t);

/// Continuous branch of arg((m11, m12; 0, m22)·(cos φ, sin φ)) for
/// m11, m22 > 0, anchored so that the result is 0 at φ = 0. Lifts
/// compositions like atan(K·tan φ) across the poles of tan.
double unwrapped_phase(double m11, double m12, double m22, double phi);

}  // namespace ermakov
