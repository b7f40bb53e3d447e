#pragma once

#include <complex>
#include <memory>

#include "ermakov/emp_solution.hpp"
#include "ermakov/ode.hpp"
#include "ermakov/profile.hpp"

namespace ermakov {

inline constexpr double kDefaultOdeTol = 1e-10;
inline constexpr double kDefaultQuadTol = 1e-10;

/// Two solutions of ẍ = -ω²x with x1(t0) = 1, ẋ1(t0) = 0, x2(t0) = 0,
/// ẋ2(t0) = 1, held as a dense trajectory over the integration window.
class FundamentalPair {
 public:
  struct Values {
    double x1, x1dot, x2, x2dot;
  };

  FundamentalPair(std::shared_ptr<const ode::DenseTrajectory<4>> traj, FrequencyProfile profile,
                  double t0);

  Values at(double t) const;
  double wronskian() const { return 1.0; }
  /// x1·ẋ2 - x2·ẋ1 evaluated at the nodes nearest to t; constant for an exact pair.
  double wronskian_at(double t) const;
  double t0() const { return t0_; }
  Window window() const { return {traj_->t_min(), traj_->t_max()}; }
  const FrequencyProfile& profile() const { return profile_; }
  std::size_t steps() const { return traj_->size(); }

 private:
  std::shared_ptr<const ode::DenseTrajectory<4>> traj_;
  FrequencyProfile profile_;
  double t0_;
};

/// Integrates the fundamental pair on window (which must contain t0) with
/// an adaptive Dormand-Prince 5(4) pair at local tolerance tol. The known
/// breakpoints of the profile split the integration.
FundamentalPair integrate_fundamental(const FrequencyProfile& profile, double t0, Window window,
                                      double tol = kDefaultOdeTol);

/// b = √(x1² + (c/W)²x2²), ḃ from the same combination; τ by quadrature.
EmpSolution emp_from_fundamental(const FundamentalPair& pair, double c,
                                 double quad_tol = kDefaultQuadTol);

/// Numerical EMP solution under instantaneous-eigenstate conditions. For
/// t0 = -inf the preparation time is replaced by -40 times the profile's
/// time scale; τ is then measured from that time.
EmpSolution numeric_emp(const FrequencyProfile& profile, const InitialCondition& ic, Window window,
                        double tol = kDefaultOdeTol);

/// τ(t) = ∫_{t0}^{t} dt'/b² by adaptive Gauss-Kronrod quadrature.
double tau_of(const EmpSolution& sol, double t, double tol = kDefaultQuadTol);

struct ComplexB {
  std::complex<double> value;
  std::complex<double> derivative;
};

/// B = i/√(2c)·b·e^{icτ} and its time derivative (product rule, τ̇ = 1/b²).
ComplexB complex_B(const EmpSolution& sol, double t);

/// Ḃ·B̄ - conj(Ḃ)·B, identically i for any EMP solution.
std::complex<double> b_wronskian(const ComplexB& bb);

/// b̈ + ω²b - c²/b³ with b̈ from a 5-point central stencil of width
/// h = 1e-4·max(1, |t|).
double residual(const EmpSolution& sol, double t);

}  // namespace ermakov
