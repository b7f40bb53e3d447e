#pragma once

#include <complex>
#include <functional>
#include <memory>

#include "ermakov/emp.hpp"
#include "ermakov/emp_solution.hpp"
#include "ermakov/ode.hpp"

namespace ermakov {

enum class Space { Position, Momentum };

/// Physicists' Hermite polynomial H_n(y) by the three-term recurrence.
/// Throws Overflow when the value leaves the double range.
double hermite(int n, double y);

/// Normalised Hermite function h_n(y) = H_n(y)·e^{-y²/2}/√(2^n n! √π),
/// evaluated by a scaled recurrence that never forms H_n, so it stays finite
/// for any n.
double hermite_function(int n, double y);

/// h_n'(y) = √(2n)·h_{n-1}(y) - y·h_n(y).
double hermite_function_derivative(int n, double y);

/// The basis state ψ_n built on an EMP solution. Densities, moments and
/// the Lewis-Riesenfeld expectation assume eigenstate initial data (ω0 = c).
class BasisState {
 public:
  BasisState(int n, EmpSolution sol);

  int n() const { return n_; }
  const EmpSolution& sol() const { return sol_; }

 private:
  int n_;
  EmpSolution sol_;
};

std::complex<double> psi(const BasisState& s, double x, double t);
std::complex<double> psi_dx(const BasisState& s, double x, double t);

/// Position or momentum density of ψ_n; q is x or p accordingly.
double density(const BasisState& s, double q, double t, Space which);
/// d/dq of density().
double density_derivative(const BasisState& s, double q, double t, Space which);

/// Half-width beyond which the density is negligible (Gaussian envelope
/// below 1e-18, widened with the Hermite degree).
double truncation_radius(const BasisState& s, double t, Space which);

struct Moments {
  double x2;
  double p2;
  double energy;
  double uncertainty;  // Δx·Δp
};
Moments moments(const BasisState& s, double t);

/// ⟨ψ_n|Î(t)|ψ_n⟩ with Î = ½(c²x²/b² + (p·b - x·ḃ)²), by quadrature in the
/// coordinate representation.
double lr_expectation(const BasisState& s, double t, double tol = 1e-10);

/// Classical driven path ë = -ω²e + f, together with the action ∫L dt,
/// L = ½ė² - ½ω²e² + f·e, accumulated from t0.
class DrivenTrajectory {
 public:
  DrivenTrajectory(std::shared_ptr<const ode::DenseTrajectory<3>> traj,
                   std::function<double(double)> force);

  double e(double t) const { return (*traj_)(t)[0]; }
  double edot(double t) const { return (*traj_)(t)[1]; }
  double action(double t) const { return (*traj_)(t)[2]; }
  double force(double t) const { return force_(t); }
  Window window() const { return {traj_->t_min(), traj_->t_max()}; }

 private:
  std::shared_ptr<const ode::DenseTrajectory<3>> traj_;
  std::function<double(double)> force_;
};

DrivenTrajectory integrate_drive(const FrequencyProfile& profile,
                                 std::function<double(double)> force, double t0, double e0,
                                 double edot0, Window window, double tol = kDefaultOdeTol);

/// ψ(x - e, t)·exp(i·ė·(x - e) + i·∫L dt): solves the driven Schrödinger
/// equation whenever ψ solves the force-free one.
std::complex<double> driven_psi(const BasisState& s, const DrivenTrajectory& drive, double x,
                                double t);

/// Density of the driven state: the force-free density translated by e(t)
/// in position and by ė(t) in momentum.
double driven_density(const BasisState& s, const DrivenTrajectory& drive, double q, double t,
                      Space which = Space::Position);

}  // namespace ermakov
