#pragma once

#include <array>
#include <complex>
#include <memory>
#include <span>
#include <vector>

#include "ermakov/emp.hpp"
#include "ermakov/emp_solution.hpp"
#include "ermakov/ode.hpp"

namespace ermakov {

using Vec2 = std::array<double, 2>;

/// Charged particle (e = m = 1) in the uniform field B = 2ω(t)e3 with
/// vector potential A = ω(t)·(-x², x¹). The EMP solution carries ω, t0
/// and c = ω(t0).
class MagneticScenario {
 public:
  explicit MagneticScenario(EmpSolution sol, double p3 = 0.0);

  const EmpSolution& sol() const { return sol_; }
  const FrequencyProfile& profile() const { return sol_.profile(); }
  double t0() const { return sol_.t0(); }
  double omega0() const { return sol_.omega0(); }
  double p3() const { return p3_; }

  /// Rotation angle Ω(t) = ∫_{t0}^t ω, by quadrature.
  double rotation_angle(double t) const;
  Vec2 vector_potential(const Vec2& x, double t) const;

 private:
  EmpSolution sol_;
  double p3_;
};

/// Rotates by R(Ω) = ((cos Ω, sin Ω), (-sin Ω, cos Ω)).
Vec2 rotate(double angle, const Vec2& v);

struct BasisInfo {
  double dS2x;
  double dS2p;
  double F2x;
  double F2p;
  double CFS2x;  // F2x·e^{S2x}
  double CFS2p;  // F2p·e^{S2p}
};

/// Entropy increases, Fisher informations and Fisher-Shannon complexities
/// of the basis state φ_mn. The complexities need absolute entropies, which
/// come from the one-dimensional quadrature oracle (the rotation has unit
/// Jacobian, so the 2D entropy is the sum of the factor entropies).
BasisInfo basis_info(int m, int n, const MagneticScenario& sc, double t);

/// φ_mn(x, t) = e^{-itp3²/2}·ψ_m(u)·ψ_n(v), (u, v) = R(-Ω)x.
std::complex<double> basis_state(int m, int n, const MagneticScenario& sc, const Vec2& x, double t);
double basis_density(int m, int n, const MagneticScenario& sc, const Vec2& x, double t);

struct Trajectory2D {
  std::vector<double> t;
  std::vector<Vec2> x;
  std::vector<Vec2> v;  // ẋ
  std::vector<Vec2> p;  // canonical momentum ẋ + A
  std::shared_ptr<const ode::DenseTrajectory<4>> dense;  // (x¹, x², p1, p2)

  struct Point {
    Vec2 x, p;
  };
  Point at(double time) const;
};

/// Integrates Hamilton's equations of H = ½(p - A)² from the first grid
/// time, starting at position x0 with velocity v0, and samples on the grid.
Trajectory2D lorentz_integrate(const MagneticScenario& sc, const Vec2& x0, const Vec2& v0,
                               std::span<const double> grid, double tol = kDefaultOdeTol);

/// J = -½((b·p - ḃ·x)² + c²x²/b²) with canonical momenta.
double ermakov_lewis(const EmpSolution& sol, double t, const Vec2& x, const Vec2& p);
double ermakov_lewis(const Trajectory2D& traj, const EmpSolution& sol, double t);

}  // namespace ermakov
