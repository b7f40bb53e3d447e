#include "ermakov/magnetic.hpp"

#include <algorithm>
#include <cmath>

#include "ermakov/error.hpp"
#include "ermakov/measures.hpp"
#include "ermakov/quadrature.hpp"
#include "ermakov/states.hpp"

namespace ermakov {

MagneticScenario::MagneticScenario(EmpSolution sol, double p3) : sol_(std::move(sol)), p3_(p3) {
  if (!std::isfinite(sol_.t0())) throw DomainError("magnetic scenario needs a finite t0");
}

double MagneticScenario::rotation_angle(double t) const {
  const auto& p = profile();
  return quad::integral([&p](double s) { return p.omega(s); }, t0(), t, 1e-12, p.breakpoints());
}

Vec2 MagneticScenario::vector_potential(const Vec2& x, double t) const {
  const double w = profile().omega(t);
  return {-w * x[1], w * x[0]};
}

Vec2 rotate(double angle, const Vec2& v) {
  const double c = std::cos(angle), s = std::sin(angle);
  return {c * v[0] + s * v[1], -s * v[0] + c * v[1]};
}

BasisInfo basis_info(int m, int n, const MagneticScenario& sc, double t) {
  if (m < 0 || n < 0) throw DomainError("quantum numbers must be non-negative");
  const auto& sol = sc.sol();
  const auto [b, bdot] = sol.at(t);
  const double w0 = sol.omega0();
  const double b2 = b * b, d = w0 * w0 + b2 * bdot * bdot;
  const double k = m + n + 1.0;
  BasisInfo out{};
  out.dS2x = 2.0 * std::log(b);
  out.dS2p = std::log(d / (w0 * w0 * b2));
  out.F2x = 4.0 * w0 * k / b2;
  out.F2p = 4.0 * b2 * w0 * k / d;
  const auto em = entropy_oracle(BasisState(m, sol), t);
  const auto en = m == n ? em : entropy_oracle(BasisState(n, sol), t);
  out.CFS2x = out.F2x * std::exp(em.x + en.x);
  out.CFS2p = out.F2p * std::exp(em.p + en.p);
  return out;
}

std::complex<double> basis_state(int m, int n, const MagneticScenario& sc, const Vec2& x, double t) {
  const double om = sc.rotation_angle(t);
  const double c = std::cos(om), s = std::sin(om);
  const double u = x[0] * c - x[1] * s, v = x[0] * s + x[1] * c;
  const auto& sol = sc.sol();
  const double p3 = sc.p3();
  return std::polar(1.0, -t * p3 * p3 / 2.0) * psi(BasisState(m, sol), u, t) *
         psi(BasisState(n, sol), v, t);
}

double basis_density(int m, int n, const MagneticScenario& sc, const Vec2& x, double t) {
  return std::norm(basis_state(m, n, sc, x, t));
}

Trajectory2D::Point Trajectory2D::at(double time) const {
  const auto y = (*dense)(time);
  return {{y[0], y[1]}, {y[2], y[3]}};
}

Trajectory2D lorentz_integrate(const MagneticScenario& sc, const Vec2& x0, const Vec2& v0,
                               std::span<const double> grid, double tol) {
  if (grid.size() < 2) throw DomainError("trajectory grid needs at least two times");
  if (!std::is_sorted(grid.begin(), grid.end())) throw DomainError("trajectory grid must be increasing");
  const auto& prof = sc.profile();
  auto rhs = [&prof](double t, const ode::State<4>& y) {
    const double w = prof.omega(t);
    const double v1 = y[2] + w * y[1], v2 = y[3] - w * y[0];
    return ode::State<4>{v1, v2, w * v2, -w * v1};
  };
  const double ta = grid.front(), tb = grid.back();
  const auto a0 = sc.vector_potential(x0, ta);
  const ode::State<4> y0{x0[0], x0[1], v0[0] + a0[0], v0[1] + a0[1]};
  auto dense = std::make_shared<ode::DenseTrajectory<4>>(
      ode::integrate<4>(rhs, ta, y0, tb, {tol, tol}, prof.breakpoints()));

  Trajectory2D out;
  out.dense = dense;
  for (double t : grid) {
    const auto y = (*dense)(t);
    const Vec2 x{y[0], y[1]}, p{y[2], y[3]};
    const auto a = sc.vector_potential(x, t);
    out.t.push_back(t);
    out.x.push_back(x);
    out.p.push_back(p);
    out.v.push_back({p[0] - a[0], p[1] - a[1]});
  }
  return out;
}

double ermakov_lewis(const EmpSolution& sol, double t, const Vec2& x, const Vec2& p) {
  const auto [b, bdot] = sol.at(t);
  const double c = sol.c();
  const double q1 = b * p[0] - bdot * x[0], q2 = b * p[1] - bdot * x[1];
  const double r2 = x[0] * x[0] + x[1] * x[1];
  return -0.5 * (q1 * q1 + q2 * q2 + c * c * r2 / (b * b));
}

double ermakov_lewis(const Trajectory2D& traj, const EmpSolution& sol, double t) {
  const auto pt = traj.at(t);
  return ermakov_lewis(sol, t, pt.x, pt.p);
}

}  // namespace ermakov
