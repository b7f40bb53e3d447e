#include "ermakov/emp.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ermakov/error.hpp"
#include "ermakov/quadrature.hpp"

namespace ermakov {

FundamentalPair::FundamentalPair(std::shared_ptr<const ode::DenseTrajectory<4>> traj,
                                 FrequencyProfile profile, double t0)
    : traj_(std::move(traj)), profile_(std::move(profile)), t0_(t0) {}

FundamentalPair::Values FundamentalPair::at(double t) const {
  const auto y = (*traj_)(t);
  return {y[0], y[1], y[2], y[3]};
}

double FundamentalPair::wronskian_at(double t) const {
  const auto times = traj_->times();
  auto it = std::lower_bound(times.begin(), times.end(), t);
  if (it == times.end()) --it;
  const auto& y = traj_->node(static_cast<std::size_t>(it - times.begin()));
  return y[0] * y[3] - y[2] * y[1];
}

FundamentalPair integrate_fundamental(const FrequencyProfile& profile, double t0, Window window,
                                      double tol) {
  if (!std::isfinite(t0) || !window.contains(t0) || !std::isfinite(window.lo) ||
      !std::isfinite(window.hi)) {
    throw DomainError("integrate_fundamental needs a finite t0 inside a finite window");
  }
  if (!(tol > 0)) throw DomainError("tolerance must be positive");

  auto rhs = [&profile](double t, const ode::State<4>& y) {
    const double w2 = profile.omega2(t);
    return ode::State<4>{y[1], -w2 * y[0], y[3], -w2 * y[2]};
  };
  const ode::Options opts{tol, tol};
  const auto breaks = profile.breakpoints();
  const ode::State<4> y0{1.0, 0.0, 0.0, 1.0};

  auto traj = std::make_shared<ode::DenseTrajectory<4>>();
  if (window.lo < t0) {
    *traj = ode::integrate<4>(rhs, t0, y0, window.lo, opts, breaks);
  }
  if (window.hi > t0) {
    auto fwd = ode::integrate<4>(rhs, t0, y0, window.hi, opts, breaks);
    if (traj->empty()) {
      *traj = std::move(fwd);
    } else {
      traj->append(fwd);
    }
  }
  if (traj->empty()) traj->push(t0, y0, rhs(t0, y0));
  return FundamentalPair(std::move(traj), profile, t0);
}

EmpSolution emp_from_fundamental(const FundamentalPair& pair, double c, double quad_tol) {
  if (!(c > 0)) throw DomainError("EMP constant c must be positive");
  const double k2 = (c / pair.wronskian()) * (c / pair.wronskian());
  auto eval = [pair, k2](double t) {
    const auto v = pair.at(t);
    const double b = std::sqrt(v.x1 * v.x1 + k2 * v.x2 * v.x2);
    return EmpPoint{b, (v.x1 * v.x1dot + k2 * v.x2 * v.x2dot) / b};
  };
  const double t0 = pair.t0();
  const auto breaks = pair.profile().breakpoints();
  auto tau = [eval, t0, breaks, quad_tol](double t) {
    auto inv_b2 = [&eval](double s) {
      const double b = eval(s).b;
      return 1.0 / (b * b);
    };
    return quad::integral(inv_b2, t0, t, quad_tol, breaks);
  };
  return EmpSolution(eval, tau, pair.profile(), c, t0, c, pair.window());
}

EmpSolution numeric_emp(const FrequencyProfile& profile, const InitialCondition& ic, Window window,
                        double tol) {
  double t0 = ic.t0;
  if (ic.at_minus_infinity()) t0 = -40.0 * profile.time_scale();
  const double c = initial_frequency(profile, ic);
  window.lo = std::min(window.lo, t0);
  return emp_from_fundamental(integrate_fundamental(profile, t0, window, tol), c);
}

double tau_of(const EmpSolution& sol, double t, double tol) {
  if (!std::isfinite(sol.t0())) throw DomainError("tau_of needs a finite t0");
  auto inv_b2 = [&sol](double s) {
    const double b = sol.b(s);
    return 1.0 / (b * b);
  };
  return quad::integral(inv_b2, sol.t0(), t, tol, sol.profile().breakpoints());
}

ComplexB complex_B(const EmpSolution& sol, double t) {
  using namespace std::complex_literals;
  const auto [b, bdot] = sol.at(t);
  const double c = sol.c();
  const std::complex<double> phase = std::polar(1.0, c * sol.tau(t));
  const std::complex<double> pre = 1i / std::sqrt(2.0 * c);
  return {pre * b * phase, pre * phase * (bdot + 1i * c / b)};
}

std::complex<double> b_wronskian(const ComplexB& bb) {
  return bb.derivative * std::conj(bb.value) - std::conj(bb.derivative) * bb.value;
}

double residual(const EmpSolution& sol, double t) {
  const double h = 1e-4 * std::max(1.0, std::abs(t));
  const double f0 = sol.b(t);
  const double bdd = (-sol.b(t + 2 * h) + 16 * sol.b(t + h) - 30 * f0 + 16 * sol.b(t - h) -
                      sol.b(t - 2 * h)) /
                     (12 * h * h);
  const double c = sol.c();
  return bdd + sol.profile().omega2(t) * f0 - c * c / (f0 * f0 * f0);
}

}  // namespace ermakov
