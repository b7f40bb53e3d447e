#include "ermakov/states.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ermakov/error.hpp"
#include "ermakov/quadrature.hpp"

namespace ermakov {
namespace {

const double kPiQuarter = std::pow(std::numbers::pi, -0.25);

// Both densities have the form k·h_n(k·q)².
double scale(const BasisState& s, double t, Space which) {
  const auto [b, bdot] = s.sol().at(t);
  const double w0 = s.sol().omega0();
  if (which == Space::Position) return std::sqrt(w0) / b;
  return std::sqrt(w0) * b / std::sqrt(w0 * w0 + b * b * bdot * bdot);
}

}  // namespace

double hermite(int n, double y) {
  if (n < 0) throw DomainError("Hermite degree must be non-negative");
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = 2.0 * y;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * y * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
  }
  if (!std::isfinite(cur)) throw Overflow("H_" + std::to_string(n) + " overflows at y = " + std::to_string(y));
  return cur;
}

double hermite_function(int n, double y) {
  if (n < 0) throw DomainError("Hermite degree must be non-negative");
  double prev = kPiQuarter * std::exp(-0.5 * y * y);
  if (n == 0) return prev;
  double cur = std::sqrt(2.0) * y * prev;
  for (int k = 1; k < n; ++k) {
    const double next = std::sqrt(2.0 / (k + 1)) * y * cur - std::sqrt(double(k) / (k + 1)) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double hermite_function_derivative(int n, double y) {
  const double hn = hermite_function(n, y);
  if (n == 0) return -y * hn;
  return std::sqrt(2.0 * n) * hermite_function(n - 1, y) - y * hn;
}

BasisState::BasisState(int n, EmpSolution sol) : n_(n), sol_(std::move(sol)) {
  if (n < 0) throw DomainError("quantum number n must be non-negative");
}

std::complex<double> psi(const BasisState& s, double x, double t) {
  const auto& sol = s.sol();
  const auto [b, bdot] = sol.at(t);
  const double c = sol.c();
  const double y = std::sqrt(c) * x / b;
  const double mag = std::pow(c, 0.25) / std::sqrt(b) * hermite_function(s.n(), y);
  const double phase = -c * (s.n() + 0.5) * sol.tau(t) + bdot * x * x / (2.0 * b);
  return std::polar(mag, phase);
}

std::complex<double> psi_dx(const BasisState& s, double x, double t) {
  using namespace std::complex_literals;
  const auto& sol = s.sol();
  const auto [b, bdot] = sol.at(t);
  const double c = sol.c();
  const double k = std::sqrt(c) / b;
  const double y = k * x;
  const double amp = std::pow(c, 0.25) / std::sqrt(b);
  const double phase = -c * (s.n() + 0.5) * sol.tau(t) + bdot * x * x / (2.0 * b);
  const std::complex<double> inner =
      hermite_function_derivative(s.n(), y) * k + 1i * (bdot / b) * x * hermite_function(s.n(), y);
  return amp * std::polar(1.0, phase) * inner;
}

double density(const BasisState& s, double q, double t, Space which) {
  const double k = scale(s, t, which);
  const double h = hermite_function(s.n(), k * q);
  return k * h * h;
}

double density_derivative(const BasisState& s, double q, double t, Space which) {
  const double k = scale(s, t, which);
  const double y = k * q;
  return 2.0 * k * k * hermite_function(s.n(), y) * hermite_function_derivative(s.n(), y);
}

double truncation_radius(const BasisState& s, double t, Space which) {
  const double k = scale(s, t, which);
  const int n = s.n();
  const double y = std::max(std::sqrt(36.0 + n * std::log(4.0)), std::sqrt(2.0 * n + 1.0) + 7.0);
  return y / k + 5.0;
}

Moments moments(const BasisState& s, double t) {
  const auto& sol = s.sol();
  const auto [b, bdot] = sol.at(t);
  const double w0 = sol.omega0();
  const double m = 2.0 * s.n() + 1.0;
  const double b2 = b * b;
  const double w2 = sol.profile().omega2(t);
  return {
      b2 / (2.0 * w0) * m,
      (w0 / b2 + bdot * bdot / w0) * m / 2.0,
      0.25 * (w2 * b2 / w0 + w0 / b2 + bdot * bdot / w0) * m,
      (s.n() + 0.5) * std::sqrt(1.0 + b2 * bdot * bdot / (w0 * w0)),
  };
}

double lr_expectation(const BasisState& s, double t, double tol) {
  using namespace std::complex_literals;
  const auto& sol = s.sol();
  const auto [b, bdot] = sol.at(t);
  const double c = sol.c();
  auto integrand = [&](double x) {
    const auto v = psi(s, x, t);
    const auto dv = psi_dx(s, x, t);
    const std::complex<double> a = -1i * b * dv - bdot * x * v;
    return 0.5 * (c * c * x * x / (b * b) * std::norm(v) + std::norm(a));
  };
  const double r = truncation_radius(s, t, Space::Position);
  return quad::integral(integrand, -r, r, tol);
}

DrivenTrajectory::DrivenTrajectory(std::shared_ptr<const ode::DenseTrajectory<3>> traj,
                                   std::function<double(double)> force)
    : traj_(std::move(traj)), force_(std::move(force)) {}

DrivenTrajectory integrate_drive(const FrequencyProfile& profile,
                                 std::function<double(double)> force, double t0, double e0,
                                 double edot0, Window window, double tol) {
  if (!force) throw DomainError("driving force must be set");
  if (!std::isfinite(t0) || !window.contains(t0) || !std::isfinite(window.lo) ||
      !std::isfinite(window.hi)) {
    throw DomainError("integrate_drive needs a finite t0 inside a finite window");
  }
  auto rhs = [&](double t, const ode::State<3>& y) {
    const double w2 = profile.omega2(t), f = force(t);
    return ode::State<3>{y[1], -w2 * y[0] + f,
                         0.5 * y[1] * y[1] - 0.5 * w2 * y[0] * y[0] + f * y[0]};
  };
  const ode::Options opts{tol, tol};
  const auto breaks = profile.breakpoints();
  const ode::State<3> y0{e0, edot0, 0.0};
  auto traj = std::make_shared<ode::DenseTrajectory<3>>();
  if (window.lo < t0) *traj = ode::integrate<3>(rhs, t0, y0, window.lo, opts, breaks);
  if (window.hi > t0) {
    auto fwd = ode::integrate<3>(rhs, t0, y0, window.hi, opts, breaks);
    if (traj->empty()) {
      *traj = std::move(fwd);
    } else {
      traj->append(fwd);
    }
  }
  if (traj->empty()) traj->push(t0, y0, rhs(t0, y0));
  return DrivenTrajectory(std::move(traj), std::move(force));
}

std::complex<double> driven_psi(const BasisState& s, const DrivenTrajectory& drive, double x,
                                double t) {
  const double e = drive.e(t);
  return psi(s, x - e, t) * std::polar(1.0, drive.edot(t) * (x - e) + drive.action(t));
}

double driven_density(const BasisState& s, const DrivenTrajectory& drive, double q, double t,
                      Space which) {
  const double shift = which == Space::Position ? drive.e(t) : drive.edot(t);
  return density(s, q - shift, t, which);
}

}  // namespace ermakov
