#include "ermakov/entangle.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "ermakov/error.hpp"
#include "ermakov/measures.hpp"
#include "ermakov/profiles.hpp"
#include "ermakov/quadrature.hpp"
#include "ermakov/states.hpp"

namespace ermakov {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

NormalModes decouple(const OscillatorPair& pair, Window window, int samples) {
  if (!pair.omega2 || !pair.k) throw DomainError("oscillator pair needs ω² and k");
  if (samples < 2 || !std::isfinite(window.lo) || !std::isfinite(window.hi)) {
    throw DomainError("decouple needs a finite window and at least two samples");
  }
  for (int i = 0; i < samples; ++i) {
    const double t = window.lo + (window.hi - window.lo) * i / (samples - 1);
    const double w1 = pair.omega2(t) + 2.0 * pair.k(t);
    if (w1 < 0) throw NegativeModeFrequency("ω1² = " + std::to_string(w1) + " < 0 at t = " + std::to_string(t));
  }
  auto w2 = pair.omega2, k = pair.k;
  return {[w2, k](double t) { return w2(t) + 2.0 * k(t); }, w2};
}

OscillatorPair recouple(const NormalModes& modes) {
  auto w1 = modes.omega1_sq, w2 = modes.omega2_sq;
  return {w2, [w1, w2](double t) { return 0.5 * (w1(t) - w2(t)); }};
}

CoupledSystem::CoupledSystem(EmpSolution mode1, EmpSolution mode2)
    : s1_(std::move(mode1)), s2_(std::move(mode2)) {
  if (s1_.t0() != s2_.t0()) throw DomainError("normal modes must share the preparation time");
}

double CoupledSystem::coupling(double t) const {
  return 0.5 * (s1_.profile().omega2(t) - s2_.profile().omega2(t));
}

CoupledSystem k1_scenario(double a, double eps, double omega2_sq) {
  if (!(omega2_sq > 0)) throw DomainError("ω2² must be positive");
  return {closed_form_emp(QuenchedSechBump{a, eps}, {0.0}),
          closed_form_emp(Constant{std::sqrt(omega2_sq)}, {0.0})};
}

CoupledSystem k2_scenario(double a, double eps, double omega2_sq) {
  if (!(omega2_sq > 0)) throw DomainError("ω2² must be positive");
  const auto past = InitialCondition::minus_infinity();
  return {closed_form_emp(SechBump{a, eps}, past),
          closed_form_emp(Constant{std::sqrt(omega2_sq)}, past)};
}

GaussianReduced make_reduced(double zeta, double chi, double phi) {
  if (!(zeta > chi) || chi < 0) throw DomainError("reduced kernel needs ζ > χ >= 0");
  return {zeta, chi, phi, chi / (zeta + std::sqrt(zeta * zeta - chi * chi))};
}

GaussianReduced reduced_params(const CoupledSystem& sys, double t) {
  const auto p1 = sys.mode1().at(t), p2 = sys.mode2().at(t);
  const double u1 = sys.c1() / (p1.b * p1.b), u2 = sys.c2() / (p2.b * p2.b);
  const double g1 = p1.bdot / p1.b, g2 = p2.bdot / p2.b;
  const double s = u1 + u2, du = u1 - u2, dg = g1 - g2;
  const double zeta = (s * s + 4.0 * u1 * u2 + dg * dg) / (4.0 * s);
  const double chi = (du * du + dg * dg) / (4.0 * s);
  const double phi = (g1 + g2) / 4.0 - du * dg / (4.0 * s);
  return make_reduced(zeta, chi, phi);
}

EntanglementEntropy entanglement_entropy(double xi, double alpha) {
  if (!(xi >= 0 && xi < 1)) throw DomainError("ξ must lie in [0, 1)");
  if (!(alpha > 0) || alpha == 1.0) throw DomainError("Renyi order must be positive and not 1");
  if (xi == 0) return {0.0, 0.0};
  const double renyi = (alpha * std::log1p(-xi) - std::log1p(-std::pow(xi, alpha))) / (1.0 - alpha);
  const double vn = -std::log1p(-xi) - xi / (1.0 - xi) * std::log(xi);
  return {renyi, vn};
}

std::complex<double> reduced_kernel(const GaussianReduced& g, double x, double xt) {
  const double norm = std::sqrt((g.zeta - g.chi) / std::numbers::pi);
  const double re = g.chi * x * xt - 0.5 * g.zeta * (x * x + xt * xt);
  return std::polar(norm * std::exp(re), g.phi * (x * x - xt * xt));
}

std::complex<double> reduced_kernel(const CoupledSystem& sys, double x, double xt, double t) {
  return reduced_kernel(reduced_params(sys, t), x, xt);
}

std::complex<double> partial_trace(const CoupledSystem& sys, double x, double xt, double t,
                                   double tol) {
  const BasisState g1(0, sys.mode1()), g2(0, sys.mode2());
  auto amp = [&](double a, double y) {
    return psi(g1, (a - y) / std::sqrt(2.0), t) * psi(g2, (a + y) / std::sqrt(2.0), t);
  };
  const double r = std::sqrt(2.0) * std::max(truncation_radius(g1, t, Space::Position),
                                             truncation_radius(g2, t, Space::Position)) +
                   std::max(std::abs(x), std::abs(xt));
  auto part = [&](bool imag) {
    return quad::integral(
        [&](double y) {
          const auto v = amp(x, y) * std::conj(amp(xt, y));
          return imag ? v.imag() : v.real();
        },
        -r, r, tol);
  };
  return {part(false), part(true)};
}

SpectrumResult spectrum_oracle(const GaussianReduced& g, int gridsize, double halfwidth) {
  if (gridsize < 200) throw DomainError("spectrum oracle needs at least 200 grid points");
  if (halfwidth <= 0) halfwidth = 10.0 / std::pow(g.zeta * g.zeta - g.chi * g.chi, 0.25);
  const double h = 2.0 * halfwidth / (gridsize - 1);
  const double norm = std::sqrt((g.zeta - g.chi) / std::numbers::pi);
  Eigen::MatrixXd k(gridsize, gridsize);
  for (int i = 0; i < gridsize; ++i) {
    const double xi = -halfwidth + i * h;
    for (int j = 0; j <= i; ++j) {
      const double xj = -halfwidth + j * h;
      const double v = h * norm * std::exp(g.chi * xi * xj - 0.5 * g.zeta * (xi * xi + xj * xj));
      k(i, j) = v;
      k(j, i) = v;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(k, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw ConvergenceFailure("kernel eigensolve did not converge");
  SpectrumResult out;
  const auto& ev = solver.eigenvalues();
  double sum = 0.0;
  for (int i = gridsize - 1; i >= 0; --i) {
    sum += ev(i);
    out.eigenvalues.push_back(std::max(0.0, ev(i)));
  }
  if (std::abs(sum - 1.0) > 1e-6) {
    throw ConvergenceFailure("discretised kernel trace " + std::to_string(sum) + " differs from 1");
  }
  out.entropy = 0.0;
  for (double l : out.eigenvalues) {
    if (l > 0) out.entropy -= l * std::log(l);
  }
  return out;
}

SpectrumResult spectrum_oracle(const CoupledSystem& sys, double t, int gridsize, double halfwidth) {
  return spectrum_oracle(reduced_params(sys, t), gridsize, halfwidth);
}

Classicality classicality(const GaussianReduced& g) {
  const double qd = std::sqrt((g.zeta - g.chi) / (g.zeta + g.chi));
  const double cc = g.phi == 0.0 ? kInf : std::sqrt(g.zeta * g.zeta - g.chi * g.chi) / (4.0 * std::abs(g.phi));
  return {qd, cc};
}

double decoherence_from_modes(const CoupledSystem& sys, double t) {
  const auto [b1, bd1] = sys.mode1().at(t);
  const auto [b2, bd2] = sys.mode2().at(t);
  const double c1 = sys.c1(), c2 = sys.c2();
  const double a = c1 * b2 * b2 + c2 * b1 * b1;
  const double w = (bd1 * b2 - bd2 * b1) * b1 * b2;
  return 2.0 * std::sqrt(c1 * c2) * b1 * b2 / std::sqrt(a * a + w * w);
}

SingleClassicality single_classicality(const EmpSolution& sol, double t) {
  const auto [b, bdot] = sol.at(t);
  const double cc = bdot == 0.0 ? kInf : sol.c() / (2.0 * b * bdot);
  const double dsj = entropy_increases(sol, t).joint;
  const double rel = std::isinf(cc) ? 0.0 : 0.5 * std::log1p(1.0 / (4.0 * cc * cc));
  return {1.0, cc, dsj - rel};
}

}  // namespace ermakov
