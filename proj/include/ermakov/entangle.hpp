#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "ermakov/emp_solution.hpp"
#include "ermakov/profile.hpp"

namespace ermakov {

using TimeFunction = std::function<double(double)>;

/// Two oscillators with common frequency ω(t) coupled by ½k(t)(x¹ - x²)².
struct OscillatorPair {
  TimeFunction omega2;  // ω²(t)
  TimeFunction k;
};

/// Normal modes y = ((x¹ - x²)/√2, (x¹ + x²)/√2): ω1² = ω² + 2k, ω2² = ω².
struct NormalModes {
  TimeFunction omega1_sq;
  TimeFunction omega2_sq;
};

/// Checks ω1² >= 0 on `samples` points of the window and throws
/// NegativeModeFrequency otherwise.
NormalModes decouple(const OscillatorPair& pair, Window window, int samples = 2001);
OscillatorPair recouple(const NormalModes& modes);

/// The pair described by its normal-mode EMP solutions, both prepared in
/// the instantaneous ground state at the same t0 (c1 = ω1(t0), c2 = ω2(t0)).
class CoupledSystem {
 public:
  CoupledSystem(EmpSolution mode1, EmpSolution mode2);

  const EmpSolution& mode1() const { return s1_; }
  const EmpSolution& mode2() const { return s2_; }
  double c1() const { return s1_.c(); }
  double c2() const { return s2_.c(); }
  double t0() const { return s1_.t0(); }
  /// k(t) = (ω1² - ω2²)/2.
  double coupling(double t) const;

 private:
  EmpSolution s1_;
  EmpSolution s2_;
};

/// Quenched coupling k1(t): ω1 the quenched sech bump prepared at t0 = 0,
/// ω2² constant.
CoupledSystem k1_scenario(double a = 1.0, double eps = 1.0, double omega2_sq = 0.5);
/// Pulse coupling k2(t): ω1 the sech bump prepared at t0 = -inf, ω2² constant.
CoupledSystem k2_scenario(double a = 1.0, double eps = 1.0, double omega2_sq = 0.5);

/// Parameters of the reduced ground-state kernel
///   ρ(x, x̃) = √((ζ-χ)/π)·exp(χxx̃ + iφ(x² - x̃²) - ζ(x² + x̃²)/2).
struct GaussianReduced {
  double zeta;
  double chi;
  double phi;
  double xi;  // χ/(ζ + √(ζ² - χ²)), the geometric ratio of the spectrum
};

GaussianReduced reduced_params(const CoupledSystem& sys, double t);
GaussianReduced make_reduced(double zeta, double chi, double phi);

struct EntanglementEntropy {
  double renyi;
  double von_neumann;
};

/// For the spectrum λ_k = (1-ξ)ξ^k: Rα = ln((1-ξ)^α/(1-ξ^α))/(1-α) and
/// S = -ln(1-ξ) - ξ/(1-ξ)·ln ξ. Throws DomainError unless 0 <= ξ < 1 and
/// α > 0, α != 1.
EntanglementEntropy entanglement_entropy(double xi, double alpha);
inline EntanglementEntropy entanglement_entropy(const GaussianReduced& g, double alpha) {
  return entanglement_entropy(g.xi, alpha);
}

std::complex<double> reduced_kernel(const GaussianReduced& g, double x, double xt);
std::complex<double> reduced_kernel(const CoupledSystem& sys, double x, double xt, double t);

/// ∫ψ(x, x2)·conj ψ(x̃, x2) dx2 of the evolved two-mode ground state, by
/// quadrature. Independent of reduced_params.
std::complex<double> partial_trace(const CoupledSystem& sys, double x, double xt, double t,
                                   double tol = 1e-12);

struct SpectrumResult {
  std::vector<double> eigenvalues;  // descending, clipped at 0
  double entropy;                   // -Σλ ln λ
};

/// Discretises the phase-free kernel on a uniform grid of `gridsize`
/// points over [-halfwidth, halfwidth] and diagonalises it. halfwidth <= 0
/// selects 10·(ζ² - χ²)^{-1/4}. Throws ConvergenceFailure when the solver
/// fails or the trace differs from 1 by more than 1e-6.
SpectrumResult spectrum_oracle(const GaussianReduced& g, int gridsize = 400, double halfwidth = 0.0);
SpectrumResult spectrum_oracle(const CoupledSystem& sys, double t, int gridsize = 400,
                               double halfwidth = 0.0);

struct Classicality {
  double qd;  // δ_QD = √((ζ-χ)/(ζ+χ)) = (1-ξ)/(1+ξ)
  double cc;  // δ_CC = √(ζ² - χ²)/(4|φ|), +inf when φ = 0
};
Classicality classicality(const GaussianReduced& g);

/// δ_QD written directly in terms of b1, b2 and their derivatives.
double decoherence_from_modes(const CoupledSystem& sys, double t);

/// ξ recovered from δ_QD.
inline double xi_from_decoherence(double qd) { return (1.0 - qd) / (1.0 + qd); }

struct SingleClassicality {
  double qd;        // identically 1
  double cc;        // c/(2bḃ), +inf when ḃ = 0
  double residual;  // ΔSj - ½ln(1 + 1/(4δ_CC²))
};
SingleClassicality single_classicality(const EmpSolution& sol, double t);

}  // namespace ermakov
