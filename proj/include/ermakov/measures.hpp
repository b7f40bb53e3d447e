#pragma once

#include <span>
#include <vector>

#include "ermakov/emp_solution.hpp"
#include "ermakov/states.hpp"

namespace ermakov {

// Entropies are in nats throughout.

struct EntropyIncrease {
  double x;
  double p;
  double joint;
};

/// Increases of the Shannon entropies from t0 to t for any basis state:
/// ΔSx = ln b, ΔSp = ½ln((ω0² + b²ḃ²)/(ω0²b²)), ΔSj = ½ln(1 + b²ḃ²/ω0²).
EntropyIncrease entropy_increases(const EmpSolution& sol, double t);

struct RenyiIncrease {
  double x;
  double p;
};

/// Increases of the order-α Rényi entropies. They coincide with the Shannon
/// increases for every α; α must be positive and different from 1.
RenyiIncrease renyi_increase(const EmpSolution& sol, double alpha, double t);

struct FisherInfo {
  double x;
  double p;
};

/// Fx = 2ω0(2n+1)/b², Fp = 2b²ω0(2n+1)/(ω0² + b²ḃ²).
FisherInfo fisher(const EmpSolution& sol, int n, double t);

struct Entropies {
  double x;
  double p;
};

inline constexpr double kOracleTol = 1e-9;

/// Absolute Shannon entropies -∫ρ ln ρ by adaptive quadrature.
Entropies entropy_oracle(const BasisState& s, double t, double tol = kOracleTol);

/// Absolute Rényi entropies (1-α)⁻¹ ln ∫ρ^α by adaptive quadrature.
Entropies renyi_oracle(const BasisState& s, double alpha, double t, double tol = kOracleTol);

/// ∫(∂ρ)²/ρ by adaptive quadrature.
FisherInfo fisher_oracle(const BasisState& s, double t, double tol = kOracleTol);

struct Complexity {
  double x;
  double p;
};

/// Fisher-Shannon complexities F·e^{2S}, with S from entropy_oracle.
Complexity complexity(const BasisState& s, double t);

/// Slacks of the Stam, Cramér-Rao and joint-entropy/uncertainty
/// inequalities; all are non-negative.
struct Margins {
  double stam_x;        // 4⟨p²⟩ - Fx
  double stam_p;        // 4⟨x²⟩ - Fp
  double cramer_rao_x;  // Fx - 1/Δ²x
  double cramer_rao_p;  // Fp - 1/Δ²p
  double joint;         // ΔxΔp - e^{ΔSj}/(2(2n+1))
};
Margins inequality_margins(const BasisState& s, double t);

/// Everything above at one time. Rényi increases are listed in the order of
/// the requested orders.
struct InfoRecord {
  double t;
  EntropyIncrease dS;
  std::vector<RenyiIncrease> renyi;
  FisherInfo fisher;
  Complexity cfs;
  Margins margins;
};
InfoRecord info_record(const BasisState& s, double t, std::span<const double> renyi_alpha = {});

}  // namespace ermakov
