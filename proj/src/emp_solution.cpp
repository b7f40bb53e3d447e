#include "ermakov/emp_solution.hpp"

#include <cmath>
#include <string>

#include "ermakov/error.hpp"

namespace ermakov {

EmpSolution::EmpSolution(Evaluator eval, Phase tau, FrequencyProfile profile, double c, double t0,
                         double omega0, Window window)
    : eval_(std::move(eval)),
      tau_(std::move(tau)),
      profile_(std::move(profile)),
      c_(c),
      t0_(t0),
      omega0_(omega0),
      window_(window) {
  if (!(c_ > 0) || !std::isfinite(c_)) throw DomainError("EMP constant c must be positive");
  if (!eval_ || !tau_) throw DomainError("EMP solution needs b and tau evaluators");
}

EmpPoint EmpSolution::at(double t) const {
  if (!window_.contains(t)) {
    throw DomainError("t = " + std::to_string(t) + " outside the solution window");
  }
  return eval_(t);
}

double EmpSolution::tau(double t) const {
  if (!window_.contains(t)) {
    throw DomainError("t = " + std::to_string(t) + " outside the solution window");
  }
  return tau_(t);
}

}  // namespace ermakov
