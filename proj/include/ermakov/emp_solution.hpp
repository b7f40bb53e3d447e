#pragma once

#include <functional>
#include <limits>
#include <utility>

#include "ermakov/profile.hpp"

namespace ermakov {

struct EmpPoint {
  double b;
  double bdot;
};

struct Window {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  bool contains(double t) const { return t >= lo && t <= hi; }
};

/// A solution b(t) of b̈ + ω²b = c²/b³ together with ḃ and the phase
/// τ(t) = ∫dt/b². Copies share the underlying evaluator; evaluation is
/// read-only and safe from multiple threads.
class EmpSolution {
 public:
  using Evaluator = std::function<EmpPoint(double)>;
  using Phase = std::function<double(double)>;

  EmpSolution(Evaluator eval, Phase tau, FrequencyProfile profile, double c, double t0,
              double omega0, Window window = {});

  EmpPoint at(double t) const;
  double b(double t) const { return at(t).b; }
  double bdot(double t) const { return at(t).bdot; }
  double b2(double t) const {
    const double v = b(t);
    return v * v;
  }
  double tau(double t) const;

  double c() const { return c_; }
  double t0() const { return t0_; }
  double omega0() const { return omega0_; }
  const FrequencyProfile& profile() const { return profile_; }
  const Window& window() const { return window_; }

 private:
  Evaluator eval_;
  Phase tau_;
  FrequencyProfile profile_;
  double c_;
  double t0_;
  double omega0_;
  Window window_;
};

}  // namespace ermakov
