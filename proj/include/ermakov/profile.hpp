#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

namespace ermakov {

// Frequency profiles ω²(t). Parameter names follow the usual conventions:
// `a` is the asymptotic frequency (sech family) or the amplitude (Lorentzian
// family, units of frequency·time²), `eps` a time scale.

/// ω² = ω0².
struct Constant {
  double omega0;
};

/// ω² = 2/(ε² cosh²(t/ε)) + a². Bell shaped, maximum at t = 0.
struct SechBump {
  double a;
  double eps;
};

/// Held at a² + 2/ε² for t <= 0, then the sech bump for t > 0.
struct QuenchedSechBump {
  double a;
  double eps;
};

/// ω = a/(t² + ε²); ε controls the slope rate.
struct LorentzBell {
  double a;
  double eps;
};

/// Held at ω(t_start) for t <= t_start, Lorentz bell afterwards.
struct QuenchedLorentz {
  double a;
  double eps;
  double t_start;
};

/// Held at ω(t_start) for t <= t_start, Lorentz bell on (t_start, t_end],
/// held at ω(t_end) for t > t_end.
struct WindowedLorentz {
  double a;
  double eps;
  double t_start;
  double t_end;
};

/// ω = α for t <= 0 and ω = 0 for t > 0.
struct AbruptDrop {
  double alpha;
};

/// ω = ω0 for t <= 0 and ω = ω1 for t > 0.
struct AbruptJump {
  double omega0;
  double omega1;
};

/// User supplied ω²(t); breakpoints mark known discontinuities.
struct Custom {
  std::function<double(double)> omega2;
  std::vector<double> breakpoints;
  std::string label = "custom";
};

using ProfileVariant = std::variant<Constant, SechBump, QuenchedSechBump, LorentzBell,
                                    QuenchedLorentz, WindowedLorentz, AbruptDrop, AbruptJump,
                                    Custom>;

class FrequencyProfile {
 public:
  /// Throws DomainError when a parameter violates its constraint
  /// (ε > 0, a >= 0, frequencies >= 0, t_start < t_end).
  FrequencyProfile(ProfileVariant v);  // NOLINT(google-explicit-constructor)

  template <class T>
    requires std::is_constructible_v<ProfileVariant, T> &&
             (!std::is_same_v<std::remove_cvref_t<T>, ProfileVariant>) &&
             (!std::is_same_v<std::remove_cvref_t<T>, FrequencyProfile>)
  FrequencyProfile(T&& v)  // NOLINT(google-explicit-constructor)
      : FrequencyProfile(ProfileVariant(std::forward<T>(v))) {}

  double omega2(double t) const;
  double omega(double t) const { return std::sqrt(std::max(0.0, omega2(t))); }

  /// Times where ω² or its derivative is not smooth.
  std::vector<double> breakpoints() const;

  /// Characteristic time scale used for default windows and grids.
  double time_scale() const;

  std::string_view name() const;
  const ProfileVariant& variant() const { return v_; }

  template <class T>
  const T* get_if() const {
    return std::get_if<T>(&v_);
  }

 private:
  ProfileVariant v_;
};

inline double omega2(const FrequencyProfile& p, double t) { return p.omega2(t); }

/// Eigenstate of the instantaneous Hamiltonian at t0: b(t0) = 1, ḃ(t0) = 0,
/// c = ω(t0). t0 may be -infinity (asymptotic preparation).
struct InitialCondition {
  double t0 = 0.0;

  static InitialCondition at(double t) { return {t}; }
  static InitialCondition minus_infinity() { return {-std::numeric_limits<double>::infinity()}; }
  bool at_minus_infinity() const { return std::isinf(t0) && t0 < 0; }
};

/// Frequency at the preparation time, ω(t0), with the t0 = -inf limit
/// taken analytically where it exists.
double initial_frequency(const FrequencyProfile& p, const InitialCondition& ic);

}  // namespace ermakov
