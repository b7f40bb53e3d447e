#include "ermakov/profile.hpp"

#include <cmath>
#include <string>

#include "ermakov/error.hpp"

namespace ermakov {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError("invalid frequency profile: " + what);
}

void check_sech(double a, double eps) {
  require(std::isfinite(a) && a >= 0, "a >= 0");
  require(std::isfinite(eps) && eps > 0, "eps > 0");
}

double sech_bump2(double a, double eps, double t) {
  const double ch = std::cosh(t / eps);
  return 2.0 / (eps * eps * ch * ch) + a * a;
}

double lorentz(double a, double eps, double t) { return a / (t * t + eps * eps); }

}  // namespace

FrequencyProfile::FrequencyProfile(ProfileVariant v) : v_(std::move(v)) {
  std::visit(overloaded{
                 [](const Constant& p) { require(std::isfinite(p.omega0) && p.omega0 >= 0, "omega0 >= 0"); },
                 [](const SechBump& p) { check_sech(p.a, p.eps); },
                 [](const QuenchedSechBump& p) { check_sech(p.a, p.eps); },
                 [](const LorentzBell& p) { check_sech(p.a, p.eps); },
                 [](const QuenchedLorentz& p) {
                   check_sech(p.a, p.eps);
                   require(std::isfinite(p.t_start), "finite t_start");
                 },
                 [](const WindowedLorentz& p) {
                   check_sech(p.a, p.eps);
                   require(std::isfinite(p.t_start) && std::isfinite(p.t_end) && p.t_start < p.t_end,
                           "t_start < t_end");
                 },
                 [](const AbruptDrop& p) { require(std::isfinite(p.alpha) && p.alpha >= 0, "alpha >= 0"); },
                 [](const AbruptJump& p) {
                   require(std::isfinite(p.omega0) && p.omega0 >= 0, "omega0 >= 0");
                   require(std::isfinite(p.omega1) && p.omega1 >= 0, "omega1 >= 0");
                 },
                 [](const Custom& p) { require(static_cast<bool>(p.omega2), "omega2 callable"); },
             },
             v_);
}

double FrequencyProfile::omega2(double t) const {
  return std::visit(
      overloaded{
          [](const Constant& p) { return p.omega0 * p.omega0; },
          [t](const SechBump& p) { return sech_bump2(p.a, p.eps, t); },
          [t](const QuenchedSechBump& p) {
            return t <= 0 ? p.a * p.a + 2.0 / (p.eps * p.eps) : sech_bump2(p.a, p.eps, t);
          },
          [t](const LorentzBell& p) {
            const double w = lorentz(p.a, p.eps, t);
            return w * w;
          },
          [t](const QuenchedLorentz& p) {
            const double w = lorentz(p.a, p.eps, t <= p.t_start ? p.t_start : t);
            return w * w;
          },
          [t](const WindowedLorentz& p) {
            const double tt = t <= p.t_start ? p.t_start : (t <= p.t_end ? t : p.t_end);
            const double w = lorentz(p.a, p.eps, tt);
            return w * w;
          },
          [t](const AbruptDrop& p) { return t <= 0 ? p.alpha * p.alpha : 0.0; },
          [t](const AbruptJump& p) { return t <= 0 ? p.omega0 * p.omega0 : p.omega1 * p.omega1; },
          [t](const Custom& p) { return p.omega2(t); },
      },
      v_);
}

std::vector<double> FrequencyProfile::breakpoints() const {
  return std::visit(overloaded{
                        [](const QuenchedSechBump&) { return std::vector<double>{0.0}; },
                        [](const QuenchedLorentz& p) { return std::vector<double>{p.t_start}; },
                        [](const WindowedLorentz& p) { return std::vector<double>{p.t_start, p.t_end}; },
                        [](const AbruptDrop&) { return std::vector<double>{0.0}; },
                        [](const AbruptJump&) { return std::vector<double>{0.0}; },
                        [](const Custom& p) { return p.breakpoints; },
                        [](const auto&) { return std::vector<double>{}; },
                    },
                    v_);
}

double FrequencyProfile::time_scale() const {
  auto inv = [](double w) { return w > 0 ? 1.0 / w : 1.0; };
  return std::visit(overloaded{
                        [&](const Constant& p) { return inv(p.omega0); },
                        [](const SechBump& p) { return p.eps; },
                        [](const QuenchedSechBump& p) { return p.eps; },
                        [](const LorentzBell& p) { return p.eps; },
                        [](const QuenchedLorentz& p) { return p.eps; },
                        [](const WindowedLorentz& p) { return p.eps; },
                        [&](const AbruptDrop& p) { return inv(p.alpha); },
                        [&](const AbruptJump& p) { return inv(std::max(p.omega0, p.omega1)); },
                        [](const Custom&) { return 1.0; },
                    },
                    v_);
}

std::string_view FrequencyProfile::name() const {
  return std::visit(overloaded{
                        [](const Constant&) -> std::string_view { return "constant"; },
                        [](const SechBump&) -> std::string_view { return "sech_bump"; },
                        [](const QuenchedSechBump&) -> std::string_view { return "quenched_sech_bump"; },
                        [](const LorentzBell&) -> std::string_view { return "lorentz_bell"; },
                        [](const QuenchedLorentz&) -> std::string_view { return "quenched_lorentz"; },
                        [](const WindowedLorentz&) -> std::string_view { return "windowed_lorentz"; },
                        [](const AbruptDrop&) -> std::string_view { return "abrupt_drop"; },
                        [](const AbruptJump&) -> std::string_view { return "abrupt_jump"; },
                        [](const Custom& p) -> std::string_view { return p.label; },
                    },
                    v_);
}

double initial_frequency(const FrequencyProfile& p, const InitialCondition& ic) {
  if (!ic.at_minus_infinity()) {
    if (!std::isfinite(ic.t0)) throw DomainError("initial time must be finite or -inf");
    return p.omega(ic.t0);
  }
  return std::visit(overloaded{
                        [](const Constant& q) { return q.omega0; },
                        [](const SechBump& q) { return q.a; },
                        [](const QuenchedSechBump& q) { return std::sqrt(q.a * q.a + 2.0 / (q.eps * q.eps)); },
                        [](const LorentzBell&) { return 0.0; },
                        [](const QuenchedLorentz& q) { return lorentz(q.a, q.eps, q.t_start); },
                        [](const WindowedLorentz& q) { return lorentz(q.a, q.eps, q.t_start); },
                        [](const AbruptDrop& q) { return q.alpha; },
                        [](const AbruptJump& q) { return q.omega0; },
                        [](const Custom&) -> double {
                          throw DomainError("custom profile has no known t -> -inf limit");
                        },
                    },
                    p.variant());
}

}  // namespace ermakov
