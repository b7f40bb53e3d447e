#include "ermakov/profiles.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ermakov/error.hpp"

namespace ermakov {
namespace {

constexpr double kPi = std::numbers::pi;

struct Sample {
  double b, bdot, tau;
};

double sech2(double s) {
  const double ch = std::cosh(s);
  return 1.0 / (ch * ch);
}

// Sech bump, eigenstate at the maximum t0 = 0, a > 0.
Sample sech_from_peak(double a, double eps, double t) {
  const double s = t / eps, th = std::tanh(s), sh2 = sech2(s);
  const double ae = a * eps, ae2 = ae * ae;
  const double u = 1.0 + th * th / ae2;
  const double udot = 2.0 * th * sh2 / (eps * ae2);
  const double theta = a * t + std::atan(th / ae);
  const double theta_dot = a + (sh2 / (eps * ae)) / (1.0 + th * th / ae2);
  const double d = (1.0 + ae2) * (1.0 + ae2);
  const double sn = std::sin(theta);
  const double v = 1.0 - sn * sn / d;
  const double vdot = -std::sin(2.0 * theta) * theta_dot / d;
  const double b = std::sqrt(u * v);
  const double c = std::sqrt(a * a + 2.0 / (eps * eps));
  const double k = ae * std::sqrt(2.0 + ae2) / (1.0 + ae2);
  return {b, (udot * v + u * vdot) / (2.0 * b), unwrapped_phase(1.0, 0.0, k, theta) / c};
}

// Sech bump with a = 0 (reflectionless well): x1 = 1 - s tanh s, x2 = ε tanh s.
Sample sech_free_from_peak(double eps, double t) {
  const double s = t / eps, th = std::tanh(s), sh2 = sech2(s);
  const double c = std::sqrt(2.0) / eps;
  const double x1 = 1.0 - s * th, x1d = -(th + s * sh2) / eps;
  const double x2 = eps * th, x2d = sh2;
  const double b = std::sqrt(x1 * x1 + c * c * x2 * x2);
  return {b, (x1 * x1d + c * c * x2 * x2d) / b, std::atan2(c * x2, x1) / c};
}

// Sech bump prepared at t0 = -inf.
Sample sech_from_past(double a, double eps, double t) {
  const double s = t / eps, th = std::tanh(s), sh2 = sech2(s);
  const double ae = a * eps, ae2 = ae * ae;
  const double b2 = (ae2 + th * th) / (1.0 + ae2);
  const double b2dot = 2.0 * th * sh2 / (eps * (1.0 + ae2));
  const double b = std::sqrt(b2);
  return {b, b2dot / (2.0 * b), t + std::atan(th / ae) / a};
}

// Lorentz bell, eigenstate at finite t0; τ(t0) = 0.
Sample lorentz_from(double a, double eps, double t0, double t) {
  const double lam = std::sqrt(1.0 + a * a / (eps * eps));
  const double r2 = t * t + eps * eps, r02 = t0 * t0 + eps * eps;
  const double le = lam * eps;
  const double c_tilde = lam * std::atan(t0 / eps);
  const double c_shift = c_tilde - std::atan(t0 / le);
  const double theta = lam * std::atan(t / eps);
  const double theta_dot = le / r2;
  const double norm = le * le * r02;
  const double p = r2 / norm, pdot = 2.0 * t / norm;
  const double big = eps * eps + a * a + t0 * t0;
  const double ph_c = theta - c_shift, ph_s = theta - c_tilde;
  const double cc = std::cos(ph_c), ss = std::sin(ph_s);
  const double q = big * cc * cc + a * a * ss * ss;
  const double qdot = theta_dot * (-big * std::sin(2.0 * ph_c) + a * a * std::sin(2.0 * ph_s));
  const double b = std::sqrt(p * q);
  const double c = a / r02;
  return {b, (pdot * q + p * qdot) / (2.0 * b), unwrapped_phase(le, -t0, a, ph_s) / c};
}

// Continuation with constant frequency w1 from (b1, bdot1, tau1) at t1.
Sample constant_tail(double c, double w1, double t1, double b1, double bd1, double tau1, double t) {
  const double sg = t - t1;
  const double cs = std::cos(w1 * sg), sn = std::sin(w1 * sg);
  const double x1 = b1 * cs + (bd1 / w1) * sn, x1d = -b1 * w1 * sn + bd1 * cs;
  const double x2 = sn / (w1 * b1), x2d = cs / b1;
  const double b = std::sqrt(x1 * x1 + c * c * x2 * x2);
  return {b, (x1 * x1d + c * c * x2 * x2d) / b,
          tau1 + unwrapped_phase(b1, bd1 / w1, c / (w1 * b1), w1 * sg) / c};
}

Sample abrupt_drop_tail(double alpha, double t) {
  const double b = std::sqrt(1.0 + alpha * alpha * t * t);
  return {b, alpha * alpha * t / b, std::atan(alpha * t) / alpha};
}

template <class F>
EmpSolution make_solution(F f, const FrequencyProfile& p, double c, double t0, double omega0) {
  auto eval = [f](double t) {
    const Sample s = f(t);
    return EmpPoint{s.b, s.bdot};
  };
  auto tau = [f](double t) { return f(t).tau; };
  return EmpSolution(eval, tau, p, c, t0, omega0);
}

[[noreturn]] void no_closed_form(const FrequencyProfile& p, const InitialCondition& ic) {
  throw NoClosedForm("no closed-form EMP solution for profile '" + std::string(p.name()) +
                     "' with t0 = " + std::to_string(ic.t0));
}

}  // namespace

double unwrapped_phase(double m11, double m12, double m22, double phi) {
  const double k = std::floor(phi / kPi);
  const double psi = phi - k * kPi;
  const double sn = std::sin(psi), cs = std::cos(psi);
  return k * kPi + std::atan2(m22 * sn, m11 * cs + m12 * sn);
}

LorentzFundamental lorentz_fundamental(double a, double eps, double t0, double t) {
  const double lam = std::sqrt(1.0 + a * a / (eps * eps));
  const double le = lam * eps;
  const double r = std::sqrt(t * t + eps * eps), r0 = std::sqrt(t0 * t0 + eps * eps);
  const double phi = lam * (std::atan(t / eps) - std::atan(t0 / eps));
  const double cs = std::cos(phi), sn = std::sin(phi);
  // d/dt of r·cos φ and r·sin φ.
  const double dc = (t / r) * cs - (le / r) * sn;
  const double ds = (t / r) * sn + (le / r) * cs;
  const double g = t0 / le;
  return {(r / r0) * (cs - g * sn), (dc - g * ds) / r0, r * r0 * sn / le, r0 * ds / le};
}

EmpSolution closed_form_emp(const FrequencyProfile& p, const InitialCondition& ic) {
  const double t0 = ic.t0;
  const bool past = ic.at_minus_infinity();
  if (!past && !std::isfinite(t0)) no_closed_form(p, ic);

  if (const auto* q = p.get_if<Constant>()) {
    if (!(q->omega0 > 0)) no_closed_form(p, ic);
    const double origin = past ? 0.0 : t0;
    return make_solution([origin](double t) { return Sample{1.0, 0.0, t - origin}; }, p,
                         q->omega0, t0, q->omega0);
  }

  if (const auto* q = p.get_if<SechBump>()) {
    const double a = q->a, eps = q->eps;
    if (past) {
      if (!(a > 0)) no_closed_form(p, ic);
      return make_solution([a, eps](double t) { return sech_from_past(a, eps, t); }, p, a, t0, a);
    }
    if (t0 != 0.0) no_closed_form(p, ic);
    const double c = std::sqrt(a * a + 2.0 / (eps * eps));
    if (a > 0) {
      return make_solution([a, eps](double t) { return sech_from_peak(a, eps, t); }, p, c, 0.0, c);
    }
    return make_solution([eps](double t) { return sech_free_from_peak(eps, t); }, p, c, 0.0, c);
  }

  if (const auto* q = p.get_if<QuenchedSechBump>()) {
    if (past || t0 > 0) no_closed_form(p, ic);
    const double a = q->a, eps = q->eps;
    const double c = std::sqrt(a * a + 2.0 / (eps * eps));
    return make_solution(
        [a, eps, t0](double t) {
          if (t <= 0) return Sample{1.0, 0.0, t - t0};
          Sample s = a > 0 ? sech_from_peak(a, eps, t) : sech_free_from_peak(eps, t);
          s.tau -= t0;
          return s;
        },
        p, c, t0, c);
  }

  if (const auto* q = p.get_if<LorentzBell>()) {
    if (past || !(q->a > 0)) no_closed_form(p, ic);
    const double a = q->a, eps = q->eps;
    const double c = a / (t0 * t0 + eps * eps);
    return make_solution([a, eps, t0](double t) { return lorentz_from(a, eps, t0, t); }, p, c, t0, c);
  }

  if (const auto* q = p.get_if<QuenchedLorentz>()) {
    if (past || t0 > q->t_start || !(q->a > 0)) no_closed_form(p, ic);
    const double a = q->a, eps = q->eps, ts = q->t_start;
    const double c = a / (ts * ts + eps * eps);
    return make_solution(
        [a, eps, ts, t0](double t) {
          if (t <= ts) return Sample{1.0, 0.0, t - t0};
          Sample s = lorentz_from(a, eps, ts, t);
          s.tau += ts - t0;
          return s;
        },
        p, c, t0, c);
  }

  if (const auto* q = p.get_if<WindowedLorentz>()) {
    if (past || t0 > q->t_start || !(q->a > 0)) no_closed_form(p, ic);
    const double a = q->a, eps = q->eps, ts = q->t_start, te = q->t_end;
    const double c = a / (ts * ts + eps * eps);
    const double w1 = a / (te * te + eps * eps);
    const Sample end = lorentz_from(a, eps, ts, te);
    const double tau_end = end.tau + ts - t0;
    return make_solution(
        [=](double t) {
          if (t <= ts) return Sample{1.0, 0.0, t - t0};
          if (t <= te) {
            Sample s = lorentz_from(a, eps, ts, t);
            s.tau += ts - t0;
            return s;
          }
          return constant_tail(c, w1, te, end.b, end.bdot, tau_end, t);
        },
        p, c, t0, c);
  }

  if (const auto* q = p.get_if<AbruptDrop>()) {
    if (past || t0 > 0 || !(q->alpha > 0)) no_closed_form(p, ic);
    const double alpha = q->alpha;
    return make_solution(
        [alpha, t0](double t) {
          if (t <= 0) return Sample{1.0, 0.0, t - t0};
          Sample s = abrupt_drop_tail(alpha, t);
          s.tau -= t0;
          return s;
        },
        p, alpha, t0, alpha);
  }

  if (const auto* q = p.get_if<AbruptJump>()) {
    if (past || t0 > 0 || !(q->omega0 > 0)) no_closed_form(p, ic);
    const double w0 = q->omega0, w1 = q->omega1;
    return make_solution(
        [w0, w1, t0](double t) {
          if (t <= 0) return Sample{1.0, 0.0, t - t0};
          Sample s = w1 > 0 ? constant_tail(w0, w1, 0.0, 1.0, 0.0, 0.0, t) : abrupt_drop_tail(w0, t);
          s.tau -= t0;
          return s;
        },
        p, w0, t0, w0);
  }

  no_closed_form(p, ic);
}

}  // namespace ermakov
