#include "ermakov/quench.hpp"

#include <cmath>
#include <numbers>

#include "ermakov/error.hpp"

namespace ermakov {
namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

QuenchSetup QuenchSetup::from_beta(double beta, double eps) {
  QuenchSetup q{beta / eps, eps};
  q.validate();
  return q;
}

void QuenchSetup::validate() const {
  if (!(alpha > 0) || !(eps > 0)) throw DomainError("quench needs α > 0 and ε > 0");
}

double QuenchSetup::lambda() const { return std::sqrt(1.0 + beta() * beta()); }

FrequencyProfile QuenchSetup::profile() const {
  validate();
  return QuenchedLorentz{alpha * eps * eps, eps, 0.0};
}

double b2_scaled(const QuenchSetup& q, double s) {
  const double b2 = q.beta() * q.beta(), lam = q.lambda();
  return (s * s + 1.0) / (2.0 * (1.0 + b2)) * (std::cos(2.0 * lam * std::atan(s)) + 1.0 + 2.0 * b2);
}

double b2_adiabatic(double s) { return 1.0 + s * s; }

double delta_b2(const QuenchSetup& q, double s) {
  const double sn = std::sin(q.lambda() * std::atan(s));
  return (s * s + 1.0) / (1.0 + q.beta() * q.beta()) * sn * sn;
}

KzTime kz_time(const QuenchSetup& q) {
  q.validate();
  const double a = q.alpha * q.eps * q.eps, eps = q.eps;
  // For ω = a/(t² + ε²): |ω̇|/ω² - 1.
  auto g = [a, eps](double t) {
    const double r = t * t + eps * eps;
    const double w = a / r, wd = 2.0 * a * t / (r * r);
    return wd / (w * w) - 1.0;
  };
  double lo = 0.0, hi = std::max(1.0, eps);
  int grow = 0;
  while (g(hi) < 0) {
    lo = hi;
    hi *= 2.0;
    if (++grow > 200) throw RootNotBracketed("Landau criterion has no root");
  }
  for (int i = 0; i < 200 && hi - lo > 1e-15 * std::max(1.0, hi); ++i) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) < 0 ? lo : hi) = mid;
  }
  const double t_exact = 0.5 * (lo + hi);
  return {a / 2.0, q.beta(), t_exact, t_exact / eps};
}

double b2_at_critical(const QuenchSetup& q) {
  const double beta = q.beta();
  const double c = std::cos(q.lambda() * std::atan(beta));
  return beta * beta + c * c;
}

double late_time(const QuenchSetup& q, double s) {
  const double b2 = q.beta() * q.beta();
  return s * s * b2 - s * kPi * b2 / 2.0 + b2 + 1.0;
}

double late_time_lambda(const QuenchSetup& q, double s) {
  const double lam = q.lambda(), l2 = lam * lam;
  const double c = std::cos(kPi * lam), sn = std::sin(kPi * lam);
  return (s * s * (2.0 * l2 + c - 1.0) + 2.0 * s * lam * sn + (2.0 * l2 - 1.0) * (1.0 - c)) / (2.0 * l2);
}

double fermion_observable(const QuenchSetup& q, double s) { return b2_scaled(q, s); }

double subregion_entropy_proxy(const QuenchSetup& q, double s) { return 1.0 / std::sqrt(b2_scaled(q, s)); }

std::vector<double> predicted_zeros(const QuenchSetup& q) {
  std::vector<double> out;
  const double lam = q.lambda();
  for (int k = 1; k * kPi / lam < kPi / 2.0; ++k) out.push_back(std::tan(k * kPi / lam));
  return out;
}

int predicted_zero_count(const QuenchSetup& q) {
  return static_cast<int>(std::ceil(q.lambda() / 2.0)) - 1;
}

std::vector<double> locate_zeros(const QuenchSetup& q, int samples, double tol) {
  if (samples < 3) throw DomainError("zero search needs at least three samples");
  auto f = [&q](double u) { return delta_b2(q, std::tan(u)); };
  const double du = (kPi / 2.0) / samples;
  std::vector<double> out;
  // Interior grid points only: u in (0, π/2).
  for (int i = 2; i < samples - 1; ++i) {
    const double u0 = (i - 1) * du, u1 = i * du, u2 = (i + 1) * du;
    const double f1 = f(u1);
    if (!(f1 <= f(u0) && f1 < f(u2))) continue;
    double a = u0, b = u2;
    const double r = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - r * (b - a), d = a + r * (b - a);
    for (int it = 0; it < 200 && b - a > 1e-16; ++it) {
      if (f(c) < f(d)) {
        b = d;
      } else {
        a = c;
      }
      c = b - r * (b - a);
      d = a + r * (b - a);
    }
    const double u = 0.5 * (a + b);
    if (f(u) < tol) out.push_back(std::tan(u));
  }
  return out;
}

QuenchReport quench_report(const QuenchSetup& q, const std::vector<double>& s) {
  q.validate();
  QuenchReport r;
  r.s = s;
  for (double x : s) {
    if (!(x >= 0)) throw DomainError("quench grid needs s >= 0");
    r.b2.push_back(b2_scaled(q, x));
    r.b2_ad.push_back(b2_adiabatic(x));
    r.delta.push_back(delta_b2(q, x));
  }
  const double b2 = q.beta() * q.beta();
  r.s_c = q.beta();
  r.c2 = b2;
  r.c1 = -kPi * b2 / 2.0;
  r.c0 = b2 + 1.0;
  return r;
}

}  // namespace ermakov
