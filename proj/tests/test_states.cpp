#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "ermakov/error.hpp"
#include "ermakov/profiles.hpp"
#include "ermakov/quadrature.hpp"
#include "ermakov/states.hpp"
#include "support.hpp"

using namespace ermakov;
using ermakov::testing::catalog_cases;
using ermakov::testing::linspace;
using cd = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;

double integrate_density(const BasisState& s, double t, Space which,
                         const std::function<double(double, double)>& g) {
  const double r = truncation_radius(s, t, which);
  return quad::integral([&](double q) { return g(q, density(s, q, t, which)); }, -r, r, 1e-12);
}

cd overlap(const BasisState& a, const BasisState& b, double t) {
  const double r = std::max(truncation_radius(a, t, Space::Position),
                            truncation_radius(b, t, Space::Position));
  auto re = [&](double x) { return (std::conj(psi(a, x, t)) * psi(b, x, t)).real(); };
  auto im = [&](double x) { return (std::conj(psi(a, x, t)) * psi(b, x, t)).imag(); };
  return {quad::integral(re, -r, r, 1e-12), quad::integral(im, -r, r, 1e-12)};
}

// φ(p) = (2π)^{-1/2} ∫ψ(x)e^{-ipx}dx by direct quadrature.
cd fourier(const BasisState& s, double p, double t) {
  const double r = truncation_radius(s, t, Space::Position);
  auto f = [&](double x, bool imag) {
    const cd v = psi(s, x, t) * std::polar(1.0, -p * x);
    return imag ? v.imag() : v.real();
  };
  const double re = quad::integral([&](double x) { return f(x, false); }, -r, r, 1e-12);
  const double im = quad::integral([&](double x) { return f(x, true); }, -r, r, 1e-12);
  return cd(re, im) / std::sqrt(2 * kPi);
}

}  // namespace

TEST_CASE("hermite polynomials") {
  CHECK(hermite(0, 3.7) == 1.0);
  CHECK(hermite(1, 1.5) == 3.0);
  CHECK(hermite(3, 1.0) == -4.0);
  CHECK(hermite(4, 0.5) == doctest::Approx(16 * 0.0625 - 48 * 0.25 + 12));
  CHECK_THROWS_AS(hermite(200, 1e3), Overflow);
  CHECK_THROWS_AS(hermite(-1, 0.0), DomainError);
}

TEST_CASE("hermite functions agree with the polynomial form and stay finite") {
  for (int n = 0; n <= 20; ++n) {
    double fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    const double norm = 1.0 / std::sqrt(std::pow(2.0, n) * fact * std::sqrt(kPi));
    for (double y : linspace(-6, 6, 25)) {
      const double expect = norm * hermite(n, y) * std::exp(-0.5 * y * y);
      CHECK(std::abs(hermite_function(n, y) - expect) < 1e-12);
    }
  }
  CHECK(std::isfinite(hermite_function(500, 10.0)));
  const double big = quad::integral([](double y) { return std::pow(hermite_function(60, y), 2); },
                                    -20, 20, 1e-13);
  CHECK(big == doctest::Approx(1.0).epsilon(1e-10));
  const double h = 1e-5;
  for (int n : {0, 1, 4, 9}) {
    for (double y : {-2.1, 0.3, 1.7}) {
      const double fd = (hermite_function(n, y + h) - hermite_function(n, y - h)) / (2 * h);
      CHECK(std::abs(hermite_function_derivative(n, y) - fd) < 1e-8);
    }
  }
}

TEST_CASE("ground-state peak and eigenstate moments") {
  const BasisState g(0, closed_form_emp(Constant{1.0}, {0.0}));
  CHECK(std::abs(psi(g, 0, 0)) == doctest::Approx(std::pow(1 / kPi, 0.25)));
  CHECK(density(g, 0, 0, Space::Position) == doctest::Approx(std::sqrt(1 / kPi)));
  const auto m = moments(g, 3.0);
  CHECK(m.x2 == doctest::Approx(0.5));
  CHECK(m.p2 == doctest::Approx(0.5));
  CHECK(m.uncertainty == doctest::Approx(0.5));
  CHECK(m.energy == doctest::Approx(0.5));
  const BasisState drop(0, closed_form_emp(AbruptDrop{1.0}, {0.0}));
  for (double t : {0.5, 2.0, 7.0}) CHECK(moments(drop, t).x2 == doctest::Approx((1 + t * t) / 2));
}

TEST_CASE("normalisation in position and momentum across the catalogue") {
  for (const auto& cc : catalog_cases()) {
    CAPTURE(cc.label);
    const auto sol = closed_form_emp(cc.profile, cc.ic);
    for (int n = 0; n <= 5; ++n) {
      const BasisState s(n, sol);
      for (double t : linspace(cc.window.lo, cc.window.hi, 4)) {
        for (Space w : {Space::Position, Space::Momentum}) {
          const double mass = integrate_density(s, t, w, [](double, double r) { return r; });
          CHECK(std::abs(mass - 1.0) < 1e-8);
        }
      }
    }
  }
}

TEST_CASE("basis states stay orthonormal") {
  const auto sol = closed_form_emp(LorentzBell{1, 1}, {0.0});
  for (double t : {0.0, 1.3, 6.0}) {
    for (int m = 0; m <= 4; ++m) {
      for (int n = m; n <= 4; ++n) {
        const cd o = overlap(BasisState(m, sol), BasisState(n, sol), t);
        CHECK(std::abs(o - cd(m == n ? 1.0 : 0.0, 0.0)) < 1e-8);
      }
    }
  }
}

TEST_CASE("ψ_n solves the time-dependent Schrödinger equation") {
  using namespace std::complex_literals;
  const auto sol = closed_form_emp(SechBump{1, 1}, {0.0});
  const double ht = 1e-4, hx = 1e-3;
  for (int n : {0, 1, 3}) {
    const BasisState s(n, sol);
    double worst = 0;
    for (double t : {0.4, 1.7, 3.5}) {
      const double w2 = sol.profile().omega2(t);
      for (double x : linspace(-3, 3, 13)) {
        const cd dt = (psi(s, x, t + ht) - psi(s, x, t - ht)) / (2 * ht);
        const cd v = psi(s, x, t);
        const cd dxx = (psi(s, x + hx, t) - 2.0 * v + psi(s, x - hx, t)) / (hx * hx);
        worst = std::max(worst, std::abs(1i * dt - (-0.5 * dxx + 0.5 * w2 * x * x * v)));
      }
    }
    CHECK(worst < 1e-4);
  }
}

TEST_CASE("analytic ∂ψ/∂x matches finite differences") {
  const BasisState s(2, closed_form_emp(LorentzBell{1, 1}, {0.0}));
  for (double x : linspace(-3, 3, 9)) {
    const double h = 1e-5;
    const cd fd = (psi(s, x + h, 2.0) - psi(s, x - h, 2.0)) / (2 * h);
    CHECK(std::abs(psi_dx(s, x, 2.0) - fd) < 1e-8);
  }
}

TEST_CASE("momentum density equals |Fourier transform of ψ|²") {
  const auto sol = closed_form_emp(SechBump{1, 1}, {0.0});
  for (int n = 0; n <= 3; ++n) {
    const BasisState s(n, sol);
    for (double t : {0.0, 0.9, 2.5}) {
      for (double p : {-1.8, -0.4, 0.0, 0.7, 2.2}) {
        CHECK(std::abs(std::norm(fourier(s, p, t)) - density(s, p, t, Space::Momentum)) < 1e-9);
      }
    }
  }
}

TEST_CASE("abrupt drop: momentum density frozen after the drop") {
  const BasisState s(1, closed_form_emp(AbruptDrop{1.0}, {0.0}));
  for (double p : linspace(-3, 3, 13)) {
    const double ref = density(s, p, 0.5, Space::Momentum);
    for (double t : {1.0, 4.0, 9.0}) CHECK(density(s, p, t, Space::Momentum) == doctest::Approx(ref).epsilon(1e-12));
  }
}

TEST_CASE("closed-form moments agree with quadrature, Heisenberg floor holds") {
  for (const auto& cc : catalog_cases()) {
    CAPTURE(cc.label);
    const auto sol = closed_form_emp(cc.profile, cc.ic);
    for (int n = 0; n <= 3; ++n) {
      const BasisState s(n, sol);
      for (double t : linspace(cc.window.lo, cc.window.hi, 5)) {
        const auto m = moments(s, t);
        const double x2 = integrate_density(s, t, Space::Position, [](double q, double r) { return q * q * r; });
        const double p2 = integrate_density(s, t, Space::Momentum, [](double q, double r) { return q * q * r; });
        const double r = truncation_radius(s, t, Space::Position);
        const double kin = quad::integral([&](double x) { return std::norm(psi_dx(s, x, t)); }, -r, r, 1e-12);
        CHECK(std::abs(m.x2 - x2) < 1e-6 * std::max(1.0, m.x2));
        CHECK(std::abs(m.p2 - p2) < 1e-6 * std::max(1.0, m.p2));
        CHECK(std::abs(m.p2 - kin) < 1e-6 * std::max(1.0, m.p2));
        CHECK(std::abs(m.uncertainty - std::sqrt(x2 * p2)) < 1e-6 * m.uncertainty);
        CHECK(m.uncertainty >= n + 0.5 - 1e-12);
      }
    }
  }
}

TEST_CASE("Lewis-Riesenfeld expectation is c(n + 1/2)") {
  CHECK(lr_expectation(BasisState(0, closed_form_emp(Constant{1}, {0.0})), 2.0) == doctest::Approx(0.5));
  CHECK(lr_expectation(BasisState(3, closed_form_emp(Constant{2}, {0.0})), 1.0) == doctest::Approx(7.0));
  const auto sol = closed_form_emp(QuenchedSechBump{1, 1}, {-1.0});
  for (int n : {0, 2}) {
    const BasisState s(n, sol);
    for (double t : linspace(-1, 10, 23)) {
      CHECK(std::abs(lr_expectation(s, t) - sol.c() * (n + 0.5)) < 1e-6);
    }
  }
}

TEST_CASE("driven states: translated densities and the driven Schrödinger equation") {
  using namespace std::complex_literals;
  const FrequencyProfile unit(Constant{1.0});
  const BasisState s(1, closed_form_emp(unit, {0.0}));

  const auto none = integrate_drive(unit, [](double) { return 0.0; }, 0.0, 0.0, 0.0, {0, 5});
  for (double x : {-1.0, 0.2, 2.0}) CHECK(driven_density(s, none, x, 3.0) == density(s, x, 3.0, Space::Position));

  const auto push = integrate_drive(unit, [](double) { return 1.0; }, 0.0, 0.0, 0.0, {0, 10}, 1e-12);
  const BasisState g(0, closed_form_emp(unit, {0.0}));
  for (double t : linspace(0, 10, 21)) {
    CHECK(std::abs(push.e(t) - (1 - std::cos(t))) < 1e-9);
    // Ground-state density peaks at x = e(t).
    const double e = push.e(t), h = 1e-3;
    CHECK(driven_density(g, push, e, t) > driven_density(g, push, e + h, t));
    CHECK(driven_density(g, push, e, t) > driven_density(g, push, e - h, t));
  }

  const FrequencyProfile bell(LorentzBell{1, 1});
  auto force = [](double t) { return 0.5 * std::sin(2 * t); };
  const auto drive = integrate_drive(bell, force, 0.0, 0.3, -0.2, {-1, 6}, 1e-12);
  const BasisState b(2, closed_form_emp(bell, {0.0}));
  const double ht = 1e-4, hx = 1e-3;
  double worst = 0;
  for (double t : {0.5, 2.0, 4.5}) {
    const double w2 = bell.omega2(t), f = force(t);
    for (double x : linspace(-3, 3, 9)) {
      const cd v = driven_psi(b, drive, x, t);
      const cd dt = (driven_psi(b, drive, x, t + ht) - driven_psi(b, drive, x, t - ht)) / (2 * ht);
      const cd dxx = (driven_psi(b, drive, x + hx, t) - 2.0 * v + driven_psi(b, drive, x - hx, t)) / (hx * hx);
      worst = std::max(worst, std::abs(1i * dt - (-0.5 * dxx + 0.5 * w2 * x * x * v - f * x * v)));
    }
  }
  CHECK(worst < 1e-4);
}
