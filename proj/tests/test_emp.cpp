#include <doctest.h>

#include <cmath>
#include <complex>

#include "ermakov/emp.hpp"
#include "ermakov/error.hpp"
#include "ermakov/profiles.hpp"
#include "support.hpp"

using namespace ermakov;
using ermakov::testing::catalog_cases;
using ermakov::testing::linspace;

TEST_CASE("fundamental pair for constant frequency") {
  const auto pair = integrate_fundamental(Constant{1.0}, 0.0, {-10, 10}, 1e-12);
  for (double t : linspace(-10, 10, 57)) {
    const auto v = pair.at(t);
    CHECK(std::abs(v.x1 - std::cos(t)) < 1e-9);
    CHECK(std::abs(v.x2 - std::sin(t)) < 1e-9);
    CHECK(std::abs(v.x2dot - std::cos(t)) < 1e-9);
  }
  const auto free = integrate_fundamental(Constant{0.0}, 2.0, {2, 12});
  CHECK(free.at(7).x1 == doctest::Approx(1.0));
  CHECK(free.at(7).x2 == doctest::Approx(5.0));
}

TEST_CASE("fundamental pair matches the analytic Lorentz solutions") {
  for (double t0 : {-1.3, 0.0, 0.4}) {
    const auto pair = integrate_fundamental(LorentzBell{2, 0.7}, t0, {-10, 10}, 1e-12);
    for (double t : linspace(-10, 10, 41)) {
      const auto v = pair.at(t);
      const auto ref = lorentz_fundamental(2, 0.7, t0, t);
      CHECK(std::abs(v.x1 - ref.x1) < 1e-8);
      CHECK(std::abs(v.x1dot - ref.x1dot) < 1e-8);
      CHECK(std::abs(v.x2 - ref.x2) < 1e-8);
      CHECK(std::abs(v.x2dot - ref.x2dot) < 1e-8);
    }
  }
}

TEST_CASE("the Wronskian of the fundamental pair stays at 1") {
  const auto pair = integrate_fundamental(SechBump{1, 1}, 0.0, {-10, 10}, 1e-11);
  for (double t : linspace(-10, 10, 31)) CHECK(std::abs(pair.wronskian_at(t) - 1.0) < 1e-8);
}

TEST_CASE("integrate_fundamental rejects bad windows") {
  CHECK_THROWS_AS(integrate_fundamental(Constant{1}, 5.0, {0, 1}), DomainError);
  CHECK_THROWS_AS(integrate_fundamental(Constant{1}, 0.0, {-INFINITY, 1}), DomainError);
  CHECK_THROWS_AS(emp_from_fundamental(integrate_fundamental(Constant{1}, 0, {0, 1}), 0.0),
                  DomainError);
}

TEST_CASE("numeric EMP agrees with every closed form") {
  for (const auto& cc : catalog_cases()) {
    CAPTURE(cc.label);
    const auto exact = closed_form_emp(cc.profile, cc.ic);
    const auto num = numeric_emp(cc.profile, cc.ic, cc.window, 1e-12);
    CHECK(num.c() == doctest::Approx(exact.c()).epsilon(1e-12));
    double worst = 0;
    for (double t : linspace(cc.window.lo, cc.window.hi, 301)) {
      worst = std::max(worst, std::abs(num.b2(t) - exact.b2(t)) / exact.b2(t));
    }
    CHECK(worst < 1e-8);
  }
}

TEST_CASE("numeric τ agrees with closed-form τ") {
  for (const auto& cc : catalog_cases()) {
    if (cc.ic.at_minus_infinity()) continue;
    CAPTURE(cc.label);
    const auto exact = closed_form_emp(cc.profile, cc.ic);
    const auto num = numeric_emp(cc.profile, cc.ic, cc.window, 1e-12);
    for (double t : linspace(cc.window.lo, cc.window.hi, 13)) {
      CHECK(std::abs(num.tau(t) - exact.tau(t)) < 1e-7);
    }
  }
}

TEST_CASE("numeric EMP is insensitive to the ODE tolerance") {
  const FrequencyProfile p(Custom{[](double t) { return 1.0 + 0.5 * std::sin(t) + 0.1 * t * t; }});
  const auto coarse = numeric_emp(p, {0.0}, {0, 10}, 1e-10);
  const auto fine = numeric_emp(p, {0.0}, {0, 10}, 1e-12);
  for (double t : linspace(0, 10, 51)) CHECK(std::abs(coarse.b(t) - fine.b(t)) < 1e-7);
}

TEST_CASE("x/b is a harmonic oscillation in τ") {
  // y(τ) = x(t)/b(t) solves y'' = -c²y; with eigenstate data, x1/b = cos(cτ)
  // and x2/b = sin(cτ)/c.
  const FrequencyProfile p(LorentzBell{1.5, 0.8});
  const double t0 = -0.3;
  const auto pair = integrate_fundamental(p, t0, {t0, 8}, 1e-12);
  const auto sol = emp_from_fundamental(pair, p.omega(t0), 1e-12);
  const double c = sol.c();
  for (double t : linspace(t0, 8, 37)) {
    const auto v = pair.at(t);
    const double tau = sol.tau(t);
    CHECK(std::abs(v.x1 / sol.b(t) - std::cos(c * tau)) < 1e-5);
    CHECK(std::abs(v.x2 / sol.b(t) - std::sin(c * tau) / c) < 1e-5);
  }
}

TEST_CASE("complex B: initial values and the identity ḂB̄ - B̄̇B = i") {
  const auto sol = closed_form_emp(SechBump{1, 1}, {0.0});
  const double w0 = sol.omega0();
  const auto b0 = complex_B(sol, 0.0);
  CHECK(std::abs(b0.value - std::complex<double>(0, 1 / std::sqrt(2 * w0))) < 1e-14);
  CHECK(std::abs(b0.derivative - std::complex<double>(-std::sqrt(w0 / 2), 0)) < 1e-14);
  for (const auto& cc : catalog_cases()) {
    CAPTURE(cc.label);
    const auto s = closed_form_emp(cc.profile, cc.ic);
    for (double t : linspace(cc.window.lo, cc.window.hi, 17)) {
      const auto bb = complex_B(s, t);
      CHECK(std::abs(b_wronskian(bb) - std::complex<double>(0, 1)) < 1e-12);
      CHECK(std::norm(bb.value) == doctest::Approx(s.b2(t) / (2 * s.c())));
    }
  }
}

TEST_CASE("numeric EMP from the far past reproduces the asymptotic closed form") {
  const auto exact = closed_form_emp(SechBump{1, 1}, InitialCondition::minus_infinity());
  const auto num = numeric_emp(SechBump{1, 1}, InitialCondition::minus_infinity(), {-10, 10}, 1e-12);
  for (double t : linspace(-10, 10, 41)) CHECK(std::abs(num.b2(t) - exact.b2(t)) < 1e-8);
  // τ differences are origin independent.
  CHECK(std::abs((num.tau(5) - num.tau(-3)) - (exact.tau(5) - exact.tau(-3))) < 1e-8);
}

TEST_CASE("evaluation outside a numeric window throws") {
  const auto num = numeric_emp(Constant{1}, {0.0}, {0, 1});
  CHECK_THROWS_AS(num.b(2.0), DomainError);
}
