#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ermakov/error.hpp"
#include "ermakov/measures.hpp"
#include "ermakov/profiles.hpp"
#include "support.hpp"

using namespace ermakov;
using ermakov::testing::catalog_cases;
using ermakov::testing::linspace;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kE = std::numbers::e;
}  // namespace

TEST_CASE("entropy increases: initial point and the abrupt drop") {
  const auto sech = closed_form_emp(SechBump{1, 1}, {0.0});
  const auto d0 = entropy_increases(sech, 0.0);
  CHECK(d0.x == 0.0);
  CHECK(d0.p == 0.0);
  CHECK(d0.joint == 0.0);
  const auto drop = closed_form_emp(AbruptDrop{1.0}, {0.0});
  for (double t : {0.5, 1.0, 4.0}) {
    const auto d = entropy_increases(drop, t);
    CHECK(d.x == doctest::Approx(0.5 * std::log(1 + t * t)));
    CHECK(std::abs(d.p) < 1e-15);
    CHECK(d.joint == doctest::Approx(0.5 * std::log(1 + t * t)));
  }
}

TEST_CASE("entropy returns to its initial value after a bump prepared in the far past") {
  for (double eps : {1.0, 2.0}) {
    const auto s = closed_form_emp(SechBump{1, eps}, InitialCondition::minus_infinity());
    CHECK(std::abs(entropy_increases(s, 40 * eps).x) < 1e-12);
    CHECK(std::abs(entropy_increases(s, 40 * eps).x - entropy_increases(s, -40 * eps).x) < 1e-12);
    CHECK(entropy_increases(s, 0.0).x < -0.1);
  }
}

TEST_CASE("Rényi increases are α independent") {
  const auto s = closed_form_emp(LorentzBell{1, 1}, {0.0});
  CHECK(std::abs(renyi_increase(s, 2.0, 0.0).x) < 1e-15);
  for (double t : linspace(0, 10, 11)) {
    const auto ref = renyi_increase(s, 0.5, t);
    for (double a : {2.0, 3.0}) {
      CHECK(std::abs(renyi_increase(s, a, t).x - ref.x) < 1e-12);
      CHECK(std::abs(renyi_increase(s, a, t).p - ref.p) < 1e-12);
    }
  }
  CHECK_THROWS_AS(renyi_increase(s, 1.0, 0.0), DomainError);
  CHECK_THROWS_AS(renyi_increase(s, -2.0, 0.0), DomainError);
}

TEST_CASE("Fisher closed forms") {
  const auto s = closed_form_emp(SechBump{1, 1}, {0.0});
  const double w0 = s.omega0();
  for (int n = 0; n <= 3; ++n) {
    const auto f = fisher(s, n, 0.0);
    CHECK(f.x == doctest::Approx(2 * w0 * (2 * n + 1)));
    CHECK(f.p == doctest::Approx(2 * (2 * n + 1) / w0));
    CHECK(f.x * f.p == doctest::Approx(4.0 * (2 * n + 1) * (2 * n + 1)));
  }
  const auto drop = closed_form_emp(AbruptDrop{1.0}, {0.0});
  CHECK(fisher(drop, 0, 2.0).x == doctest::Approx(2.0 / 5.0));
}

TEST_CASE("entropy-increase law against the quadrature oracle") {
  const BasisState g(0, closed_form_emp(Constant{1.0}, {0.0}));
  CHECK(entropy_oracle(g, 0.0).x == doctest::Approx(0.5 * (1 + std::log(kPi))).epsilon(1e-9));
  for (const auto* label : {"sech", "drop"}) {
    CAPTURE(label);
    const auto sol = std::string(label) == "sech" ? closed_form_emp(SechBump{1, 1}, {0.0})
                                                  : closed_form_emp(AbruptDrop{1.0}, {0.0});
    for (int n = 0; n <= 4; ++n) {
      const BasisState s(n, sol);
      const auto e0 = entropy_oracle(s, 0.0);
      for (double t : {0.7, 2.0, 5.5}) {
        const auto e = entropy_oracle(s, t);
        const auto d = entropy_increases(sol, t);
        CHECK(std::abs(e.x - e0.x - d.x) < 1e-6);
        CHECK(std::abs(e.p - e0.p - d.p) < 1e-6);
      }
    }
  }
}

TEST_CASE("Rényi oracle reproduces the α-independent increase") {
  const auto sol = closed_form_emp(SechBump{1, 1}, {0.0});
  for (int n : {0, 1}) {
    const BasisState s(n, sol);
    for (double a : {0.5, 2.0, 3.0}) {
      const auto r0 = renyi_oracle(s, a, 0.0);
      for (double t : {1.0, 4.0}) {
        const auto r = renyi_oracle(s, a, t);
        const auto d = renyi_increase(sol, a, t);
        CHECK(std::abs(r.x - r0.x - d.x) < 1e-6);
        CHECK(std::abs(r.p - r0.p - d.p) < 1e-6);
      }
    }
  }
}

TEST_CASE("Fisher oracle matches the closed forms") {
  for (const auto& cc : catalog_cases()) {
    CAPTURE(cc.label);
    const auto sol = closed_form_emp(cc.profile, cc.ic);
    for (int n = 0; n <= 3; ++n) {
      const BasisState s(n, sol);
      for (double t : linspace(cc.window.lo, cc.window.hi, 3)) {
        const auto q = fisher_oracle(s, t);
        const auto f = fisher(sol, n, t);
        CHECK(std::abs(q.x - f.x) < 1e-5 * std::max(1.0, f.x));
        CHECK(std::abs(q.p - f.p) < 1e-5 * std::max(1.0, f.p));
        CHECK(f.x * f.p <= 4.0 * (2 * n + 1) * (2 * n + 1) + 1e-10);
      }
    }
  }
}

TEST_CASE("entropy increase as a ratio of Fisher informations") {
  for (const auto& cc : catalog_cases()) {
    const auto sol = closed_form_emp(cc.profile, cc.ic);
    const double start = cc.ic.at_minus_infinity() ? -40.0 : cc.ic.t0;
    const auto f0 = fisher(sol, 2, start);
    for (double t : linspace(cc.window.lo, cc.window.hi, 31)) {
      const auto f = fisher(sol, 2, t);
      const auto d = entropy_increases(sol, t);
      CHECK(std::abs(d.x - 0.5 * std::log(f0.x / f.x)) < 1e-12);
      CHECK(std::abs(d.p - 0.5 * std::log(f0.p / f.p)) < 1e-10);
    }
  }
}

TEST_CASE("Fisher-Shannon complexities") {
  const BasisState g(0, closed_form_emp(Constant{1.0}, {0.0}));
  const auto c0 = complexity(g, 0.0);
  CHECK(c0.x == doctest::Approx(2 * kPi * kE).epsilon(1e-8));
  CHECK(c0.p == doctest::Approx(c0.x).epsilon(1e-8));
  const auto sol = closed_form_emp(QuenchedSechBump{1, 1}, {-1.0});
  for (int n : {0, 3}) {
    const BasisState s(n, sol);
    const auto ref = complexity(s, -1.0);
    for (double t : linspace(-1, 8, 10)) {
      const auto c = complexity(s, t);
      CHECK(std::abs(c.x / ref.x - 1) < 1e-5);
      CHECK(std::abs(c.p / ref.p - 1) < 1e-5);
    }
  }
}

TEST_CASE("inequality margins") {
  const auto unit = closed_form_emp(Constant{1.0}, {0.0});
  const auto m0 = inequality_margins(BasisState(0, unit), 0.0);
  CHECK(std::abs(m0.stam_x) < 1e-14);
  CHECK(std::abs(m0.stam_p) < 1e-14);
  CHECK(std::abs(m0.cramer_rao_x) < 1e-14);
  CHECK(std::abs(m0.cramer_rao_p) < 1e-14);
  CHECK(std::abs(m0.joint) < 1e-14);
  const auto m2 = inequality_margins(BasisState(2, unit), 0.0);
  CHECK(std::abs(m2.stam_x) < 1e-13);
  CHECK(m2.cramer_rao_x == doctest::Approx(9.6));
  for (const auto& cc : catalog_cases()) {
    CAPTURE(cc.label);
    const auto sol = closed_form_emp(cc.profile, cc.ic);
    for (int n = 0; n <= 4; ++n) {
      for (double t : linspace(cc.window.lo, cc.window.hi, 101)) {
        const auto m = inequality_margins(BasisState(n, sol), t);
        CHECK(m.stam_x >= -1e-10);
        CHECK(m.stam_p >= -1e-10);
        CHECK(m.cramer_rao_x >= -1e-10);
        CHECK(m.cramer_rao_p >= -1e-10);
        CHECK(m.joint >= -1e-10);
      }
    }
  }
}

TEST_CASE("info record bundles the per-time quantities") {
  const auto sol = closed_form_emp(SechBump{1, 1}, {0.0});
  const BasisState s(1, sol);
  const std::vector<double> orders{0.5, 2.0};
  const auto r = info_record(s, 2.0, orders);
  CHECK(r.dS.joint == doctest::Approx(r.dS.x + r.dS.p));
  REQUIRE(r.renyi.size() == 2);
  CHECK(r.renyi[1].x == doctest::Approx(r.dS.x));
  CHECK(r.fisher.x > 0);
  CHECK(r.fisher.p > 0);
  CHECK(r.cfs.x > 0);
  CHECK(r.cfs.x == doctest::Approx(complexity(s, 0.0).x).epsilon(1e-6));
  CHECK(r.margins.joint >= -1e-10);
  CHECK_THROWS_AS(info_record(s, 1.0, std::vector<double>{1.0}), DomainError);
}
