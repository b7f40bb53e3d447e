#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "ermakov/emp.hpp"
#include "ermakov/profiles.hpp"

namespace ermakov::testing {

inline std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = a + (b - a) * i / (n - 1);
  if (n > 0) out.front() = a;
  if (n > 1) out.back() = b;
  return out;
}

struct CatalogCase {
  std::string label;
  FrequencyProfile profile;
  InitialCondition ic;
  Window window;
};

// One entry per catalogued closed form, each on a window of ten
// characteristic times.
inline std::vector<CatalogCase> catalog_cases() {
  const double r3 = std::sqrt(3.0);
  const double inf = INFINITY;
  return {
      {"constant", Constant{1.5}, {0.0}, {0.0, 10.0 / 1.5}},
      {"sech a=0 (t0=0)", SechBump{0.0, 1.0}, {0.0}, {0.0, 10.0}},
      {"sech a=1 eps=1 (t0=0)", SechBump{1.0, 1.0}, {0.0}, {0.0, 10.0}},
      {"sech a=0.5 eps=2 (t0=0)", SechBump{0.5, 2.0}, {0.0}, {-5.0, 15.0}},
      {"sech a=1 eps=1 (t0=-inf)", SechBump{1.0, 1.0}, {-inf}, {-10.0, 10.0}},
      {"quenched sech a=1 eps=1", QuenchedSechBump{1.0, 1.0}, {-1.0}, {-1.0, 10.0}},
      {"quenched sech a=0 eps=1", QuenchedSechBump{0.0, 1.0}, {-1.0}, {-1.0, 10.0}},
      {"lorentz a=1 eps=1 (t0=0)", LorentzBell{1.0, 1.0}, {0.0}, {0.0, 10.0}},
      {"lorentz a=sqrt3 eps=1 (t0=0)", LorentzBell{r3, 1.0}, {0.0}, {-5.0, 10.0}},
      {"lorentz a=1 eps=1 (t0=0.7)", LorentzBell{1.0, 1.0}, {0.7}, {0.7, 10.7}},
      {"lorentz a=2 eps=1.3 (t0=-1.1)", LorentzBell{2.0, 1.3}, {-1.1}, {-3.0, 12.0}},
      {"quenched lorentz a=1 eps=1", QuenchedLorentz{1.0, 1.0, 0.0}, {-1.0}, {-1.0, 10.0}},
      {"windowed lorentz a=sqrt3 eps=1", WindowedLorentz{r3, 1.0, -1.0, 1.0}, {-1.0}, {-1.0, 10.0}},
      {"abrupt drop alpha=1", AbruptDrop{1.0}, {-1.0}, {-1.0, 10.0}},
      {"abrupt jump 2 -> 0.5", AbruptJump{2.0, 0.5}, {0.0}, {-1.0, 20.0}},
      {"abrupt jump 1 -> 0", AbruptJump{1.0, 0.0}, {0.0}, {-1.0, 10.0}},
  };
}

}  // namespace ermakov::testing
