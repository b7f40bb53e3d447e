#include "ermakov/measures.hpp"

#include <cmath>

#include "ermakov/error.hpp"
#include "ermakov/quadrature.hpp"

namespace ermakov {
namespace {

constexpr double kTiny = 1e-300;

double over_density(const BasisState& s, double t, Space which, double tol, double widen,
                    const std::function<double(double, double)>& g) {
  const double r = widen * truncation_radius(s, t, which);
  return quad::integral([&](double q) { return g(q, density(s, q, t, which)); }, -r, r, tol);
}

}  // namespace

EntropyIncrease entropy_increases(const EmpSolution& sol, double t) {
  const auto [b, bdot] = sol.at(t);
  const double w0 = sol.omega0();
  const double q = b * b * bdot * bdot / (w0 * w0);
  return {std::log(b), 0.5 * std::log((1.0 + q) / (b * b)), 0.5 * std::log1p(q)};
}

RenyiIncrease renyi_increase(const EmpSolution& sol, double alpha, double t) {
  if (!(alpha > 0) || alpha == 1.0) throw DomainError("Renyi order must be positive and not 1");
  const auto d = entropy_increases(sol, t);
  return {d.x, d.p};
}

FisherInfo fisher(const EmpSolution& sol, int n, double t) {
  if (n < 0) throw DomainError("quantum number n must be non-negative");
  const auto [b, bdot] = sol.at(t);
  const double w0 = sol.omega0();
  const double m = 2.0 * n + 1.0, b2 = b * b;
  return {2.0 * w0 * m / b2, 2.0 * b2 * w0 * m / (w0 * w0 + b2 * bdot * bdot)};
}

Entropies entropy_oracle(const BasisState& s, double t, double tol) {
  auto g = [](double, double r) { return r < kTiny ? 0.0 : -r * std::log(r); };
  return {over_density(s, t, Space::Position, tol, 1.0, g),
          over_density(s, t, Space::Momentum, tol, 1.0, g)};
}

Entropies renyi_oracle(const BasisState& s, double alpha, double t, double tol) {
  if (!(alpha > 0) || alpha == 1.0) throw DomainError("Renyi order must be positive and not 1");
  auto g = [alpha](double, double r) { return std::pow(r, alpha); };
  const double widen = alpha < 1.0 ? 1.0 / std::sqrt(alpha) : 1.0;
  const double ix = over_density(s, t, Space::Position, tol, widen, g);
  const double ip = over_density(s, t, Space::Momentum, tol, widen, g);
  return {std::log(ix) / (1.0 - alpha), std::log(ip) / (1.0 - alpha)};
}

FisherInfo fisher_oracle(const BasisState& s, double t, double tol) {
  auto run = [&](Space which) {
    const double r = truncation_radius(s, t, which);
    auto f = [&](double q) {
      const double rho = density(s, q, t, which);
      if (rho < kTiny) return 0.0;
      const double d = density_derivative(s, q, t, which);
      return d * d / rho;
    };
    return quad::integral(f, -r, r, tol);
  };
  return {run(Space::Position), run(Space::Momentum)};
}

Complexity complexity(const BasisState& s, double t) {
  const auto f = fisher(s.sol(), s.n(), t);
  const auto e = entropy_oracle(s, t);
  return {f.x * std::exp(2.0 * e.x), f.p * std::exp(2.0 * e.p)};
}

Margins inequality_margins(const BasisState& s, double t) {
  const auto f = fisher(s.sol(), s.n(), t);
  const auto m = moments(s, t);
  const double dsj = entropy_increases(s.sol(), t).joint;
  return {
      4.0 * m.p2 - f.x,
      4.0 * m.x2 - f.p,
      f.x - 1.0 / m.x2,
      f.p - 1.0 / m.p2,
      m.uncertainty - std::exp(dsj) / (2.0 * (2.0 * s.n() + 1.0)),
  };
}

InfoRecord info_record(const BasisState& s, double t, std::span<const double> renyi_alpha) {
  const auto& sol = s.sol();
  InfoRecord r{t, entropy_increases(sol, t), {}, fisher(sol, s.n(), t), complexity(s, t),
               inequality_margins(s, t)};
  for (double a : renyi_alpha) r.renyi.push_back(renyi_increase(sol, a, t));
  return r;
}

}  // namespace ermakov
