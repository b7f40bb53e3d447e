#include "ermakov/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>
#include <vector>

#include "ermakov/error.hpp"

namespace ermakov::quad {
namespace {

// Kronrod 15-point nodes (non-negative half) and weights; Gauss 7-point weights
// on the odd-indexed Kronrod nodes.
constexpr double kNodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kKronrod[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kGauss[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double lo, hi, value, error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gauss_kronrod(const std::function<double(double)>& f, double lo, double hi, int& evals) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = f(center);
  double kronrod = fc * kKronrod[7];
  double gauss = fc * kGauss[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kNodes[j];
    const double sum = f(center - dx) + f(center + dx);
    kronrod += kKronrod[j] * sum;
    if (j % 2 == 1) gauss += kGauss[j / 2] * sum;
  }
  evals += 15;
  kronrod *= half;
  gauss *= half;
  if (!std::isfinite(kronrod)) {
    throw QuadratureFailure("non-finite integrand on [" + std::to_string(lo) + ", " +
                            std::to_string(hi) + "]");
  }
  return Panel{lo, hi, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace

Result integrate(const std::function<double(double)>& f, double lo, double hi,
                 const Options& opts, std::span<const double> breakpoints) {
  if (lo == hi) return {};
  if (lo > hi) {
    Result r = integrate(f, hi, lo, opts, breakpoints);
    r.value = -r.value;
    return r;
  }

  std::vector<double> edges{lo};
  for (double b : breakpoints)
    if (b > lo && b < hi) edges.push_back(b);
  edges.push_back(hi);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  Result res;
  std::priority_queue<Panel> heap;
  double total = 0.0, total_err = 0.0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    Panel p = gauss_kronrod(f, edges[i], edges[i + 1], res.evaluations);
    total += p.value;
    total_err += p.error;
    heap.push(p);
  }

  while (total_err > opts.abs_tol) {
    if (static_cast<int>(heap.size()) >= opts.max_panels) {
      throw QuadratureFailure("quadrature did not reach tolerance " +
                              std::to_string(opts.abs_tol) + " (estimate " +
                              std::to_string(total_err) + ")");
    }
    Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (mid <= worst.lo || mid >= worst.hi) {
      throw QuadratureFailure("panel width underflow near " + std::to_string(mid));
    }
    Panel left = gauss_kronrod(f, worst.lo, mid, res.evaluations);
    Panel right = gauss_kronrod(f, mid, worst.hi, res.evaluations);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }

  // Re-sum from the panels to shed the drift of the running update.
  res.panels = static_cast<int>(heap.size());
  double sum = 0.0, err = 0.0;
  while (!heap.empty()) {
    sum += heap.top().value;
    err += heap.top().error;
    heap.pop();
  }
  res.value = sum;
  res.error = err;
  return res;
}

double integral_2d(const std::function<double(double, double)>& f, double xlo, double xhi,
                   double ylo, double yhi, double abs_tol) {
  const double inner_tol = abs_tol / (4.0 * std::max(1.0, xhi - xlo));
  auto inner = [&](double x) {
    return integral([&](double y) { return f(x, y); }, ylo, yhi, inner_tol);
  };
  return integral(inner, xlo, xhi, abs_tol);
}

}  // namespace ermakov::quad
