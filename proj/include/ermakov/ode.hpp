#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "ermakov/error.hpp"

namespace ermakov::ode {

template <std::size_t N>
using State = std::array<double, N>;

struct Options {
  double rtol = 1e-10;
  double atol = 1e-10;
  double max_step = std::numeric_limits<double>::infinity();
  int max_steps = 2'000'000;
};

/// Accepted steps of an integration, stored in increasing time order.
/// Evaluation between nodes is cubic Hermite on every state component, using
/// the right-hand side at both ends as derivative data.
template <std::size_t N>
class DenseTrajectory {
 public:
  struct Sample {
    State<N> y;
    State<N> dy;
  };

  DenseTrajectory() = default;

  double t_min() const { return t_.front(); }
  double t_max() const { return t_.back(); }
  bool empty() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }
  std::span<const double> times() const { return t_; }
  const State<N>& node(std::size_t i) const { return y_[i]; }

  Sample sample(double t) const {
    if (!(t >= t_.front() && t <= t_.back())) {
      throw DomainError("time " + std::to_string(t) + " outside integrated window [" +
                        std::to_string(t_.front()) + ", " + std::to_string(t_.back()) + "]");
    }
    auto it = std::upper_bound(t_.begin(), t_.end(), t);
    std::size_t i = it == t_.begin() ? 0 : static_cast<std::size_t>(it - t_.begin()) - 1;
    if (i + 1 >= t_.size()) i = t_.size() - 2;
    // Skip zero-length segments left behind by breakpoint splits.
    while (i > 0 && t_[i + 1] == t_[i]) --i;
    const double t0 = t_[i], t1 = t_[i + 1];
    const double h = t1 - t0;
    if (h == 0.0) return {y_[i], dy_[i]};
    const double s = (t - t0) / h;
    const double s2 = s * s, s3 = s2 * s;
    const double h00 = 2 * s3 - 3 * s2 + 1, h10 = s3 - 2 * s2 + s;
    const double h01 = -2 * s3 + 3 * s2, h11 = s3 - s2;
    const double d00 = (6 * s2 - 6 * s) / h, d10 = 3 * s2 - 4 * s + 1;
    const double d01 = (-6 * s2 + 6 * s) / h, d11 = 3 * s2 - 2 * s;
    Sample out;
    for (std::size_t k = 0; k < N; ++k) {
      out.y[k] = h00 * y_[i][k] + h10 * h * dy_[i][k] + h01 * y_[i + 1][k] + h11 * h * dy_[i + 1][k];
      out.dy[k] = d00 * y_[i][k] + d10 * dy_[i][k] + d01 * y_[i + 1][k] + d11 * dy_[i + 1][k];
    }
    return out;
  }

  State<N> operator()(double t) const { return sample(t).y; }

  void push(double t, const State<N>& y, const State<N>& dy) {
    t_.push_back(t);
    y_.push_back(y);
    dy_.push_back(dy);
  }

  void reverse() {
    std::reverse(t_.begin(), t_.end());
    std::reverse(y_.begin(), y_.end());
    std::reverse(dy_.begin(), dy_.end());
  }

  // Appends other (which must start where this one ends).
  void append(const DenseTrajectory& other) {
    t_.insert(t_.end(), other.t_.begin(), other.t_.end());
    y_.insert(y_.end(), other.y_.begin(), other.y_.end());
    dy_.insert(dy_.end(), other.dy_.begin(), other.dy_.end());
  }

 private:
  std::vector<double> t_;
  std::vector<State<N>> y_;
  std::vector<State<N>> dy_;
};

namespace detail {

template <std::size_t N, class Rhs>
void dopri5_piece(Rhs& rhs, double t, State<N>& y, double t_end, double lo, double hi,
                  const Options& opts, double& h, DenseTrajectory<N>& out, int& steps) {
  // Dormand-Prince 5(4) tableau.
  constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  constexpr double a21 = 1.0 / 5;
  constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                   a54 = -212.0 / 729;
  constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                   a64 = 49.0 / 176, a65 = -5103.0 / 18656;
  constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                   b6 = 11.0 / 84;
  constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                   e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

  // One-sided evaluation inside the piece: the lower edge is a breakpoint,
  // so it is nudged up to pick the right-hand limit of a left-closed profile.
  const double lo_in = std::nextafter(lo, hi);
  auto f = [&](double tt, const State<N>& yy) {
    return rhs(std::clamp(tt, lo_in, hi), yy);
  };

  const double dir = t_end >= t ? 1.0 : -1.0;
  State<N> k1 = f(t, y), k2, k3, k4, k5, k6, k7, tmp, ynew;
  out.push(t, y, k1);
  if (t == t_end) return;

  if (h <= 0.0) {
    double ny = 0, nf = 0;
    for (std::size_t i = 0; i < N; ++i) {
      const double sc = opts.atol + opts.rtol * std::abs(y[i]);
      ny = std::max(ny, std::abs(y[i]) / sc);
      nf = std::max(nf, std::abs(k1[i]) / sc);
    }
    h = (ny < 1e-5 || nf < 1e-5) ? 1e-6 : 0.01 * ny / nf;
    h = std::min({h, std::abs(t_end - t), opts.max_step});
  }

  while (dir * (t_end - t) > 0) {
    if (++steps > opts.max_steps) throw StepFailure("maximum number of ODE steps exceeded");
    h = std::min({h, std::abs(t_end - t), opts.max_step});
    const double hmin = 1e-14 * std::max(1.0, std::abs(t));
    if (h < hmin) {
      throw StepFailure("step size underflow at t = " + std::to_string(t));
    }
    const double hs = dir * h;
    for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + hs * a21 * k1[i];
    k2 = f(t + c2 * hs, tmp);
    for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + hs * (a31 * k1[i] + a32 * k2[i]);
    k3 = f(t + c3 * hs, tmp);
    for (std::size_t i = 0; i < N; ++i)
      tmp[i] = y[i] + hs * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    k4 = f(t + c4 * hs, tmp);
    for (std::size_t i = 0; i < N; ++i)
      tmp[i] = y[i] + hs * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    k5 = f(t + c5 * hs, tmp);
    for (std::size_t i = 0; i < N; ++i)
      tmp[i] = y[i] + hs * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
    const double t_next = (std::abs(t_end - t) <= h) ? t_end : t + hs;
    k6 = f(t + hs, tmp);
    for (std::size_t i = 0; i < N; ++i)
      ynew[i] = y[i] + hs * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
    k7 = f(t_next, ynew);

    double err = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
      const double e =
          hs * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
      const double sc = opts.atol + opts.rtol * std::max(std::abs(y[i]), std::abs(ynew[i]));
      err = std::max(err, std::abs(e) / sc);
    }
    if (!std::isfinite(err)) throw StepFailure("non-finite state at t = " + std::to_string(t));

    if (err <= 1.0) {
      t = t_next;
      y = ynew;
      k1 = k7;
      out.push(t, y, k1);
      const double fac = err == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
      h *= fac;
    } else {
      h *= std::max(0.2, 0.9 * std::pow(err, -0.2));
    }
  }
}

}  // namespace detail

/// Integrates y' = rhs(t, y) from t0 to t1 (either direction) with the
/// Dormand-Prince 5(4) pair. Integration restarts at every breakpoint strictly
/// between t0 and t1; inside a piece (p, q] the right-hand side never sees
/// t = p, so left-closed piecewise coefficients are resolved correctly.
/// The returned trajectory is ordered by increasing time.
template <std::size_t N, class Rhs>
DenseTrajectory<N> integrate(Rhs&& rhs, double t0, State<N> y0, double t1, const Options& opts = {},
                             std::span<const double> breakpoints = {}) {
  std::vector<double> cuts;
  const double lo = std::min(t0, t1), hi = std::max(t0, t1);
  for (double b : breakpoints)
    if (b > lo && b < hi) cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  if (t1 < t0) std::reverse(cuts.begin(), cuts.end());
  cuts.push_back(t1);

  // Piece boundaries as seen by the profile: (prev_break, next_break].
  std::vector<double> all(breakpoints.begin(), breakpoints.end());
  std::sort(all.begin(), all.end());
  auto piece_bounds = [&](double a, double b) {
    const double mid = 0.5 * (a + b);
    double plo = -std::numeric_limits<double>::infinity();
    double phi = std::numeric_limits<double>::infinity();
    for (double x : all) {
      if (x < mid) plo = x;
      if (x >= mid) {
        phi = x;
        break;
      }
    }
    return std::pair{plo, phi};
  };

  DenseTrajectory<N> out;
  double t = t0, h = 0.0;
  int steps = 0;
  State<N> y = y0;
  for (double target : cuts) {
    if (target == t) continue;
    auto [plo, phi] = piece_bounds(t, target);
    DenseTrajectory<N> piece;
    detail::dopri5_piece<N>(rhs, t, y, target, plo, phi, opts, h, piece, steps);
    if (t1 < t0) piece.reverse();
    if (t1 < t0) {
      piece.append(out);
      out = std::move(piece);
    } else {
      out.append(piece);
    }
    t = target;
  }
  if (out.empty()) out.push(t0, y0, rhs(t0, y0));
  return out;
}

}  // namespace ermakov::ode
