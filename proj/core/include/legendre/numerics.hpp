// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <utility>

namespace legendre::numerics {

/// Golden-section search for the maximizer of a unimodal function on [a, b].
/// Returns (argmax, max).
template <typename F>
auto golden_maximize(F&& f, double a, double b, double tolerance) -> std::pair<double, double> {
  constexpr double kInvPhi = 0.6180339887498949;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (std::abs(b - a) > tolerance) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
    if (c >= d) break;
  }
  return fc >= fd ? std::pair{c, fc} : std::pair{d, fd};
}

template <typename F>
auto golden_minimize(F&& f, double a, double b, double tolerance) -> std::pair<double, double> {
  auto [x, v] = golden_maximize([&](double t) { return -f(t); }, a, b, tolerance);
  return {x, -v};
}

/// Bisection on a sign change of f over [a, b]. Stops when |f| < f_tolerance
/// or the bracket can no longer shrink.
template <typename F>
auto bisect(F&& f, double a, double b, double f_tolerance) -> double {
  double fa = f(a);
  for (int i = 0; i < 200; ++i) {
    const double m = 0.5 * (a + b);
    if (m <= a || m >= b) return m;
    const double fm = f(m);
    if (std::abs(fm) < f_tolerance) return m;
    if ((fm < 0.0) == (fa < 0.0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace legendre::numerics
