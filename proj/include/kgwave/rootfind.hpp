// Scalar root-finding utilities: guarded bisection, Newton refinement with a
// central finite-difference derivative, and uniform bracket scanning.
#pragma once

#include <cmath>
#include <functional>
#include <utility>
#include <vector>

#include "kgwave/errors.hpp"

namespace kgw {

// Bisection on [a, b]; requires f(a) and f(b) of opposite sign.  Returns the
// midpoint of the final bracket of width <= xtol.
template <class F>
double bisect(F&& f, double a, double b, double xtol = 1e-12,
              int max_iter = 200) {
  if (a > b) std::swap(a, b);
  double fa = f(a), fb = f(b);
  if (fa == 0) return a;
  if (fb == 0) return b;
  if ((fa > 0) == (fb > 0))
    fail(errc::bracket_failure, "bisection endpoints have equal sign");
  for (int i = 0; i < max_iter && (b - a) > xtol; ++i) {
    double m = 0.5 * (a + b);
    double fm = f(m);
    if (fm == 0) return m;
    if ((fm > 0) == (fa > 0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

// Newton iteration with central finite-difference derivative (step scaled by
// 1 + |x|); falls back on failure by shrinking the update.  Converges to
// |f| <= ftol or |dx| <= xtol.
template <class F>
double newton_fd(F&& f, double x0, double xtol = 1e-12, double ftol = 0.0,
                 int max_iter = 50) {
  double x = x0;
  for (int i = 0; i < max_iter; ++i) {
    double fx = f(x);
    if (std::abs(fx) <= ftol) return x;
    double h = 1e-6 * (1.0 + std::abs(x));
    double d = (f(x + h) - f(x - h)) / (2 * h);
    if (d == 0 || !std::isfinite(d))
      fail(errc::no_convergence, "Newton derivative vanished");
    double dx = fx / d;
    x -= dx;
    if (std::abs(dx) <= xtol) return x;
  }
  fail(errc::no_convergence, "Newton iteration exceeded its budget");
}

// Scan [a, b] on n+1 uniform nodes; return every sub-interval with a sign
// change (or an exact zero at a node).
template <class F>
std::vector<std::pair<double, double>> bracket_scan(F&& f, double a, double b,
                                                    int n) {
  std::vector<std::pair<double, double>> out;
  double prev_x = a, prev_f = f(a);
  for (int i = 1; i <= n; ++i) {
    double x = a + (b - a) * i / n;
    double fx = f(x);
    if (prev_f == 0)
      out.emplace_back(prev_x, prev_x);
    else if ((prev_f > 0) != (fx > 0))
      out.emplace_back(prev_x, x);
    prev_x = x;
    prev_f = fx;
  }
  if (prev_f == 0) out.emplace_back(prev_x, prev_x);
  return out;
}

}  // namespace kgw
