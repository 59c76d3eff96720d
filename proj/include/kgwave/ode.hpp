// Explicit embedded Runge-Kutta integrator: the Dormand-Prince 5(4) pair with
// first-same-as-last structure, adaptive step control, and the classical
// fifth-order continuous extension (quartic-in-theta interpolant built from an
// extra linear combination of the seven stages).  The continuous extension is
// stored per accepted step so solution values can be queried at arbitrary
// interior points afterwards.
#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

#include "kgwave/errors.hpp"

namespace kgw {

inline constexpr double default_ode_rtol = 1e-10;
inline constexpr double default_ode_atol = 1e-12;

template <std::size_t N>
struct dense_step {
  double t0 = 0;  // step start
  double h = 0;   // step length (signed)
  std::array<std::array<double, N>, 5> rcont{};  // interpolant coefficients
};

// Piecewise quintic-accurate dense representation of one integration run.
template <std::size_t N>
struct dense_path {
  double t_begin = 0;
  double t_end = 0;
  std::vector<dense_step<N>> steps;

  // Evaluate the interpolant; t is clamped into [t_begin, t_end].
  std::array<double, N> eval(double t) const {
    if (steps.empty()) fail(errc::step_failure, "empty dense path");
    // binary search for the step containing t
    std::size_t lo = 0, hi = steps.size() - 1;
    while (lo < hi) {
      std::size_t mid = (lo + hi + 1) / 2;
      if ((steps[mid].t0 - t) * (t_end - t_begin) <= 0)
        lo = mid;
      else
        hi = mid - 1;
    }
    const dense_step<N>& s = steps[lo];
    double theta = (t - s.t0) / s.h;
    if (theta < 0) theta = 0;
    if (theta > 1) theta = 1;
    std::array<double, N> y{};
    for (std::size_t i = 0; i < N; ++i) {
      const auto& r = s.rcont;
      y[i] = r[0][i] +
             theta * (r[1][i] +
                      (1 - theta) * (r[2][i] +
                                     theta * (r[3][i] + (1 - theta) * r[4][i])));
    }
    return y;
  }

  double eval_component(double t, std::size_t i) const { return eval(t)[i]; }
};

namespace dopri5_detail {
// Butcher tableau of the Dormand-Prince 5(4) pair.
inline constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
inline constexpr double a21 = 1.0 / 5;
inline constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
inline constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
inline constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                        a53 = 64448.0 / 6561, a54 = -212.0 / 729;
inline constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                        a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                        a65 = -5103.0 / 18656;
inline constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192,
                        a75 = -2187.0 / 6784, a76 = 11.0 / 84;
// Error coefficients (5th-minus-4th order solution).
inline constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                        e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
// Continuous-extension weights.
inline constexpr double d1 = -12715105075.0 / 11282082432.0;
inline constexpr double d3 = 87487479700.0 / 32700410799.0;
inline constexpr double d4 = -10690763975.0 / 1880347072.0;
inline constexpr double d5 = 701980252875.0 / 199316789632.0;
inline constexpr double d6 = -1453857185.0 / 822651844.0;
inline constexpr double d7 = 69997945.0 / 29380423.0;
}  // namespace dopri5_detail

// Integrate y' = rhs(t, y) from t0 to t1 (t1 may be < t0).  If `path` is
// non-null, the continuous extension of every accepted step is stored there.
// Returns the solution at t1.
template <std::size_t N, class RHS>
std::array<double, N> integrate_ode(RHS&& rhs, std::array<double, N> y,
                                    double t0, double t1,
                                    double rtol = default_ode_rtol,
                                    double atol = default_ode_atol,
                                    dense_path<N>* path = nullptr) {
  using namespace dopri5_detail;
  if (path) {
    path->t_begin = t0;
    path->t_end = t1;
    path->steps.clear();
  }
  if (t1 == t0) return y;

  const double dir = (t1 > t0) ? 1.0 : -1.0;
  const double span = std::abs(t1 - t0);
  double t = t0;
  std::array<double, N> k1{}, k2{}, k3{}, k4{}, k5{}, k6{}, k7{}, ytmp{}, ynew{};
  rhs(t, y, k1);

  // initial step heuristic: limited by span and by the scale of y'/y
  double h = span * 1e-3;
  {
    double d0 = 0, d1n = 0;
    for (std::size_t i = 0; i < N; ++i) {
      double sc = atol + rtol * std::abs(y[i]);
      d0 = std::max(d0, std::abs(y[i]) / sc);
      d1n = std::max(d1n, std::abs(k1[i]) / sc);
    }
    if (d1n > 1e-10) h = std::min(h, 0.01 * d0 / d1n + 1e-6 * span);
    h = std::max(h, span * 1e-12);
  }
  h *= dir;

  const int max_steps = 1000000;
  for (int step = 0; step < max_steps; ++step) {
    if ((t + h - t1) * dir > 0) h = t1 - t;  // do not overshoot
    bool last = std::abs(t + h - t1) <= 1e-14 * span;

    for (std::size_t i = 0; i < N; ++i) ytmp[i] = y[i] + h * a21 * k1[i];
    rhs(t + c2 * h, ytmp, k2);
    for (std::size_t i = 0; i < N; ++i)
      ytmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    rhs(t + c3 * h, ytmp, k3);
    for (std::size_t i = 0; i < N; ++i)
      ytmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    rhs(t + c4 * h, ytmp, k4);
    for (std::size_t i = 0; i < N; ++i)
      ytmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    rhs(t + c5 * h, ytmp, k5);
    for (std::size_t i = 0; i < N; ++i)
      ytmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] +
                            a64 * k4[i] + a65 * k5[i]);
    rhs(t + h, ytmp, k6);
    for (std::size_t i = 0; i < N; ++i)
      ynew[i] = y[i] + h * (a71 * k1[i] + a73 * k3[i] + a74 * k4[i] +
                            a75 * k5[i] + a76 * k6[i]);
    rhs(t + h, ynew, k7);  // FSAL stage

    double errnorm = 0;
    for (std::size_t i = 0; i < N; ++i) {
      double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                      e6 * k6[i] + e7 * k7[i]);
      double sc = atol + rtol * std::max(std::abs(y[i]), std::abs(ynew[i]));
      errnorm += (e / sc) * (e / sc);
    }
    errnorm = std::sqrt(errnorm / static_cast<double>(N));

    if (errnorm <= 1.0) {  // accept
      if (path) {
        dense_step<N> ds;
        ds.t0 = t;
        ds.h = h;
        for (std::size_t i = 0; i < N; ++i) {
          double dy = ynew[i] - y[i];
          double bspl = h * k1[i] - dy;
          ds.rcont[0][i] = y[i];
          ds.rcont[1][i] = dy;
          ds.rcont[2][i] = bspl;
          ds.rcont[3][i] = dy - h * k7[i] - bspl;
          ds.rcont[4][i] = h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] +
                                d5 * k5[i] + d6 * k6[i] + d7 * k7[i]);
        }
        path->steps.push_back(ds);
      }
      t += h;
      y = ynew;
      k1 = k7;  // FSAL
      if (last) return y;
      double fac = 0.9 * std::pow(std::max(errnorm, 1e-10), -0.2);
      h *= std::min(5.0, std::max(0.2, fac));
    } else {  // reject
      double fac = 0.9 * std::pow(errnorm, -0.2);
      h *= std::max(0.2, fac);
      if (std::abs(h) < 1e-15 * span)
        fail(errc::step_failure, "step size underflow in adaptive integrator");
    }
  }
  fail(errc::step_failure, "adaptive integrator exceeded its step budget");
}

}  // namespace kgw
