#include "kgwave/floquet.hpp"

#include <array>
#include <cmath>

#include "kgwave/ode.hpp"

namespace kgw {

namespace {

// State layout for the complex fundamental matrix: profile pair (f, f') plus
// real and imaginary parts of the four matrix entries.
constexpr int kF = 0, kFz = 1;
constexpr int k11r = 2, k11i = 3, k12r = 4, k12i = 5;
constexpr int k21r = 6, k21i = 7, k22r = 8, k22i = 9;

}  // namespace

cmat2 fundamental_matrix(const wave& w, cplx lambda, double z0, double z1) {
  const double c2m1 = w.c2m1;
  const cplx a22 = 2.0 * w.c * lambda / c2m1;
  const cplx lam2 = lambda * lambda;
  auto rhs = [&](double, const std::array<double, 10>& y,
                 std::array<double, 10>& dy) {
    dy[kF] = y[kFz];
    dy[kFz] = -w.pot.deriv(y[kF], 1) / c2m1;
    cplx a21 = -(lam2 + w.pot.deriv(y[kF], 2)) / c2m1;
    cplx F11{y[k11r], y[k11i]}, F12{y[k12r], y[k12i]};
    cplx F21{y[k21r], y[k21i]}, F22{y[k22r], y[k22i]};
    cplx d11 = F21, d12 = F22;
    cplx d21 = a21 * F11 + a22 * F21;
    cplx d22 = a21 * F12 + a22 * F22;
    dy[k11r] = d11.real();
    dy[k11i] = d11.imag();
    dy[k12r] = d12.real();
    dy[k12i] = d12.imag();
    dy[k21r] = d21.real();
    dy[k21i] = d21.imag();
    dy[k22r] = d22.real();
    dy[k22i] = d22.imag();
  };
  std::array<double, 10> y{};
  y[kF] = w.f(z0);
  y[kFz] = w.fz(z0);
  y[k11r] = 1;
  y[k22r] = 1;
  auto ye = integrate_ode<10>(rhs, y, z0, z1, w.opts.ode_rtol, w.opts.ode_atol);
  return {{ye[k11r], ye[k11i]}, {ye[k12r], ye[k12i]},
          {ye[k21r], ye[k21i]}, {ye[k22r], ye[k22i]}};
}

monodromy_result monodromy(const wave& w, cplx lambda) {
  monodromy_result r;
  r.M = fundamental_matrix(w, lambda, 0.0, w.T);
  cplx expected = std::exp(2.0 * w.q * lambda);
  r.abel_residual = std::abs(det(r.M) - expected) / std::max(1.0, std::abs(expected));
  return r;
}

monodromy_expansion expand_monodromy(const wave& w) {
  // One real pass at lambda = 0 carrying the matrix entries and the running
  // quadratic averages needed by the second-order coefficient.
  const double c2m1 = w.c2m1;
  auto rhs = [&](double, const std::array<double, 9>& y,
                 std::array<double, 9>& dy) {
    dy[0] = y[1];
    dy[1] = -w.pot.deriv(y[0], 1) / c2m1;
    double a21 = -w.pot.deriv(y[0], 2) / c2m1;
    dy[2] = y[4];          // F11' = F21
    dy[3] = y[5];          // F12' = F22
    dy[4] = a21 * y[2];    // F21' = a21 F11
    dy[5] = a21 * y[3];    // F22' = a21 F12
    dy[6] = y[2] * y[2];   // accumulate F11^2
    dy[7] = y[2] * y[3];   // accumulate F11 F12
    dy[8] = y[3] * y[3];   // accumulate F12^2
  };
  std::array<double, 9> y{w.u0, w.v0, 1, 0, 0, 1, 0, 0, 0};
  auto ye = integrate_ode<9>(rhs, y, 0.0, w.T, w.opts.ode_rtol, w.opts.ode_atol);

  monodromy_expansion ex;
  ex.M0 = {ye[2], ye[3], ye[4], ye[5]};
  ex.I_f11_sq = ye[6];
  ex.I_f11_f12 = ye[7];
  ex.I_f12_sq = ye[8];
  ex.q = w.q;

  const double c = w.c;
  // Commutator and sandwich with the lower shift matrix, written out:
  // [S, M] = [[-M12, 0], [M11 - M22, M12]],  S M S = [[0, 0], [M12, 0]].
  const mat2& M0 = ex.M0;
  mat2 comm{-M0.a12, 0, M0.a11 - M0.a22, M0.a12};
  mat2 sms{0, 0, M0.a12, 0};
  mat2 J{-ex.I_f11_f12, -ex.I_f12_sq, ex.I_f11_sq, ex.I_f11_f12};

  ex.M1 = ex.q * M0 + (c / c2m1) * comm;
  ex.M2 = 0.5 * ex.q * ex.q * M0 + (c * ex.q / c2m1) * comm -
          (c * c / (c2m1 * c2m1)) * sms + (1.0 / (c2m1 * c2m1)) * (M0 * J);

  ex.hill_slope = M0.a12 * ex.I_f11_sq;
  ex.kappa = ex.hill_slope / (c2m1 * c2m1);

  double m12_pred = w.delta * w.v0 * w.v0;
  ex.delta_identity_residual =
      std::abs(M0.a12 - m12_pred) / std::max(1.0, std::abs(M0.a12));
  ex.action_identity_residual =
      std::abs(c2m1 * w.v0 * w.v0 * ex.I_f11_sq - w.W) / std::max(1.0, std::abs(w.W));
  return ex;
}

hill_result hill_matrix(const wave& w, double nu) {
  const double c2m1 = w.c2m1;
  auto rhs = [&](double, const std::array<double, 6>& y,
                 std::array<double, 6>& dy) {
    dy[0] = y[1];
    dy[1] = -w.pot.deriv(y[0], 1) / c2m1;
    double g = nu - w.pot.deriv(y[0], 2) / c2m1;
    dy[2] = y[4];
    dy[3] = y[5];
    dy[4] = g * y[2];
    dy[5] = g * y[3];
  };
  std::array<double, 6> y{w.u0, w.v0, 1, 0, 0, 1};
  auto ye = integrate_ode<6>(rhs, y, 0.0, w.T, w.opts.ode_rtol, w.opts.ode_atol);
  hill_result r;
  r.M = {ye[2], ye[3], ye[4], ye[5]};
  r.discriminant = trace(r.M);
  return r;
}

cmat2 hill_matrix_c(const wave& w, cplx nu) {
  const double c2m1 = w.c2m1;
  auto rhs = [&](double, const std::array<double, 10>& y,
                 std::array<double, 10>& dy) {
    dy[0] = y[1];
    dy[1] = -w.pot.deriv(y[0], 1) / c2m1;
    cplx g = nu - w.pot.deriv(y[0], 2) / c2m1;
    cplx Y11{y[2], y[3]}, Y12{y[4], y[5]}, Y21{y[6], y[7]}, Y22{y[8], y[9]};
    cplx d21 = g * Y11, d22 = g * Y12;
    dy[2] = Y21.real();
    dy[3] = Y21.imag();
    dy[4] = Y22.real();
    dy[5] = Y22.imag();
    dy[6] = d21.real();
    dy[7] = d21.imag();
    dy[8] = d22.real();
    dy[9] = d22.imag();
  };
  std::array<double, 10> y{w.u0, w.v0, 1, 0, 0, 0, 0, 0, 1, 0};
  auto ye = integrate_ode<10>(rhs, y, 0.0, w.T, w.opts.ode_rtol, w.opts.ode_atol);
  return {{ye[2], ye[3]}, {ye[4], ye[5]}, {ye[6], ye[7]}, {ye[8], ye[9]}};
}

}  // namespace kgw
