#pragma once

// Fundamental solution matrices for the linearization of the traveling-wave
// equation about a periodic profile, their monodromy, the quadratic expansion
// of the monodromy in the spectral parameter at the origin, and the monodromy
// of the associated self-adjoint (exponentially rescaled) form.

#include <complex>

#include "kgwave/wavetrain.hpp"

namespace kgw {

using cplx = std::complex<double>;

struct mat2 {
  double a11 = 0, a12 = 0, a21 = 0, a22 = 0;
};

struct cmat2 {
  cplx a11, a12, a21, a22;
};

inline mat2 operator*(const mat2& x, const mat2& y) {
  return {x.a11 * y.a11 + x.a12 * y.a21, x.a11 * y.a12 + x.a12 * y.a22,
          x.a21 * y.a11 + x.a22 * y.a21, x.a21 * y.a12 + x.a22 * y.a22};
}
inline mat2 operator+(const mat2& x, const mat2& y) {
  return {x.a11 + y.a11, x.a12 + y.a12, x.a21 + y.a21, x.a22 + y.a22};
}
inline mat2 operator-(const mat2& x, const mat2& y) {
  return {x.a11 - y.a11, x.a12 - y.a12, x.a21 - y.a21, x.a22 - y.a22};
}
inline mat2 operator*(double s, const mat2& x) {
  return {s * x.a11, s * x.a12, s * x.a21, s * x.a22};
}
inline double trace(const mat2& x) { return x.a11 + x.a22; }
inline double det(const mat2& x) { return x.a11 * x.a22 - x.a12 * x.a21; }

inline cmat2 operator*(const cmat2& x, const cmat2& y) {
  return {x.a11 * y.a11 + x.a12 * y.a21, x.a11 * y.a12 + x.a12 * y.a22,
          x.a21 * y.a11 + x.a22 * y.a21, x.a21 * y.a12 + x.a22 * y.a22};
}
inline cplx trace(const cmat2& x) { return x.a11 + x.a22; }
inline cplx det(const cmat2& x) { return x.a11 * x.a22 - x.a12 * x.a21; }

// Fundamental matrix F(z1; z0, lambda) of the first-order system equivalent
// to (c^2-1) w'' - 2 c lambda w' + (lambda^2 + V''(f)) w = 0, normalized to
// the identity at z0.  The profile is advanced alongside the matrix so both
// see the same integrator steps.
cmat2 fundamental_matrix(const wave& w, cplx lambda, double z0, double z1);

struct monodromy_result {
  cmat2 M;
  double abel_residual;  // |det M - exp(2 q lambda)| / max(1, |exp(2 q lambda)|)
};

monodromy_result monodromy(const wave& w, cplx lambda);

// Quadratic expansion M(lambda) = M0 + lambda M1 + lambda^2 M2 + O(lambda^3),
// with the coefficient matrices expressed through the period-average data of
// the lambda = 0 fundamental matrix.
struct monodromy_expansion {
  mat2 M0, M1, M2;
  double I_f11_sq = 0;    // integral over one period of F11(y,0)^2
  double I_f11_f12 = 0;   // integral of F11 F12
  double I_f12_sq = 0;    // integral of F12^2
  double q = 0;           // c T / (c^2 - 1)
  double hill_slope = 0;  // d/dnu at 0 of the rescaled-form discriminant
  double kappa = 0;       // hill_slope / (c^2-1)^2
  double delta_identity_residual = 0;  // |M0_12 - delta v0^2| / max(1,|M0_12|)
  double action_identity_residual = 0; // |(c^2-1) v0^2 I_f11_sq - W| / max(1,|W|)
};

monodromy_expansion expand_monodromy(const wave& w);

// Monodromy of the rescaled self-adjoint form y'' + P(z) y = nu y with
// P = V''(f)/(c^2-1); its determinant is 1 and its trace is the discriminant.
struct hill_result {
  mat2 M;
  double discriminant;
};

hill_result hill_matrix(const wave& w, double nu);
cmat2 hill_matrix_c(const wave& w, cplx nu);

// Spectral parameter of the rescaled form as a function of lambda.
inline cplx hill_parameter(const wave& w, cplx lambda) {
  cplx r = lambda / w.c2m1;
  return r * r;
}

}  // namespace kgw
