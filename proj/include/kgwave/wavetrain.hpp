// Construction of periodic traveling waves u(x,t) = f(x - c t) of
// u_tt - u_xx + V'(u) = 0.  The profile solves (c^2-1) f'' = -V'(f) with
// first integral 0.5 (c^2-1) f'^2 + V(f) = E.
//
// Admissible parameter regions (all open):
//   superluminal (c^2 > 1) librational: oscillation in a well of V above the
//     minimizer energy and below the adjacent barrier energy;
//   superluminal rotational: E above every barrier (periodic V only);
//   subluminal (c^2 < 1) librational: oscillation about a maximizer of V
//     (the first integral reverses sign);
//   subluminal rotational: E below every well minimum (periodic V only).
//
// Normalization of the phase: f(0) is the well minimizer (superluminal) or
// maximizer (subluminal) and f'(0) = v0 > 0.  The period T is the first
// return of (f, f') to its initial point.
#pragma once

#include <array>
#include <vector>

#include "kgwave/ode.hpp"
#include "kgwave/potential.hpp"

namespace kgw {

enum class wave_class {
  subluminal_librational,
  superluminal_librational,
  subluminal_rotational,
  superluminal_rotational,
};

inline const char* wave_class_name(wave_class c) {
  switch (c) {
    case wave_class::subluminal_librational: return "SubluminalLibrational";
    case wave_class::superluminal_librational: return "SuperluminalLibrational";
    case wave_class::subluminal_rotational: return "SubluminalRotational";
    case wave_class::superluminal_rotational: return "SuperluminalRotational";
  }
  return "?";
}

struct wave_options {
  double quad_tol = 1e-11;   // tanh-sinh absolute tolerance
  double ode_rtol = 1e-10;   // profile/monodromy relative tolerance
  double ode_atol = 1e-12;
  double root_tol = 1e-12;   // bisection tolerance (turning points etc.)
  double guard = 1e-10;      // separatrix / sonic-speed exclusion width
};

struct wave {
  potential pot;
  wave_options opts;
  double E = 0, c = 0;
  double c2m1 = 0;  // c^2 - 1
  wave_class cls = wave_class::superluminal_librational;
  bool librational = true;

  double u0 = 0;  // f(0): well minimizer (superluminal) / maximizer (subluminal)
  double v0 = 0;  // f'(0) > 0
  double f_lo = 0, f_hi = 0;  // librational turning values; rotational: u0, u0+2pi

  double T = 0;    // fundamental period
  double T_E = 0;  // dT/dE
  double delta = 0;   // regularized integral of f'(y)^{-2} over one period
  double W = 0;       // (c^2-1) int_0^T f'^2 dz, from the profile pass
  double W_quad = 0;  // same quantity by direct turning-point quadrature
  double q = 0;       // c T / (c^2 - 1)

  std::array<double, 2> turning_z{};  // librational: zeros of f' in (0, T)
  dense_path<3> path;  // (f, f', accumulated int f'^2) over [0, T]

  // Periodic extension of the profile (rotational waves gain 2*pi per period).
  double f(double z) const;
  double fz(double z) const;
  // 0.5 (c^2-1) f'(z)^2 + V(f(z)) - E; identically 0 for the exact profile.
  double energy_residual(double z) const;
};

// Classify (E, c) or throw (OnSeparatrix / SonicSpeed / OutsideRegion).
wave_class classify(const potential& p, double E, double c,
                    const wave_options& opts = {});

// Construct the full wave object (profile, period, T_E, delta, W, q).
wave build_wave(const potential& p, double E, double c,
                const wave_options& opts = {});

struct profile_sample {
  double z, f, f_z, energy_residual;
};
std::vector<profile_sample> sample_profile(const wave& w, int n);

// Action integral alone at a given energy (re-solving the turning points),
// for finite differences of the action in E without a full wave build.
double action_at(const potential& p, double E, double c,
                 const wave_options& opts = {});

}  // namespace kgw
