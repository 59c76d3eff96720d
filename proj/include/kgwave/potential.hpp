// Nonlinearity potentials V(u) for the wave equation u_tt - u_xx + V'(u) = 0.
//
// Three kinds are supported:
//   * sine_gordon      V(u) = -cos(u)                    (periodic, normalized)
//   * trig             V(u) = sum_j a_j cos(j u) + b_j sin(j u)   (periodic)
//   * poly             V(u) = sum_k p_k u^k              (non-periodic)
//
// A periodic potential is "normalized" when one period carries exactly one
// minimum of value -1 and one maximum of value +1; several classification
// formulas (the curvature-weighted period-monotonicity signatures below) are
// only meaningful in that normal form and refuse to run otherwise.
#pragma once

#include <string>
#include <vector>

#include "kgwave/errors.hpp"

namespace kgw {

enum class potential_kind { sine_gordon, trig, poly };

struct potential {
  std::string name = "sine-gordon";
  potential_kind kind = potential_kind::sine_gordon;
  std::vector<double> cos_coeffs;  // a_j multiplying cos(j*u), j = 1, 2, ...
  std::vector<double> sin_coeffs;  // b_j multiplying sin(j*u), j = 1, 2, ...
  std::vector<double> poly_coeffs; // p_k multiplying u^k, k = 0, 1, ...

  double operator()(double u) const { return deriv(u, 0); }
  // n-th derivative of V, n = 0..4; larger n is refused (UnsupportedOrder).
  double deriv(double u, int n) const;
  bool periodic() const { return kind != potential_kind::poly; }
};

potential make_sine_gordon();

// Parse the JSON object {"name": ..., "kind": "sine_gordon"|"trig"|"poly",
// "cos": [...], "sin": [...], "poly": [...]}.  Unknown keys are rejected;
// absent coefficient arrays mean empty.  The text must be a single object.
potential potential_from_json(const std::string& json_text);

struct critical_point {
  double u = 0;
  double value = 0;  // V(u)
  int type = 0;      // -1: minimum, +1: maximum, 0: degenerate (V'' ~ 0)
};

// All critical points of V: within [0, 2*pi) for periodic kinds, over the
// whole real line for polynomials.  Located by a 1024-node scan refined by
// Newton iteration (<= 50 steps, tolerance 1e-12), sorted by u.
std::vector<critical_point> critical_points(const potential& p);

struct normalization_report {
  bool normalized = false;
  double min_value = 0, max_value = 0;
  int n_minima = 0, n_maxima = 0;
};

// Check the periodic normal form (tolerance 1e-8 on the extreme values).
// Polynomials are never normalized.
normalization_report check_normalization(const potential& p);

// Curvature-weighted monotonicity signature
//   N_s(u) = 6*(V(u)+s)*V''(u)^2 - 3*V'(u)^2*V''(u) - 2*(V(u)+s)*V'(u)*V'''(u)
// with s = +1 for superluminal waves (well above the minimum level -1) and
// s = -1 for subluminal waves (well below the maximum level +1).  When N_s
// keeps one sign along the orbit, dT/dE has that sign.  Requires the
// normalized form; throws NotNormalized otherwise.
double chicone_signature(const potential& p, double u, int s);

}  // namespace kgw
