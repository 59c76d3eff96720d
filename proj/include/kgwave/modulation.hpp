#pragma once

// Averaged (modulation) description of the wavetrain: averaged densities and
// fluxes, the characteristic type of the averaged first-order system, and the
// cubic envelope reduction near an equilibrium carrier state.

#include <complex>

#include "kgwave/wavetrain.hpp"

namespace kgw {

struct averaged_fluxes {
  double d1, f1, d2, f2;  // averaged densities and fluxes of the two local laws
};
averaged_fluxes averaged_quantities(const wave& w);

enum class whitham_kind { hyperbolic, elliptic, degenerate };
const char* whitham_kind_name(whitham_kind k);

struct whitham_result {
  whitham_kind kind;
  std::complex<double> v1, v2;  // characteristic speeds of the averaged system
  double u11, u12, u21, u22;    // velocity matrix of the averaged system
  double radicand;              // discriminant driving the type
  double denominator;           // c^2 T^2 + W dT/dE
};
whitham_result whitham_classify(const wave& w);

// Central-difference residual of d(action)/dE against the period.
double action_derivative_residual(const wave& w);

struct nls_result {
  double omega;           // carrier dispersion root, omega^2 = k^2 + V''(u0)
  double omega_p;         // group velocity k / omega
  double omega_pp;        // dispersion curvature V''(u0) / omega^3
  double beta;            // cubic self-interaction coefficient
  double beta_omega_pp;   // focusing indicator product
  bool focusing;
};
nls_result nls_coefficients(const potential& p, double u0, double k);

// Sign of dT/dE times (c^2 - 1) in the zero-amplitude limit about u0.
int near_equilibrium_te_sign(const potential& p, double u0);

}  // namespace kgw
