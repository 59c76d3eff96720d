#pragma once

// Spectral diagnostics for periodic traveling waves: the periodic Evans
// function, parity and modulational indices, spectral curves through the
// origin, real-axis eigenvalue searches, the band map of the rescaled
// self-adjoint form, and certificates of spectral instability.

#include <vector>

#include "kgwave/floquet.hpp"

namespace kgw {

struct spectrum_options {
  int theta_steps = 256;      // spectral-curve resolution over (0, pi]
  int halving_limit = 16;     // continuation may halve steps down to pi/2^16
  int newton_max = 50;
  double newton_fd = 1e-6;    // relative step for the d/dlambda difference
  double newton_tol = 1e-10;
  double bisect_tol = 1e-10;
  int scan_points = 400;      // real-axis root scan resolution
  double scan_floor = 1e-3;   // excludes the trivial lambda = 0 root
  int hill_grid = 2000;
  double gap_drop_height = 1e-7;  // closed-gap filter: interior |disc| excess
  double gap_drop_width = 1e-6;
  int profile_samples = 512;
};

// Evans function D(lambda, mu) = det(M(lambda) - mu I) as a quadratic in mu.
cplx evans(const cmat2& M, cplx mu);

struct multiplier_pair {
  cplx mu1, mu2;   // |mu1| >= |mu2| except when coalesced (then lexicographic)
  bool coalesced;
};
multiplier_pair multipliers(const cmat2& M);

// gamma = sign of (c^2-1) times the leading lambda-derivative of D(., 1) at 0.
struct parity_result {
  int gamma;
  int p;              // half the leading derivative order (generically 1)
  double derivative;  // the leading derivative value
};
parity_result parity_index(const wave& w, const monodromy_expansion& ex);

// rho = sign of the upper-right entry of the monodromy at lambda = 0,
// cross-checked against the dT/dE route.
struct modulational_result {
  int rho;
  double m12;            // M0 upper-right entry
  double te_route;       // -(c^2-1) dT/dE, same sign as m12
};
modulational_result modulational_index(const wave& w, const monodromy_expansion& ex);

// Tangent slopes of the two spectral curves at the origin.
struct tangent_result {
  cplx s_plus, s_minus;  // (q +- kappa^{1/2})^{-1}
  bool conjugate_pair;   // kappa < 0: tangents leave the imaginary axis
};
tangent_result spectral_tangents(const wave& w, const monodromy_expansion& ex);

struct curve_point {
  double theta;   // Floquet phase; the multiplier target is exp(i theta)
  cplx lambda;
  int branch;     // +1 / -1
  double abs_evans;
};
std::vector<curve_point> trace_curve(const wave& w, const monodromy_expansion& ex,
                                     const spectrum_options& so = {});

// Real-part bound on the periodic-eigenvalue spectrum.
double spectral_bound(const wave& w, const spectrum_options& so = {});

struct real_root {
  double lambda;
  int mu_sign;      // +1 periodic, -1 antiperiodic
  double residual;  // |D(lambda, mu_sign)| after refinement
};
std::vector<real_root> real_periodic_eigenvalues(const wave& w, double bound,
                                                 const spectrum_options& so = {});

// G(lambda) = log|mu_+| log|mu_-|: negative off the spectrum on the imaginary
// axis, zero exactly on the spectrum, computed through the rescaled form.
double g_function(const wave& w, cplx lambda);

struct band {
  double lo, hi;
};

struct hill_bands {
  std::vector<band> bands;   // |discriminant| <= 2, clipped to the window
  std::vector<double> periodic_edges;      // discriminant = +2
  std::vector<double> antiperiodic_edges;  // discriminant = -2
  std::vector<band> gaps;    // finite open gaps surviving the closed-gap filter
  double window_lo = 0, window_hi = 0;
  double disc_at_zero = 0;   // health datum; equals 2 up to integration error
};
hill_bands hill_spectrum(const wave& w, const spectrum_options& so = {});

// Locates a point of the spectrum with positive real part by a horizontal
// sign-change search on G starting above a negative gap of the rescaled form.
struct instability_certificate {
  cplx lambda0;
  double g_residual;
  double min_abs_evans;
  band gap;  // the negative gap that seeded the search
};
instability_certificate find_unstable_point(const wave& w, const hill_bands& hb,
                                            const spectrum_options& so = {});

// Stability of the wave built at speed c = sqrt(2), where the spectrum is
// governed entirely by the band map: stable exactly when no finite gap
// reaches into the negative axis; rotational profiles always have one.
struct infinite_speed_result {
  wave_class cls;
  bool stable;
  bool has_negative_gap;
  band gap;  // exhibited when a negative gap exists
};
infinite_speed_result infinite_speed_stability(const potential& p, double E,
                                               const wave_options& wo = {},
                                               const spectrum_options& so = {});

}  // namespace kgw
