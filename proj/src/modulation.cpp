#include "kgwave/modulation.hpp"

#include <cmath>

#include "kgwave/errors.hpp"

namespace kgw {

namespace {

int sign_of(double x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

}  // namespace

averaged_fluxes averaged_quantities(const wave& w) {
  double base = w.W / (w.c2m1 * w.T);
  averaged_fluxes out;
  out.d1 = base + w.E;
  out.f1 = w.c * base;
  out.d2 = w.c * base;
  out.f2 = w.c * w.c * base - w.E;
  return out;
}

const char* whitham_kind_name(whitham_kind k) {
  switch (k) {
    case whitham_kind::hyperbolic: return "Hyperbolic";
    case whitham_kind::elliptic: return "Elliptic";
    case whitham_kind::degenerate: return "Degenerate";
  }
  return "?";
}

whitham_result whitham_classify(const wave& w) {
  const double WE = w.T;        // d(action)/dE equals the period
  const double WEE = w.T_E;
  const double W = w.W;
  const double c = w.c;
  whitham_result out{};
  out.denominator = c * c * WE * WE + W * WEE;
  out.radicand = -(w.c2m1 * w.c2m1) * W * WE * WE * WEE;
  if (std::abs(out.denominator) <= 1e-12 * std::max(1.0, c * c * WE * WE))
    fail(errc::degenerate_tangent,
         "the averaged system's velocity matrix is singular for this wave");
  double a = (WE * WE + W * WEE) * c / out.denominator;
  out.u11 = out.u22 = a;
  out.u12 = -W * WE / out.denominator;
  out.u21 = w.c2m1 * w.c2m1 * WE * WEE / out.denominator;
  // The regularized 1/f'^2 integral equals -(c^2-1) dT/dE and is far better
  // conditioned near a stationary period than the difference quotient, so
  // both routes gate the degenerate classification.
  if (std::abs(WEE) < 1e-8 || std::abs(w.delta / w.c2m1) < 1e-8) {
    out.kind = whitham_kind::degenerate;
    out.v1 = out.v2 = a;
    return out;
  }
  if (out.radicand > 0) {
    out.kind = whitham_kind::hyperbolic;
    double s = std::sqrt(out.radicand) / std::abs(out.denominator);
    out.v1 = a - s;
    out.v2 = a + s;
  } else {
    out.kind = whitham_kind::elliptic;
    double s = std::sqrt(-out.radicand) / std::abs(out.denominator);
    out.v1 = {a, -s};
    out.v2 = {a, s};
  }
  return out;
}

double action_derivative_residual(const wave& w) {
  double h = 1e-4 * std::max(1.0, std::abs(w.E));
  auto W_of = [&](double Es) { return action_at(w.pot, Es, w.c, w.opts); };
  double d = (-W_of(w.E + 2 * h) + 8 * W_of(w.E + h) - 8 * W_of(w.E - h) +
              W_of(w.E - 2 * h)) /
             (12 * h);
  return std::abs(d - w.T) / std::max(1.0, std::abs(w.T));
}

nls_result nls_coefficients(const potential& p, double u0, double k) {
  double V2 = p.deriv(u0, 2), V3 = p.deriv(u0, 3), V4 = p.deriv(u0, 4);
  double om2 = k * k + V2;
  if (om2 <= 0)
    fail(errc::evanescent_carrier,
         "the carrier wavenumber does not support a propagating linear wave");
  if (std::abs(V2) < 1e-12)
    fail(errc::evanescent_carrier,
         "the carrier state has a degenerate linearization (flat potential)");
  nls_result out;
  out.omega = std::sqrt(om2);
  out.omega_p = k / out.omega;
  out.omega_pp = V2 / (om2 * out.omega);
  double num = 5 * V3 * V3 - 3 * V2 * V4;
  out.beta = num / (12 * out.omega * V2);
  out.beta_omega_pp = num / (12 * om2 * om2);
  out.focusing = out.beta_omega_pp > 0;
  return out;
}

int near_equilibrium_te_sign(const potential& p, double u0) {
  double V2 = p.deriv(u0, 2), V3 = p.deriv(u0, 3), V4 = p.deriv(u0, 4);
  double s = 5 * V3 * V3 - 3 * V2 * V4;
  return std::abs(s) < 1e-12 ? 0 : sign_of(s);
}

}  // namespace kgw
