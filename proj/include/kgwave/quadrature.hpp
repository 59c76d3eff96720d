// Thin wrapper around Boost.Math tanh-sinh quadrature.
//
// Integrands with inverse-square-root endpoint behaviour (turning-point
// integrals) are integrated in the two-argument form f(x, xc), where xc is
// the signed distance to the nearest endpoint supplied by the rule itself;
// this lets callers evaluate quantities like E - V(x) by a Taylor expansion
// in xc near the endpoint instead of a catastrophically cancelling
// subtraction of O(1) values.
#pragma once

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <limits>

#include "kgwave/errors.hpp"

namespace kgw {

inline constexpr double default_quad_tol = 1e-11;

// One-argument integrand over [a, b].
template <class F>
double integrate(F&& f, double a, double b, double tol = default_quad_tol) {
  boost::math::quadrature::tanh_sinh<double> rule;
  double err = 0, l1 = 0;
  double v = rule.integrate(f, a, b, tol, &err, &l1);
  if (!std::isfinite(v)) fail(errc::no_convergence, "tanh-sinh returned a non-finite value");
  return v;
}

// Two-argument integrand f(x, xc); xc is the signed offset to the nearer
// endpoint, following the Boost convention: xc = a - x < 0 near the lower
// endpoint, xc = b - x > 0 near the upper one, so |xc| is the distance and
// it stays fully accurate even when x has rounded onto the endpoint.
template <class F>
double integrate_endpoint_aware(F&& f, double a, double b,
                                double tol = default_quad_tol) {
  boost::math::quadrature::tanh_sinh<double> rule;
  double err = 0, l1 = 0;
  double v = rule.integrate(f, a, b, tol, &err, &l1);
  if (!std::isfinite(v)) fail(errc::no_convergence, "tanh-sinh returned a non-finite value");
  return v;
}

}  // namespace kgw
