#include "kgwave/wavetrain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "kgwave/quadrature.hpp"
#include "kgwave/rootfind.hpp"

namespace kgw {

namespace {

constexpr double two_pi = 2 * std::numbers::pi;
constexpr double inf = std::numeric_limits<double>::infinity();

struct region_info {
  wave_class cls{};
  double u0 = 0;
  // Open admissible E-interval for this class at this speed (for finite-
  // difference step sizing); +-inf when unbounded.
  double crit_lo = -inf, crit_hi = inf;
  // Anchors bracketing the librational turning points (well walls).
  double anchor_left = 0, anchor_right = 0;
};

std::string point_str(double E, double c) {
  std::ostringstream os;
  os << "(E, c) = (" << E << ", " << c << ")";
  return os.str();
}

region_info analyze(const potential& p, double E, double c,
                    const wave_options& opts) {
  double c2m1 = c * c - 1;
  if (std::abs(c2m1) <= opts.guard)
    fail(errc::sonic_speed, "|c^2 - 1| <= guard at " + point_str(E, c));
  auto cps = critical_points(p);
  if (cps.empty())
    fail(errc::outside_region, "potential has no equilibria");

  bool sup = c2m1 > 0;
  // The profile starts at a well minimizer (superluminal) or maximizer
  // (subluminal); pick the extreme value, leftmost on ties.
  int pivot = -1;
  for (std::size_t i = 0; i < cps.size(); ++i) {
    if (cps[i].type != (sup ? -1 : +1)) continue;
    if (pivot < 0 ||
        (sup ? cps[i].value < cps[pivot].value - 1e-12
             : cps[i].value > cps[pivot].value + 1e-12))
      pivot = static_cast<int>(i);
  }
  if (pivot < 0)
    fail(errc::outside_region,
         sup ? "no minimum of V to oscillate about" : "no maximum of V to oscillate about");

  const critical_point& p0 = cps[pivot];
  double E_eq = p0.value;

  // Guard every critical energy: the pivot's own value is the zero-amplitude
  // equilibrium limit; any other critical value at E is a separatrix.
  for (const auto& cp : cps) {
    if (std::abs(E - cp.value) <= opts.guard) {
      if (std::abs(cp.value - E_eq) <= opts.guard)
        fail(errc::outside_region,
             "E equals the equilibrium energy at " + point_str(E, c));
      fail(errc::on_separatrix, "E equals a critical energy at " + point_str(E, c));
    }
  }

  // Neighbouring opposite-type critical points (periodic wrap-around).
  auto neighbor = [&](bool right) -> const critical_point* {
    const critical_point* best = nullptr;
    double best_d = inf;
    for (const auto& cp : cps) {
      if (&cp == &p0) continue;
      double d = right ? cp.u - p0.u : p0.u - cp.u;
      if (p.periodic()) d = std::fmod(d + two_pi * 4, two_pi);
      if (d <= 1e-12) continue;
      if (d < best_d) {
        best_d = d;
        best = &cp;
      }
    }
    return best;
  };
  const critical_point* nl = neighbor(false);
  const critical_point* nr = neighbor(true);

  region_info info;
  info.u0 = p0.u;

  if (sup) {
    double barrier = inf;  // adjacent-wall height
    if (nl) barrier = std::min(barrier, nl->value);
    if (nr) barrier = std::min(barrier, nr->value);
    double rot_floor = -inf;  // rotation requires E above every critical value
    for (const auto& cp : cps) rot_floor = std::max(rot_floor, cp.value);
    if (E <= E_eq)
      fail(errc::outside_region, "E below the equilibrium energy at " + point_str(E, c));
    if (E < barrier) {
      info.cls = wave_class::superluminal_librational;
      info.crit_lo = E_eq;
      info.crit_hi = barrier;
      info.anchor_left = nl ? p0.u - std::fmod(p0.u - nl->u + 4 * two_pi, two_pi) : -inf;
      info.anchor_right = nr ? p0.u + std::fmod(nr->u - p0.u + 4 * two_pi, two_pi) : inf;
      return info;
    }
    if (E < rot_floor) {
      // Above the adjacent wall but below some higher barrier: oscillation in
      // a merged well.  Turning points are located by outward scan.
      info.cls = wave_class::superluminal_librational;
      info.crit_lo = barrier;
      info.crit_hi = rot_floor;
      info.anchor_left = -inf;
      info.anchor_right = inf;
      return info;
    }
    if (!p.periodic())
      fail(errc::outside_region,
           "E above every barrier of a non-periodic potential at " + point_str(E, c));
    info.cls = wave_class::superluminal_rotational;
    info.crit_lo = rot_floor;
    info.crit_hi = inf;
    return info;
  }

  // subluminal: motion where V - E > 0
  double floor_adj = -inf;
  if (nl) floor_adj = std::max(floor_adj, nl->value);
  if (nr) floor_adj = std::max(floor_adj, nr->value);
  double rot_ceiling = inf;
  for (const auto& cp : cps) rot_ceiling = std::min(rot_ceiling, cp.value);
  if (E >= E_eq)
    fail(errc::outside_region, "E above the equilibrium energy at " + point_str(E, c));
  if (E > floor_adj) {
    info.cls = wave_class::subluminal_librational;
    info.crit_lo = floor_adj;
    info.crit_hi = E_eq;
    info.anchor_left = nl ? p0.u - std::fmod(p0.u - nl->u + 4 * two_pi, two_pi) : -inf;
    info.anchor_right = nr ? p0.u + std::fmod(nr->u - p0.u + 4 * two_pi, two_pi) : inf;
    return info;
  }
  if (E > rot_ceiling) {
    info.cls = wave_class::subluminal_librational;  // merged inverted well
    info.crit_lo = rot_ceiling;
    info.crit_hi = floor_adj;
    info.anchor_left = -inf;
    info.anchor_right = inf;
    return info;
  }
  if (!p.periodic())
    fail(errc::outside_region,
         "E below every well of a non-periodic potential at " + point_str(E, c));
  info.cls = wave_class::subluminal_rotational;
  info.crit_lo = -inf;
  info.crit_hi = rot_ceiling;
  return info;
}

// ---------------------------------------------------------------- turning points

// Sign convention: s = +1 superluminal, -1 subluminal, so that
// gap(f) := s * (E - V(f)) >= 0 across the orbit.
double raw_gap(const potential& p, double E, int s, double x) {
  return s * (E - p(x));
}

// First turning point V(f) = E moving from u0 in direction dir = +-1,
// bracketed by `anchor` when finite.  Monotone wells get straight bisection;
// merged wells get an outward scan first.
double find_turning(const potential& p, double E, int s, double u0, int dir,
                    double anchor, double root_tol) {
  double limit = anchor;
  if (!std::isfinite(limit)) {
    // expand outward until the gap turns negative
    double step = 0.25;
    limit = u0;
    for (int i = 0; i < 200; ++i) {
      limit += dir * step;
      if (raw_gap(p, E, s, limit) < 0) break;
      step *= 1.3;
      if (i == 199)
        fail(errc::bracket_failure, "no turning point found by outward scan");
    }
  }
  // scan from u0 toward limit for the first sign change of gap
  const int n = 256;
  double prev = u0, g_prev = raw_gap(p, E, s, prev);
  if (g_prev <= 0)
    fail(errc::bracket_failure, "orbit interior has non-positive energy gap");
  for (int i = 1; i <= n; ++i) {
    double x = u0 + (limit - u0) * i / n;
    double g = raw_gap(p, E, s, x);
    if (g <= 0) {
      double r = bisect([&](double t) { return raw_gap(p, E, s, t); }, prev, x,
                        root_tol, 200);
      // polish to machine precision: the period quadrature is only first-order
      // tolerant of a turning point whose V-value misses E
      for (int it = 0; it < 3; ++it) {
        double gv = raw_gap(p, E, s, r);
        double gp = -s * p.deriv(r, 1);
        if (gp == 0) break;
        double step = gv / gp;
        r -= step;
        if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(r))) break;
      }
      return r;
    }
    prev = x;
  }
  fail(errc::bracket_failure, "turning point not bracketed before the well wall");
}

// Stable evaluation of gap(x) for the two-argument tanh-sinh integrand.
// sarg is the signed complement supplied by the rule: x = a - sarg near the
// lower endpoint (sarg < 0), x = b - sarg near the upper one (sarg > 0).
// Within `cut` of an endpoint that is a turning point, a 4-term Taylor
// expansion of V about that endpoint replaces the cancelling subtraction.
struct gap_endpoint {
  double x = 0;           // endpoint location
  bool is_turning = false;
  double d1 = 0, d2 = 0, d3 = 0, d4 = 0;  // V', V'', V''', V'''' there
};

struct stable_gap {
  const potential* p;
  double E;
  int s;
  gap_endpoint lo, hi;
  double cut = 1e-4;

  double operator()(double x, double sarg) const {
    const gap_endpoint* e = nullptr;
    double h = 0;  // x - endpoint
    if (sarg < 0 && -sarg < cut && lo.is_turning) {
      e = &lo;
      h = -sarg;
    } else if (sarg > 0 && sarg < cut && hi.is_turning) {
      e = &hi;
      h = -sarg;
    }
    if (e) {
      // V(e + h) - V(e) to fourth order; E = V(e) at a turning point.
      double dv = ((e->d4 / 24 * h + e->d3 / 6) * h + e->d2 / 2) * h * h + e->d1 * h;
      return std::max(-s * dv, 5e-324);
    }
    return std::max(s * (E - p->operator()(x)), 5e-324);
  }
};

gap_endpoint make_endpoint(const potential& p, double x, bool turning) {
  gap_endpoint e;
  e.x = x;
  e.is_turning = turning;
  if (turning) {
    e.d1 = p.deriv(x, 1);
    e.d2 = p.deriv(x, 2);
    e.d3 = p.deriv(x, 3);
    e.d4 = p.deriv(x, 4);
  }
  return e;
}

// Period by turning-point quadrature.
double period_quadrature(const potential& p, double E, double c2m1, bool lib,
                         double f_lo, double f_hi, double quad_tol) {
  int s = c2m1 > 0 ? +1 : -1;
  stable_gap g{&p, E, s, make_endpoint(p, f_lo, lib), make_endpoint(p, f_hi, lib),
               std::min(1e-4, 0.2 * (f_hi - f_lo))};
  double I = integrate_endpoint_aware(
      [&](double x, double sarg) { return 1.0 / std::sqrt(g(x, sarg)); }, f_lo,
      f_hi, quad_tol);
  double root = std::sqrt(std::abs(c2m1));
  return lib ? std::numbers::sqrt2 * root * I : root / std::numbers::sqrt2 * I;
}

double action_quadrature(const potential& p, double E, double c2m1, bool lib,
                         double f_lo, double f_hi, double quad_tol) {
  int s = c2m1 > 0 ? +1 : -1;
  stable_gap g{&p, E, s, make_endpoint(p, f_lo, lib), make_endpoint(p, f_hi, lib),
               std::min(1e-4, 0.2 * (f_hi - f_lo))};
  double I = integrate_endpoint_aware(
      [&](double x, double sarg) { return std::sqrt(g(x, sarg)); }, f_lo, f_hi,
      quad_tol);
  double root = std::sqrt(std::abs(c2m1));
  double sign = c2m1 > 0 ? 1.0 : -1.0;
  return (lib ? 2 * std::numbers::sqrt2 : std::numbers::sqrt2) * sign * root * I;
}

// Period at a shifted energy (used by the finite-difference dT/dE).
double period_at(const potential& p, double Eshift, double c2m1,
                 const region_info& info, const wave_options& opts) {
  int s = c2m1 > 0 ? +1 : -1;
  bool lib = info.cls == wave_class::superluminal_librational ||
             info.cls == wave_class::subluminal_librational;
  if (!lib) {
    return period_quadrature(p, Eshift, c2m1, false, info.u0, info.u0 + two_pi,
                             opts.quad_tol);
  }
  double f_lo = find_turning(p, Eshift, s, info.u0, -1, info.anchor_left, opts.root_tol);
  double f_hi = find_turning(p, Eshift, s, info.u0, +1, info.anchor_right, opts.root_tol);
  return period_quadrature(p, Eshift, c2m1, true, f_lo, f_hi, opts.quad_tol);
}

// 5-point central difference with one Richardson step.
template <class F>
double five_point_derivative(F&& f, double x, double h) {
  auto d = [&](double hh) {
    return (-f(x + 2 * hh) + 8 * f(x + hh) - 8 * f(x - hh) + f(x - 2 * hh)) /
           (12 * hh);
  };
  double dh = d(h), dh2 = d(h / 2);
  return (16 * dh2 - dh) / 15;
}

// ------------------------------------------------------------------ delta

// Regularized integral of 1/f_z^2 over one period for librational waves:
// subtract the double poles at the two zeros z_k of f_z, integrate the
// remainder, and add the closed-form finite parts of the poles.
double delta_librational(const wave& w) {
  const double T = w.T;
  const double z1 = w.turning_z[0], z2 = w.turning_z[1];
  struct pole {
    double z, A, b, ct;  // f_z = A tau (1 + b tau^2 + ct tau^4 + ...)
  };
  auto make_pole = [&](double zk) {
    double phi = w.f(zk);
    double c2m1 = w.c2m1;
    double A = -w.pot.deriv(phi, 1) / c2m1;
    double B = -w.pot.deriv(phi, 2) * A / (6 * c2m1);
    double f6 = -3 * w.pot.deriv(phi, 3) * A * A / c2m1 +
                w.pot.deriv(phi, 2) * w.pot.deriv(phi, 2) * A / (c2m1 * c2m1);
    double C = f6 / 120;
    return pole{zk, A, B / A, C / A};
  };
  pole p1 = make_pole(z1), p2 = make_pole(z2);

  auto pole_term = [](const pole& p, double y) {
    double d = y - p.z;
    return 1.0 / (p.A * p.A * d * d);
  };
  // Near a zero, 1/f_z^2 - 1/(A tau)^2 evaluated from the odd series of f_z:
  // with u = b tau^2 + ct tau^4,  (1+u)^{-2} - 1 = -u (2+u)/(1+u)^2 exactly.
  // The u/tau^2 ratio is formed symbolically so tau^2 underflow is harmless.
  auto near_term = [](const pole& p, double tau) {
    double r = p.b + p.ct * tau * tau;  // u / tau^2
    double u = r * tau * tau;
    double one_p = 1 + u;
    return -r * (2 + u) / (one_p * one_p) / (p.A * p.A);
  };

  double tau_cut = std::min({0.05, 0.25 * z1, 0.25 * (z2 - z1), 0.25 * (T - z2)});

  // integrand over a segment [a, b]; pa/pb point at the pole sitting at the
  // segment endpoint (or null for the regular endpoints 0 and T).
  auto segment = [&](double a, double b, const pole* pa, const pole* pb) {
    return integrate_endpoint_aware(
        [&](double y, double sarg) {
          if (pa && sarg < 0 && -sarg < tau_cut)
            return near_term(*pa, -sarg) - (pb ? pole_term(*pb, y)
                                               : pole_term(pa == &p1 ? p2 : p1, y));
          if (pb && sarg > 0 && sarg < tau_cut)
            return near_term(*pb, -sarg) - (pa ? pole_term(*pa, y)
                                               : pole_term(pb == &p1 ? p2 : p1, y));
          double fzv = w.fz(y);
          return 1.0 / (fzv * fzv) - pole_term(p1, y) - pole_term(p2, y);
        },
        a, b, w.opts.quad_tol);
  };

  double val = segment(0, z1, nullptr, &p1) + segment(z1, z2, &p1, &p2) +
               segment(z2, T, &p2, nullptr);
  // finite parts of the subtracted poles over [0, T]
  val -= (1.0 / (p1.A * p1.A)) * (1.0 / z1 + 1.0 / (T - z1));
  val -= (1.0 / (p2.A * p2.A)) * (1.0 / z2 + 1.0 / (T - z2));
  return val;
}

double delta_rotational(const wave& w) {
  return integrate(
      [&](double y) {
        double fzv = w.fz(y);
        return 1.0 / (fzv * fzv);
      },
      0.0, w.T, w.opts.quad_tol);
}

}  // namespace

double wave::f(double z) const {
  double zr = std::fmod(z, T);
  if (zr < 0) zr += T;
  double base = path.eval(zr)[0];
  if (!librational) base += two_pi * std::round((z - zr) / T);
  return base;
}

double wave::fz(double z) const {
  double zr = std::fmod(z, T);
  if (zr < 0) zr += T;
  return path.eval(zr)[1];
}

double wave::energy_residual(double z) const {
  double fv = f(z), fzv = fz(z);
  return 0.5 * c2m1 * fzv * fzv + pot(fv) - E;
}

wave_class classify(const potential& p, double E, double c,
                    const wave_options& opts) {
  return analyze(p, E, c, opts).cls;
}

wave build_wave(const potential& p, double E, double c, const wave_options& opts) {
  region_info info = analyze(p, E, c, opts);
  wave w;
  w.pot = p;
  w.opts = opts;
  w.E = E;
  w.c = c;
  w.c2m1 = c * c - 1;
  w.cls = info.cls;
  w.librational = info.cls == wave_class::superluminal_librational ||
                  info.cls == wave_class::subluminal_librational;
  w.u0 = info.u0;
  double gap0 = 2 * (E - p(info.u0)) / w.c2m1;
  if (gap0 <= 0)
    fail(errc::outside_region, "initial slope is not real at " + point_str(E, c));
  w.v0 = std::sqrt(gap0);

  int s = w.c2m1 > 0 ? +1 : -1;
  if (w.librational) {
    w.f_lo = find_turning(p, E, s, w.u0, -1, info.anchor_left, opts.root_tol);
    w.f_hi = find_turning(p, E, s, w.u0, +1, info.anchor_right, opts.root_tol);
  } else {
    w.f_lo = w.u0;
    w.f_hi = w.u0 + two_pi;
  }

  w.T = period_quadrature(p, E, w.c2m1, w.librational, w.f_lo, w.f_hi, opts.quad_tol);
  w.W_quad = action_quadrature(p, E, w.c2m1, w.librational, w.f_lo, w.f_hi, opts.quad_tol);

  // profile pass: f, f', and the running integral of f'^2
  auto rhs = [&](double, const std::array<double, 3>& y, std::array<double, 3>& dy) {
    dy[0] = y[1];
    dy[1] = -p.deriv(y[0], 1) / w.c2m1;
    dy[2] = y[1] * y[1];
  };
  std::array<double, 3> y0{w.u0, w.v0, 0.0};
  auto yT = integrate_ode<3>(rhs, y0, 0.0, w.T, opts.ode_rtol, opts.ode_atol, &w.path);
  w.W = w.c2m1 * yT[2];

  // first-return validation
  double f_expect = w.u0 + (w.librational ? 0.0 : two_pi);
  double scale_f = std::max(1.0, std::abs(f_expect));
  double scale_v = std::max(1.0, w.v0);
  if (std::abs(yT[0] - f_expect) > 1e-8 * scale_f ||
      std::abs(yT[1] - w.v0) > 1e-8 * scale_v) {
    std::ostringstream os;
    os << "profile failed to return to its initial phase point after one "
          "period: |f(T) - f(0)| = "
       << std::abs(yT[0] - f_expect) << ", |f'(T) - f'(0)| = "
       << std::abs(yT[1] - w.v0) << " at T = " << w.T;
    fail(errc::no_convergence, os.str());
  }

  // zeros of f' (librational only)
  if (w.librational) {
    std::vector<double> zeros;
    const int n = 512;
    double prev_z = 0, prev = w.v0;
    for (int i = 1; i <= n; ++i) {
      double z = w.T * i / n;
      double val = w.path.eval(z)[1];
      if ((prev > 0) != (val > 0)) {
        zeros.push_back(bisect([&](double t) { return w.path.eval(t)[1]; },
                               prev_z, z, opts.root_tol, 200));
      }
      prev_z = z;
      prev = val;
    }
    if (zeros.size() != 2)
      fail(errc::no_convergence,
           "librational profile must have exactly two slope reversals per period");
    w.turning_z[0] = zeros[0];
    w.turning_z[1] = zeros[1];
  }

  // dT/dE
  double dist_lo = std::isfinite(info.crit_lo) ? E - info.crit_lo : inf;
  double dist_hi = std::isfinite(info.crit_hi) ? info.crit_hi - E : inf;
  double dist = std::min(dist_lo, dist_hi);
  double h = 1e-4 * (std::isfinite(dist) ? dist : 1.0);
  auto T_of = [&](double Es) { return period_at(p, Es, w.c2m1, info, opts); };
  if (w.librational) {
    w.T_E = five_point_derivative(T_of, E, h);
  } else {
    // closed-form integrand, plus a finite-difference cross-check
    double I = integrate(
        [&](double x) { return std::pow(std::abs(E - p(x)), -1.5); }, w.u0,
        w.u0 + two_pi, opts.quad_tol);
    w.T_E = (1 - c * c) / (2 * std::numbers::sqrt2 * std::sqrt(std::abs(w.c2m1))) * I;
    if (dist > 1e-2) {
      double fd = five_point_derivative(T_of, E, h);
      if (std::abs(fd - w.T_E) > 1e-5 * std::max(1.0, std::abs(w.T_E)))
        fail(errc::no_convergence,
             "dT/dE disagreement between quadrature and finite differences");
    }
  }

  w.delta = w.librational ? delta_librational(w) : delta_rotational(w);
  w.q = c * w.T / w.c2m1;
  return w;
}

double action_at(const potential& p, double E, double c, const wave_options& opts) {
  region_info info = analyze(p, E, c, opts);
  double c2m1 = c * c - 1;
  int s = c2m1 > 0 ? +1 : -1;
  bool lib = info.cls == wave_class::superluminal_librational ||
             info.cls == wave_class::subluminal_librational;
  double f_lo, f_hi;
  if (lib) {
    f_lo = find_turning(p, E, s, info.u0, -1, info.anchor_left, opts.root_tol);
    f_hi = find_turning(p, E, s, info.u0, +1, info.anchor_right, opts.root_tol);
  } else {
    f_lo = info.u0;
    f_hi = info.u0 + two_pi;
  }
  return action_quadrature(p, E, c2m1, lib, f_lo, f_hi, opts.quad_tol);
}

std::vector<profile_sample> sample_profile(const wave& w, int n) {
  if (n < 1) fail(errc::bad_config, "profile needs at least one sample interval");
  std::vector<profile_sample> out;
  out.reserve(n + 1);
  for (int i = 0; i <= n; ++i) {
    double z = w.T * i / n;
    auto y = w.path.eval(z);
    out.push_back({z, y[0], y[1],
                   0.5 * w.c2m1 * y[1] * y[1] + w.pot(y[0]) - w.E});
  }
  return out;
}

}  // namespace kgw
