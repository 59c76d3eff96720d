#include "kgwave/spectrum.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "kgwave/ode.hpp"
#include "kgwave/rootfind.hpp"

namespace kgw {

namespace {

constexpr cplx iu{0.0, 1.0};

// Real fundamental matrix over one period for real lambda (the system is
// real there), used by the real-axis scans and the parity index.
mat2 real_fundamental(const wave& w, double lambda) {
  const double c2m1 = w.c2m1;
  const double a22 = 2 * w.c * lambda / c2m1;
  const double lam2 = lambda * lambda;
  auto rhs = [&](double, const std::array<double, 6>& y,
                 std::array<double, 6>& dy) {
    dy[0] = y[1];
    dy[1] = -w.pot.deriv(y[0], 1) / c2m1;
    double a21 = -(lam2 + w.pot.deriv(y[0], 2)) / c2m1;
    dy[2] = y[4];
    dy[3] = y[5];
    dy[4] = a21 * y[2] + a22 * y[4];
    dy[5] = a21 * y[3] + a22 * y[5];
  };
  std::array<double, 6> y{w.u0, w.v0, 1, 0, 0, 1};
  auto ye = integrate_ode<6>(rhs, y, 0.0, w.T, w.opts.ode_rtol, w.opts.ode_atol);
  return {ye[2], ye[3], ye[4], ye[5]};
}

double real_evans(const wave& w, double lambda, int mu_sign) {
  mat2 M = real_fundamental(w, lambda);
  return 1.0 - mu_sign * trace(M) + det(M);
}

int sign_of(double x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

struct newton_out {
  bool ok = false;
  cplx lambda;
  double residual = 0;
};

newton_out newton_on_evans(const wave& w, cplx seed, cplx mu,
                           const spectrum_options& so) {
  cplx la = seed;
  for (int it = 0; it < so.newton_max; ++it) {
    cplx D = evans(monodromy(w, la).M, mu);
    if (!std::isfinite(D.real()) || !std::isfinite(D.imag())) return {};
    double h = so.newton_fd * (1 + std::abs(la));
    cplx Dp = evans(monodromy(w, la + h).M, mu);
    cplx Dm = evans(monodromy(w, la - h).M, mu);
    cplx dD = (Dp - Dm) / (2 * h);
    if (std::abs(dD) == 0) return {};
    cplx step = D / dD;
    la -= step;
    if (!std::isfinite(la.real()) || !std::isfinite(la.imag())) return {};
    if (std::abs(step) <= so.newton_tol * (1 + std::abs(la))) {
      double res = std::abs(evans(monodromy(w, la).M, mu));
      return {true, la, res};
    }
  }
  return {};
}

}  // namespace

cplx evans(const cmat2& M, cplx mu) { return mu * mu - mu * trace(M) + det(M); }

multiplier_pair multipliers(const cmat2& M) {
  cplx t = trace(M), d = det(M);
  cplx sq = std::sqrt(t * t - 4.0 * d);
  // pick the non-cancelling root of the quadratic
  if ((std::conj(t) * sq).real() < 0) sq = -sq;
  cplx mu1 = 0.5 * (t + sq);
  cplx mu2 = std::abs(mu1) > 0 ? d / mu1 : 0.5 * (t - sq);
  multiplier_pair out{mu1, mu2, false};
  if (std::abs(mu1 - mu2) <= 1e-12 * std::max(1.0, std::abs(mu1))) {
    out.coalesced = true;
    if (mu2.real() < mu1.real() ||
        (mu2.real() == mu1.real() && mu2.imag() < mu1.imag()))
      std::swap(out.mu1, out.mu2);
  }
  return out;
}

parity_result parity_index(const wave& w, const monodromy_expansion& ex) {
  double d2 = 2 * (ex.q * ex.q - ex.kappa);
  double scale = std::max({1.0, ex.q * ex.q, std::abs(ex.kappa)});
  if (std::abs(d2) >= 1e-6 * scale)
    return {sign_of(w.c2m1 * d2), 1, d2};
  // flat second derivative: probe the fourth by central differences
  double h = 1e-2;
  double D0 = real_evans(w, 0, +1);
  double d4 = (real_evans(w, 2 * h, +1) - 4 * real_evans(w, h, +1) + 6 * D0 -
               4 * real_evans(w, -h, +1) + real_evans(w, -2 * h, +1)) /
              (h * h * h * h);
  if (std::abs(d4) >= 1e-6 * scale) return {sign_of(w.c2m1 * d4), 2, d4};
  fail(errc::degenerate_index,
       "the restricted Evans function is flat through fourth order at the origin");
}

modulational_result modulational_index(const wave& w, const monodromy_expansion& ex) {
  double m12 = ex.M0.a12;
  double te_route = -w.c2m1 * w.T_E;
  if (std::abs(w.T_E) < 1e-8 || std::abs(m12) < 1e-8)
    fail(errc::degenerate_index,
         "the period is stationary in energy; the modulational index is undefined");
  // cross-check the routes only where the difference quotient is clearly
  // above its own noise floor
  if (std::abs(te_route) > 1e-4 && sign_of(m12) != sign_of(te_route))
    fail(errc::no_convergence,
         "monodromy and period-derivative routes disagree on the modulational index");
  return {sign_of(m12), m12, te_route};
}

tangent_result spectral_tangents(const wave& w, const monodromy_expansion& ex) {
  (void)w;
  double kappa = ex.kappa, q = ex.q;
  if (std::abs(kappa) <= 1e-10 || std::abs(kappa - q * q) <= 1e-10)
    fail(errc::degenerate_tangent,
         "curve tangents at the origin are degenerate for this wave");
  if (kappa > 0) {
    double r = std::sqrt(kappa);
    return {cplx{1.0 / (q + r), 0.0}, cplx{1.0 / (q - r), 0.0}, false};
  }
  double r = std::sqrt(-kappa);
  return {1.0 / (q + iu * r), 1.0 / (q - iu * r), true};
}

std::vector<curve_point> trace_curve(const wave& w, const monodromy_expansion& ex,
                                     const spectrum_options& so) {
  cplx s_branch[2];
  try {
    auto t = spectral_tangents(w, ex);
    s_branch[0] = t.s_plus;
    s_branch[1] = t.s_minus;
  } catch (const error& e) {
    if (e.code != errc::degenerate_tangent || std::abs(ex.q) < 1e-12) throw;
    // coinciding tangents: seed both branches on the shared slope
    s_branch[0] = cplx{1.0 / ex.q, 0.0};
    s_branch[1] = cplx{1.0 / ex.q, 0.0};
  }

  const int n = so.theta_steps;
  const double min_step = std::numbers::pi / static_cast<double>(1 << so.halving_limit);
  std::vector<curve_point> pts;
  pts.reserve(2 * n);

  for (int b = 0; b < 2; ++b) {
    struct target {
      double theta;
      bool emit;
    };
    std::vector<target> stack;
    for (int j = n; j >= 1; --j)
      stack.push_back({std::numbers::pi * j / n, true});

    double th_prev = 0, th_pp = 0;
    cplx la_prev = 0, la_pp = 0;
    bool have2 = false;
    while (!stack.empty()) {
      target tg = stack.back();
      double dth = tg.theta - th_prev;
      cplx seed = have2 && th_prev > th_pp
                      ? la_prev + (la_prev - la_pp) * (dth / (th_prev - th_pp))
                      : s_branch[b] * (iu * tg.theta);
      cplx mu = std::exp(iu * tg.theta);
      newton_out res = newton_on_evans(w, seed, mu, so);
      if (!res.ok) {
        if (dth / 2 < min_step) {
          std::ostringstream os;
          os << "spectral-curve continuation stalled near theta = " << tg.theta;
          fail(errc::no_convergence, os.str());
        }
        stack.push_back({th_prev + dth / 2, false});
        continue;
      }
      stack.pop_back();
      la_pp = la_prev;
      th_pp = th_prev;
      have2 = true;
      la_prev = res.lambda;
      th_prev = tg.theta;
      if (tg.emit)
        pts.push_back({tg.theta, res.lambda, b == 0 ? +1 : -1, res.residual});
    }
  }

  // enforce a deterministic labeling where the two branches coalesce
  for (int j = 0; j < n; ++j) {
    curve_point& a = pts[j];
    curve_point& c = pts[n + j];
    if (std::abs(a.lambda - c.lambda) <= 1e-12 * std::max(1.0, std::abs(a.lambda))) {
      bool swap_needed =
          c.lambda.real() < a.lambda.real() ||
          (c.lambda.real() == a.lambda.real() && c.lambda.imag() < a.lambda.imag());
      if (swap_needed) std::swap(a.lambda, c.lambda);
    }
  }
  return pts;
}

double spectral_bound(const wave& w, const spectrum_options& so) {
  auto samples = sample_profile(w, so.profile_samples);
  double m_hat = 0;
  for (const auto& s : samples)
    m_hat = std::max(m_hat, std::abs(w.pot.deriv(s.f, 2)));
  if (w.c2m1 < 0) return std::sqrt(m_hat);
  double c2 = w.c * w.c;
  return std::max(std::sqrt(2 * m_hat) * std::abs(w.c),
                  0.25 * (2 * c2 + 1 + (c2 - 1) / c2));
}

std::vector<real_root> real_periodic_eigenvalues(const wave& w, double bound,
                                                 const spectrum_options& so) {
  std::vector<real_root> roots;
  for (int mu_sign : {+1, -1}) {
    auto g = [&](double la) { return real_evans(w, la, mu_sign); };
    auto brackets = bracket_scan(g, so.scan_floor, bound, so.scan_points);
    for (const auto& [a, b] : brackets) {
      double r = bisect(g, a, b, so.bisect_tol, 200);
      // Secant polish: the bracket width alone leaves |g| ~ |g'| * tol, so
      // push the residual down to the evaluation floor.
      double xb = r, fb = std::abs(g(r));
      double x0 = r, f0 = g(r), x1 = r + so.bisect_tol, f1 = g(x1);
      if (std::abs(f1) < fb) {
        xb = x1;
        fb = std::abs(f1);
      }
      for (int it = 0; it < 6 && fb > 1e-14 && f1 != f0; ++it) {
        double x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
        if (!std::isfinite(x2)) break;
        x0 = x1;
        f0 = f1;
        x1 = x2;
        f1 = g(x1);
        if (std::abs(f1) < fb) {
          xb = x1;
          fb = std::abs(f1);
        }
      }
      roots.push_back({xb, mu_sign, fb});
    }
  }
  std::sort(roots.begin(), roots.end(), [](const real_root& x, const real_root& y) {
    return x.lambda != y.lambda ? x.lambda < y.lambda : x.mu_sign < y.mu_sign;
  });
  return roots;
}

double g_function(const wave& w, cplx lambda) {
  cmat2 Mh = hill_matrix_c(w, hill_parameter(w, lambda));
  cplx t = trace(Mh);
  cplx sq = std::sqrt(t * t - 4.0);  // unit determinant
  if ((std::conj(t) * sq).real() < 0) sq = -sq;
  cplx mu1 = 0.5 * (t + sq);
  double log_big = std::log(std::max(std::abs(mu1), 1.0));
  double qr = w.q * lambda.real();
  return qr * qr - log_big * log_big;
}

hill_bands hill_spectrum(const wave& w, const spectrum_options& so) {
  hill_bands out;
  auto samples = sample_profile(w, so.profile_samples);
  double p_max = 0;
  for (const auto& s : samples)
    p_max = std::max(p_max, std::abs(w.pot.deriv(s.f, 2) / w.c2m1));
  double half = std::max(1.0, 2 * p_max);
  out.window_lo = -half;
  out.window_hi = half;
  out.disc_at_zero = hill_matrix(w, 0).discriminant;

  const int n = so.hill_grid;
  std::vector<double> nu(n + 1), disc(n + 1);
  for (int i = 0; i <= n; ++i) {
    nu[i] = out.window_lo + 2 * half * i / n;
    disc[i] = hill_matrix(w, nu[i]).discriminant;
  }

  auto refine = [&](double a, double b, double level) {
    return bisect(
        [&](double x) { return hill_matrix(w, x).discriminant - level; }, a, b,
        so.bisect_tol, 200);
  };

  // collect all +-2 crossings, then walk the grid to assemble bands
  struct edge {
    double nu;
    int level;  // +1: disc = +2, -1: disc = -2
  };
  std::vector<edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int level : {+1, -1}) {
      double fa = disc[i] - 2.0 * level, fb = disc[i + 1] - 2.0 * level;
      if ((fa > 0) != (fb > 0))
        edges.push_back({refine(nu[i], nu[i + 1], 2.0 * level), level});
    }
  }
  std::sort(edges.begin(), edges.end(),
            [](const edge& a, const edge& b) { return a.nu < b.nu; });

  auto inside = [](double d) { return std::abs(d) <= 2.0; };
  std::vector<band> bands;
  bool in = inside(disc[0]);
  double start = out.window_lo;
  std::size_t k = 0;
  for (int i = 0; i < n; ++i) {
    bool next_in = inside(disc[i + 1]);
    if (next_in == in) continue;
    // locate the edge in this cell
    double e_nu = (nu[i] + nu[i + 1]) / 2;
    int e_level = 0;
    while (k < edges.size() && edges[k].nu < nu[i]) ++k;
    if (k < edges.size() && edges[k].nu <= nu[i + 1]) {
      e_nu = edges[k].nu;
      e_level = edges[k].level;
      ++k;
    }
    if (in) {
      bands.push_back({start, e_nu});
    } else {
      start = e_nu;
    }
    if (e_level > 0)
      out.periodic_edges.push_back(e_nu);
    else if (e_level < 0)
      out.antiperiodic_edges.push_back(e_nu);
    in = next_in;
  }
  if (in) bands.push_back({start, out.window_hi});

  // finite gaps between consecutive bands; drop the closed ones (tangencies)
  std::vector<band> merged;
  for (const auto& bd : bands) {
    if (!merged.empty()) {
      band gap{merged.back().hi, bd.lo};
      double width = gap.hi - gap.lo;
      double excess = 0;
      for (int j = 1; j < 64; ++j) {
        double x = gap.lo + width * j / 64;
        excess = std::max(excess, std::abs(hill_matrix(w, x).discriminant) - 2.0);
      }
      if (excess <= so.gap_drop_height || width < so.gap_drop_width) {
        // tangency, not an open gap: merge the bands and keep one edge marker
        double mid = 0.5 * (gap.lo + gap.hi);
        for (auto* lst : {&out.periodic_edges, &out.antiperiodic_edges}) {
          auto& v = *lst;
          auto near_gap = [&](double x) {
            return x >= gap.lo - 1e-12 && x <= gap.hi + 1e-12;
          };
          std::size_t cnt = std::count_if(v.begin(), v.end(), near_gap);
          if (cnt == 2) {
            v.erase(std::remove_if(v.begin(), v.end(), near_gap), v.end());
            v.push_back(mid);
            std::sort(v.begin(), v.end());
          }
        }
        merged.back().hi = bd.hi;
      } else {
        out.gaps.push_back(gap);
        merged.push_back(bd);
      }
    } else {
      merged.push_back(bd);
    }
  }
  out.bands = std::move(merged);
  return out;
}

instability_certificate find_unstable_point(const wave& w, const hill_bands& hb,
                                            const spectrum_options& so) {
  const band* chosen = nullptr;
  for (const auto& g : hb.gaps) {
    if (0.5 * (g.lo + g.hi) < 0) {
      chosen = &g;
      break;
    }
  }
  if (!chosen)
    fail(errc::bad_config, "no negative gap is available to seed the search");
  double nu_m = 0.5 * (chosen->lo + chosen->hi);
  double im = std::abs(w.c2m1) * std::sqrt(-nu_m);
  cplx lam_minus{0.0, im};
  double g_lo = g_function(w, lam_minus);
  if (!(g_lo < 0))
    fail(errc::no_convergence,
         "the gap preimage on the imaginary axis is not off-spectrum");
  double reach = 1.5 * spectral_bound(w, so);
  cplx lam_plus{reach, im};
  double g_hi = g_function(w, lam_plus);
  if (!(g_hi > 0))
    fail(errc::no_convergence,
         "no sign change of the multiplier balance along the horizontal ray");
  double a = 0, b = reach;
  while (b - a > so.bisect_tol) {
    double mid = 0.5 * (a + b);
    (g_function(w, {mid, im}) > 0 ? b : a) = mid;
  }
  instability_certificate cert;
  cert.lambda0 = cplx{0.5 * (a + b), im};
  cert.g_residual = std::abs(g_function(w, cert.lambda0));
  cert.gap = *chosen;

  cmat2 M = monodromy(w, cert.lambda0).M;
  multiplier_pair mp = multipliers(M);
  double best = std::abs(evans(M, std::exp(iu * std::arg(mp.mu1))));
  best = std::min(best, std::abs(evans(M, std::exp(iu * std::arg(mp.mu2)))));
  for (int j = 0; j < 1024; ++j) {
    double th = 2 * std::numbers::pi * j / 1024;
    best = std::min(best, std::abs(evans(M, std::exp(iu * th))));
  }
  cert.min_abs_evans = best;
  return cert;
}

infinite_speed_result infinite_speed_stability(const potential& p, double E,
                                               const wave_options& wo,
                                               const spectrum_options& so) {
  wave w = build_wave(p, E, std::numbers::sqrt2, wo);
  hill_bands hb = hill_spectrum(w, so);
  infinite_speed_result out;
  out.cls = w.cls;
  out.has_negative_gap = false;
  out.gap = {0, 0};
  for (const auto& g : hb.gaps) {
    if (g.lo < 0) {
      out.has_negative_gap = true;
      out.gap = g;
      break;
    }
  }
  if (!w.librational) {
    if (!out.has_negative_gap)
      fail(errc::no_convergence,
           "rotational band map unexpectedly shows no negative gap");
    out.stable = false;
  } else {
    out.stable = !out.has_negative_gap;
  }
  return out;
}

}  // namespace kgw
