#include "kgwave/io.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace kgw {

using nlohmann::json;

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string error_json(const error& e) {
  json j{{"schema", 1},
         {"error", {{"code", errc_name(e.code)}, {"what", e.what()}}}};
  return j.dump();
}

namespace {

json complex_pair(const cplx& z) { return json::array({z.real(), z.imag()}); }

json wave_block(const wave& w) {
  json j{{"region", wave_class_name(w.cls)},
         {"T", w.T},
         {"T_E", w.T_E},
         {"delta", w.delta},
         {"W", w.W},
         {"W_quad", w.W_quad},
         {"q", w.q},
         {"u0", w.u0},
         {"v0", w.v0},
         {"f_lo", w.f_lo},
         {"f_hi", w.f_hi}};
  if (w.librational) j["turning_z"] = {w.turning_z[0], w.turning_z[1]};
  return j;
}

}  // namespace

std::string report_json(const potential& p, const std::string& pot_label,
                        double E, double c, const wave_options& wo,
                        const spectrum_options& so) {
  wave w = build_wave(p, E, c, wo);
  monodromy_expansion ex = expand_monodromy(w);

  json j{{"schema", 1}, {"potential", pot_label}, {"E", E}, {"c", c}};
  j["wave"] = wave_block(w);
  j["expansion"] = {{"q", ex.q},
                    {"kappa", ex.kappa},
                    {"hill_slope", ex.hill_slope},
                    {"I_f11_sq", ex.I_f11_sq},
                    {"I_f11_f12", ex.I_f11_f12},
                    {"I_f12_sq", ex.I_f12_sq},
                    {"M0", {ex.M0.a11, ex.M0.a12, ex.M0.a21, ex.M0.a22}}};

  // cross-identity residuals: multiplier product vs. the trace rule at two
  // probe points, the two delta routes, and the two action routes
  double abel = std::max(monodromy(w, cplx{0.1, 0.0}).abel_residual,
                         monodromy(w, cplx{0.3, 0.2}).abel_residual);
  j["residuals"] = {{"abel", abel},
                    {"delta_identity", ex.delta_identity_residual},
                    {"action_identity", ex.action_identity_residual},
                    {"action_routes", std::abs(w.W - w.W_quad) / std::max(1.0, std::abs(w.W))},
                    {"action_derivative", action_derivative_residual(w)},
                    {"hill_disc_at_zero", std::abs(hill_matrix(w, 0).discriminant - 2)}};

  try {
    modulational_result mr = modulational_index(w, ex);
    parity_result pr = parity_index(w, ex);
    j["indices"] = {{"rho", mr.rho}, {"gamma", pr.gamma}, {"p", pr.p}};
  } catch (const error& e) {
    j["indices"] = {{"error", errc_name(e.code)}};
  }
  try {
    tangent_result tr = spectral_tangents(w, ex);
    j["tangents"] = {{"s_plus", complex_pair(tr.s_plus)},
                     {"s_minus", complex_pair(tr.s_minus)},
                     {"conjugate_pair", tr.conjugate_pair}};
  } catch (const error& e) {
    j["tangents"] = {{"error", errc_name(e.code)}};
  }
  try {
    whitham_result wr = whitham_classify(w);
    j["whitham"] = {{"kind", whitham_kind_name(wr.kind)},
                    {"v1", complex_pair(wr.v1)},
                    {"v2", complex_pair(wr.v2)},
                    {"U", {wr.u11, wr.u12, wr.u21, wr.u22}},
                    {"radicand", wr.radicand},
                    {"denominator", wr.denominator}};
    // both routes to the same quadratic form behind the characteristic speeds
    double den_pred = w.c2m1 * w.c2m1 * (ex.q * ex.q - ex.kappa);
    j["whitham"]["velocity_identity_residual"] =
        std::abs(wr.denominator - den_pred) / std::max(1.0, std::abs(den_pred));
  } catch (const error& e) {
    j["whitham"] = {{"error", errc_name(e.code)}};
  }
  j["spectral_bound"] = spectral_bound(w, so);
  return j.dump(2);
}

std::string profile_csv(const wave& w, int samples) {
  auto rows = sample_profile(w, samples);
  std::string out = "z,f,f_z,energy_residual\n";
  for (const auto& r : rows) {
    out += format_double(r.z);
    out += ',';
    out += format_double(r.f);
    out += ',';
    out += format_double(r.f_z);
    out += ',';
    out += format_double(r.energy_residual);
    out += '\n';
  }
  return out;
}

std::string curve_csv(const std::vector<curve_point>& pts) {
  std::string out = "theta,re_lambda,im_lambda,branch,abs_evans\n";
  for (const auto& p : pts) {
    out += format_double(p.theta);
    out += ',';
    out += format_double(p.lambda.real());
    out += ',';
    out += format_double(p.lambda.imag());
    out += ',';
    out += std::to_string(p.branch);
    out += ',';
    out += format_double(p.abs_evans);
    out += '\n';
  }
  return out;
}

std::string hill_json(const hill_bands& hb) {
  json j{{"schema", 1},
         {"window", {hb.window_lo, hb.window_hi}},
         {"disc_at_zero", hb.disc_at_zero}};
  j["bands"] = json::array();
  for (const auto& b : hb.bands) j["bands"].push_back({b.lo, b.hi});
  j["periodic"] = hb.periodic_edges;
  j["antiperiodic"] = hb.antiperiodic_edges;
  j["gaps"] = json::array();
  for (const auto& g : hb.gaps) j["gaps"].push_back({g.lo, g.hi});
  return j.dump(2);
}

std::string nls_json(const potential& p, const std::string& pot_label,
                     double u0, double k, double c, double offset,
                     const wave_options& wo) {
  nls_result r = nls_coefficients(p, u0, k);
  json j{{"schema", 1},
         {"potential", pot_label},
         {"u0", u0},
         {"k", k},
         {"omega", r.omega},
         {"omega_p", r.omega_p},
         {"omega_pp", r.omega_pp},
         {"beta", r.beta},
         {"beta_omega_pp", r.beta_omega_pp},
         {"focusing", r.focusing},
         {"near_equilibrium_sign", near_equilibrium_te_sign(p, u0)}};
  // independent route: the modulational index of a small wave over the same
  // equilibrium; focusing must match rho = -1
  try {
    double E = p(u0) + offset;
    wave w = build_wave(p, E, c, wo);
    monodromy_expansion ex = expand_monodromy(w);
    modulational_result mr = modulational_index(w, ex);
    j["comparison"] = {{"E", E},
                       {"c", c},
                       {"rho", mr.rho},
                       {"agrees", r.focusing == (mr.rho == -1)}};
  } catch (const error& e) {
    j["comparison"] = {{"error", errc_name(e.code)}};
  }
  return j.dump(2);
}

std::string whitham_json(const potential& p, const std::string& pot_label,
                         double E, double c, const wave_options& wo) {
  wave w = build_wave(p, E, c, wo);
  averaged_fluxes av = averaged_quantities(w);
  json j{{"schema", 1},
         {"potential", pot_label},
         {"E", E},
         {"c", c},
         {"region", wave_class_name(w.cls)},
         {"averaged",
          {{"d1", av.d1}, {"f1", av.f1}, {"d2", av.d2}, {"f2", av.f2}}},
         {"action_derivative_residual", action_derivative_residual(w)}};
  try {
    whitham_result wr = whitham_classify(w);
    j["kind"] = whitham_kind_name(wr.kind);
    j["v1"] = complex_pair(wr.v1);
    j["v2"] = complex_pair(wr.v2);
    j["U"] = {wr.u11, wr.u12, wr.u21, wr.u22};
  } catch (const error& e) {
    j["kind_error"] = errc_name(e.code);
  }
  return j.dump(2);
}

std::string scan_csv(const potential& p, const scan_spec& spec,
                     const wave_options& wo) {
  std::vector<double> crit_values;
  for (const auto& cp : critical_points(p)) crit_values.push_back(cp.value);

  const int nE = spec.E_steps, nc = spec.c_steps;
  const int cells = nE * nc;
  std::vector<std::string> rows(cells);

  auto cell_value = [&](int iE, int ic) {
    double E = nE == 1 ? spec.E_min
                       : spec.E_min + (spec.E_max - spec.E_min) * iE / (nE - 1);
    double c = nc == 1 ? spec.c_min
                       : spec.c_min + (spec.c_max - spec.c_min) * ic / (nc - 1);
    std::string region, rho, gamma, kind, v1r, v1i, v2r, v2i, err;
    bool near_crit = false;
    for (double v : crit_values)
      near_crit = near_crit || std::abs(E - v) <= spec.separatrix_margin;
    if (near_crit) {
      err = "NearSeparatrix";
    } else {
      try {
        wave w = build_wave(p, E, c, wo);
        region = wave_class_name(w.cls);
        whitham_result wr = whitham_classify(w);
        kind = whitham_kind_name(wr.kind);
        v1r = format_double(wr.v1.real());
        v1i = format_double(wr.v1.imag());
        v2r = format_double(wr.v2.real());
        v2i = format_double(wr.v2.imag());
        monodromy_expansion ex = expand_monodromy(w);
        rho = std::to_string(modulational_index(w, ex).rho);
        gamma = std::to_string(parity_index(w, ex).gamma);
      } catch (const error& e) {
        err = errc_name(e.code);
      } catch (const std::exception&) {
        err = errc_name(errc::no_convergence);
      }
    }
    return format_double(E) + ',' + format_double(c) + ',' + region + ',' +
           rho + ',' + gamma + ',' + kind + ',' + v1r + ',' + v1i + ',' + v2r +
           ',' + v2i + ',' + err + '\n';
  };

  int workers = std::max(1, spec.threads);
  if (workers == 1) {
    for (int i = 0; i < cells; ++i) rows[i] = cell_value(i / nc, i % nc);
  } else {
    std::atomic<int> next{0};
    auto work = [&]() {
      for (int i = next.fetch_add(1); i < cells; i = next.fetch_add(1))
        rows[i] = cell_value(i / nc, i % nc);
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  std::string out = "E,c,region,rho,gamma,whitham_kind,v1_re,v1_im,v2_re,v2_im,error\n";
  for (const auto& r : rows) out += r;
  return out;
}

}  // namespace kgw
