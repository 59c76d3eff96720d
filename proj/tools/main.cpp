// Command-line front end: builds periodic traveling waves of nonlinear
// Klein-Gordon equations and reports their modulation and spectral-stability
// diagnostics as JSON or CSV.

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "kgwave/io.hpp"

namespace {

kgw::potential load_potential(const std::string& spec) {
  if (spec == "sine-gordon") return kgw::make_sine_gordon();
  std::ifstream in(spec);
  if (!in) kgw::fail(kgw::errc::bad_config, "cannot open potential file: " + spec);
  std::ostringstream ss;
  ss << in.rdbuf();
  return kgw::potential_from_json(ss.str());
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    if (!content.empty() && content.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(out_path);
  if (!out) kgw::fail(kgw::errc::bad_config, "cannot open output file: " + out_path);
  out << content;
  if (!content.empty() && content.back() != '\n') out << '\n';
}

struct common_flags {
  std::string pot_spec = "sine-gordon";
  std::string out_path;
  kgw::wave_options wo;

  void attach(CLI::App* cmd) {
    cmd->add_option("--potential", pot_spec,
                    "potential: 'sine-gordon' or a JSON file path");
    cmd->add_option("--out", out_path, "output file (default: stdout)");
    cmd->add_option("--tol-quad", wo.quad_tol, "quadrature tolerance");
    cmd->add_option("--tol-ode-rel", wo.ode_rtol, "integrator relative tolerance");
    cmd->add_option("--tol-ode-abs", wo.ode_atol, "integrator absolute tolerance");
    cmd->add_option("--tol-root", wo.root_tol, "root-finding tolerance");
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"periodic traveling waves of nonlinear Klein-Gordon equations: "
               "construction, spectral stability, and modulation theory"};
  app.require_subcommand(1);

  // ---- report
  auto* rep = app.add_subcommand("report", "full diagnostic report for one wave");
  common_flags rep_f;
  double rep_E = 0, rep_c = 0;
  rep_f.attach(rep);
  rep->add_option("--E", rep_E, "energy level")->required();
  rep->add_option("--c", rep_c, "wave speed")->required();

  // ---- scan
  auto* scn = app.add_subcommand("scan", "grid scan over energy and speed");
  common_flags scn_f;
  kgw::scan_spec spec;
  scn_f.attach(scn);
  scn->add_option("--E-min", spec.E_min)->required();
  scn->add_option("--E-max", spec.E_max)->required();
  scn->add_option("--E-steps", spec.E_steps)->required();
  scn->add_option("--c-min", spec.c_min)->required();
  scn->add_option("--c-max", spec.c_max)->required();
  scn->add_option("--c-steps", spec.c_steps)->required();
  scn->add_option("--threads", spec.threads, "worker threads (output independent)");
  scn->add_option("--separatrix-margin", spec.separatrix_margin,
                  "skip margin around critical energies");

  // ---- trace
  auto* trc = app.add_subcommand("trace", "trace the spectral curves through the origin");
  common_flags trc_f;
  double trc_E = 0, trc_c = 0;
  int theta_steps = 256;
  trc_f.attach(trc);
  trc->add_option("--E", trc_E)->required();
  trc->add_option("--c", trc_c)->required();
  trc->add_option("--theta-steps", theta_steps, "points per branch over (0, pi]");

  // ---- hill
  auto* hil = app.add_subcommand("hill", "band map of the rescaled self-adjoint form");
  common_flags hil_f;
  double hil_E = 0, hil_c = 0;
  int hill_grid = 2000;
  hil_f.attach(hil);
  hil->add_option("--E", hil_E)->required();
  hil->add_option("--c", hil_c)->required();
  hil->add_option("--grid", hill_grid, "discriminant grid resolution");

  // ---- nls
  auto* nls = app.add_subcommand("nls", "cubic envelope coefficients about an equilibrium");
  common_flags nls_f;
  double nls_k = 0, nls_c = std::numbers::sqrt2, nls_offset = 1e-3;
  double nls_u0 = std::numeric_limits<double>::quiet_NaN();
  nls_f.attach(nls);
  nls->add_option("--k", nls_k, "carrier wavenumber")->required();
  nls->add_option("--u0", nls_u0, "carrier equilibrium (default: global minimizer)");
  nls->add_option("--c", nls_c, "speed of the comparison wave");
  nls->add_option("--nls-offset", nls_offset,
                  "energy offset of the small comparison wave");

  // ---- whitham
  auto* wth = app.add_subcommand("whitham", "averaged quantities and characteristic type");
  common_flags wth_f;
  double wth_E = 0, wth_c = 0;
  wth_f.attach(wth);
  wth->add_option("--E", wth_E)->required();
  wth->add_option("--c", wth_c)->required();

  // ---- profile
  auto* prf = app.add_subcommand("profile", "sampled wave profile over one period");
  common_flags prf_f;
  double prf_E = 0, prf_c = 0;
  int prf_samples = 256;
  prf_f.attach(prf);
  prf->add_option("--E", prf_E)->required();
  prf->add_option("--c", prf_c)->required();
  prf->add_option("--samples", prf_samples, "sample intervals over one period");

  CLI11_PARSE(app, argc, argv);

  try {
    kgw::spectrum_options so;
    if (rep->parsed()) {
      auto p = load_potential(rep_f.pot_spec);
      emit(rep_f.out_path, kgw::report_json(p, rep_f.pot_spec, rep_E, rep_c, rep_f.wo, so));
    } else if (scn->parsed()) {
      auto p = load_potential(scn_f.pot_spec);
      emit(scn_f.out_path, kgw::scan_csv(p, spec, scn_f.wo));
    } else if (trc->parsed()) {
      auto p = load_potential(trc_f.pot_spec);
      so.theta_steps = theta_steps;
      kgw::wave w = kgw::build_wave(p, trc_E, trc_c, trc_f.wo);
      auto ex = kgw::expand_monodromy(w);
      emit(trc_f.out_path, kgw::curve_csv(kgw::trace_curve(w, ex, so)));
    } else if (hil->parsed()) {
      auto p = load_potential(hil_f.pot_spec);
      so.hill_grid = hill_grid;
      kgw::wave w = kgw::build_wave(p, hil_E, hil_c, hil_f.wo);
      emit(hil_f.out_path, kgw::hill_json(kgw::hill_spectrum(w, so)));
    } else if (nls->parsed()) {
      auto p = load_potential(nls_f.pot_spec);
      double u0 = nls_u0;
      if (std::isnan(u0)) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& cp : kgw::critical_points(p)) {
          if (cp.type == -1 && cp.value < best) {
            best = cp.value;
            u0 = cp.u;
          }
        }
        if (std::isnan(u0))
          kgw::fail(kgw::errc::outside_region, "no minimizer to carry the envelope");
      }
      emit(nls_f.out_path,
           kgw::nls_json(p, nls_f.pot_spec, u0, nls_k, nls_c, nls_offset, nls_f.wo));
    } else if (wth->parsed()) {
      auto p = load_potential(wth_f.pot_spec);
      emit(wth_f.out_path, kgw::whitham_json(p, wth_f.pot_spec, wth_E, wth_c, wth_f.wo));
    } else if (prf->parsed()) {
      auto p = load_potential(prf_f.pot_spec);
      kgw::wave w = kgw::build_wave(p, prf_E, prf_c, prf_f.wo);
      emit(prf_f.out_path, kgw::profile_csv(w, prf_samples));
    }
  } catch (const kgw::error& e) {
    std::cerr << kgw::error_json(e) << '\n';
    return kgw::is_domain_error(e.code) ? 2 : 3;
  } catch (const std::exception& e) {
    kgw::error wrapped(kgw::errc::no_convergence, e.what());
    std::cerr << kgw::error_json(wrapped) << '\n';
    return 3;
  }
  return 0;
}
