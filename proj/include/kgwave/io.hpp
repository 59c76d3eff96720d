#pragma once

// Machine-readable output: JSON reports with embedded cross-identity
// residuals, CSV tables for profiles, spectral curves and parameter scans,
// and the one-line error envelope.  Every floating-point field is emitted
// deterministically, so equal inputs produce byte-identical output.

#include <string>
#include <vector>

#include "kgwave/modulation.hpp"
#include "kgwave/spectrum.hpp"

namespace kgw {

std::string format_double(double v);  // %.17g

std::string error_json(const error& e);

std::string report_json(const potential& p, const std::string& pot_label,
                        double E, double c, const wave_options& wo,
                        const spectrum_options& so);

std::string profile_csv(const wave& w, int samples);

std::string curve_csv(const std::vector<curve_point>& pts);

std::string hill_json(const hill_bands& hb);

std::string nls_json(const potential& p, const std::string& pot_label,
                     double u0, double k, double c, double offset,
                     const wave_options& wo);

std::string whitham_json(const potential& p, const std::string& pot_label,
                         double E, double c, const wave_options& wo);

struct scan_spec {
  double E_min = 0, E_max = 0;
  int E_steps = 1;
  double c_min = 0, c_max = 0;
  int c_steps = 1;
  int threads = 1;
  double separatrix_margin = 1e-3;
};

// Grid scan over (E, c); rows are emitted in E-major order regardless of the
// thread count.  Rows near a critical energy are kept but tagged rather than
// computed, and per-row failures land in the final column.
std::string scan_csv(const potential& p, const scan_spec& spec,
                     const wave_options& wo);

}  // namespace kgw
