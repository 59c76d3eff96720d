// Error taxonomy shared by every module.  Domain errors describe inputs for
// which the requested object does not exist (wrong region, separatrix data,
// sonic speed, ...); numerical errors describe a computation that exists in
// principle but failed to converge at the requested tolerances.
#pragma once

#include <stdexcept>
#include <string>

namespace kgw {

enum class errc {
  // domain errors -> process exit code 2
  on_separatrix,      // |E - critical value of V| below the separatrix guard
  sonic_speed,        // |c^2 - 1| below the sonic guard
  outside_region,     // (E, c) not in any admissible wave region
  not_normalized,     // operation requires the normalized potential form
  unsupported_order,  // derivative order beyond what the potential carries
  evanescent_carrier, // V''(u0) + k^2 <= 0: no oscillatory carrier wave
  degenerate_index,   // a sign index is requested at (numerically) zero value
  degenerate_tangent, // spectral-curve tangents degenerate (kappa ~ 0 or q^2)
  bad_config,         // malformed potential/config input
  // numerical errors -> process exit code 3
  bracket_failure,    // root bracketing/scanning found no sign change
  no_convergence,     // iteration exceeded its budget
  step_failure,       // adaptive ODE step size underflow / step budget
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::on_separatrix: return "OnSeparatrix";
    case errc::sonic_speed: return "SonicSpeed";
    case errc::outside_region: return "OutsideRegion";
    case errc::not_normalized: return "NotNormalized";
    case errc::unsupported_order: return "UnsupportedOrder";
    case errc::evanescent_carrier: return "EvanescentCarrier";
    case errc::degenerate_index: return "DegenerateIndex";
    case errc::degenerate_tangent: return "DegenerateTangent";
    case errc::bad_config: return "BadConfig";
    case errc::bracket_failure: return "BracketFailure";
    case errc::no_convergence: return "NoConvergence";
    case errc::step_failure: return "StepFailure";
  }
  return "UnknownError";
}

// True for errors caused by the mathematical inputs rather than by numerics.
inline bool is_domain_error(errc c) {
  switch (c) {
    case errc::bracket_failure:
    case errc::no_convergence:
    case errc::step_failure:
      return false;
    default:
      return true;
  }
}

struct error : std::runtime_error {
  errc code;
  error(errc c, const std::string& what)
      : std::runtime_error(what), code(c) {}
};

[[noreturn]] inline void fail(errc c, const std::string& what) {
  throw error(c, std::string(errc_name(c)) + ": " + what);
}

}  // namespace kgw
