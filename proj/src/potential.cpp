#include "kgwave/potential.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "json.hpp"
#include "kgwave/rootfind.hpp"

namespace kgw {

namespace {
constexpr double two_pi = 2 * std::numbers::pi;

// d^n/du^n cos(j u) = j^n cos(j u + n pi/2), same shift for sin.
double trig_term_deriv(double a, double b, int j, double u, int n) {
  double jn = std::pow(static_cast<double>(j), n);
  double phase = j * u + n * std::numbers::pi / 2;
  return jn * (a * std::cos(phase) + b * std::sin(phase));
}
}  // namespace

double potential::deriv(double u, int n) const {
  if (n < 0 || n > 4)
    fail(errc::unsupported_order,
         "potential derivatives are carried through order 4, requested " +
             std::to_string(n));
  switch (kind) {
    case potential_kind::sine_gordon:
      // V = -cos u; derivatives cycle -cos, sin, cos, -sin.
      return -trig_term_deriv(1.0, 0.0, 1, u, n);
    case potential_kind::trig: {
      double s = 0;
      std::size_t m = std::max(cos_coeffs.size(), sin_coeffs.size());
      for (std::size_t idx = 0; idx < m; ++idx) {
        double a = idx < cos_coeffs.size() ? cos_coeffs[idx] : 0.0;
        double b = idx < sin_coeffs.size() ? sin_coeffs[idx] : 0.0;
        if (a != 0 || b != 0)
          s += trig_term_deriv(a, b, static_cast<int>(idx) + 1, u, n);
      }
      return s;
    }
    case potential_kind::poly: {
      // Horner evaluation of the n-th derivative; orders beyond the degree
      // are identically zero.
      double s = 0;
      for (std::size_t k = poly_coeffs.size(); k-- > 0;) {
        double coef = poly_coeffs[k];
        long fall = 1;
        if (static_cast<int>(k) < n) {
          coef = 0;
        } else {
          for (int r = 0; r < n; ++r) fall *= static_cast<long>(k) - r;
          coef *= static_cast<double>(fall);
        }
        if (static_cast<int>(k) >= n)
          s = s * u + coef;
      }
      return s;
    }
  }
  return 0;
}

potential make_sine_gordon() {
  potential p;
  p.name = "sine-gordon";
  p.kind = potential_kind::sine_gordon;
  return p;
}

potential potential_from_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const std::exception& e) {
    fail(errc::bad_config, std::string("potential JSON does not parse: ") + e.what());
  }
  if (!j.is_object()) fail(errc::bad_config, "potential JSON must be an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& k = it.key();
    if (k != "name" && k != "kind" && k != "cos" && k != "sin" && k != "poly")
      fail(errc::bad_config, "unknown potential key '" + k + "'");
  }
  potential p;
  p.name = j.value("name", std::string("unnamed"));
  std::string kind = j.value("kind", std::string());
  if (kind == "sine_gordon")
    p.kind = potential_kind::sine_gordon;
  else if (kind == "trig")
    p.kind = potential_kind::trig;
  else if (kind == "poly")
    p.kind = potential_kind::poly;
  else
    fail(errc::bad_config, "potential kind must be sine_gordon, trig, or poly");

  auto read_array = [&](const char* key) {
    std::vector<double> v;
    if (!j.contains(key)) return v;
    if (!j[key].is_array()) fail(errc::bad_config, std::string(key) + " must be an array");
    for (const auto& x : j[key]) {
      if (!x.is_number()) fail(errc::bad_config, std::string(key) + " entries must be numbers");
      v.push_back(x.get<double>());
    }
    return v;
  };
  p.cos_coeffs = read_array("cos");
  p.sin_coeffs = read_array("sin");
  p.poly_coeffs = read_array("poly");

  if (p.kind == potential_kind::sine_gordon &&
      (!p.cos_coeffs.empty() || !p.sin_coeffs.empty() || !p.poly_coeffs.empty()))
    fail(errc::bad_config, "sine_gordon takes no coefficient arrays");
  if (p.kind == potential_kind::trig && !p.poly_coeffs.empty())
    fail(errc::bad_config, "trig potentials take no poly array");
  if (p.kind == potential_kind::poly &&
      (!p.cos_coeffs.empty() || !p.sin_coeffs.empty()))
    fail(errc::bad_config, "poly potentials take no trig arrays");
  if (p.kind == potential_kind::trig && p.cos_coeffs.empty() && p.sin_coeffs.empty())
    fail(errc::bad_config, "trig potential has no coefficients");
  if (p.kind == potential_kind::poly && p.poly_coeffs.size() < 2)
    fail(errc::bad_config, "poly potential needs at least a linear term");
  return p;
}

std::vector<critical_point> critical_points(const potential& p) {
  double lo, hi;
  if (p.periodic()) {
    lo = 0;
    hi = two_pi;
  } else {
    // Cauchy-style bound on the roots of V' for polynomials.
    const auto& a = p.poly_coeffs;
    std::size_t deg = a.size();  // degree of V' is deg-2 when a has degree deg-1
    double lead = 0;
    std::size_t dp = 0;  // degree of V'
    for (std::size_t k = 1; k < deg; ++k) {
      double c = a[k] * static_cast<double>(k);
      if (c != 0) {
        lead = c;
        dp = k - 1;
      }
    }
    if (lead == 0) return {};  // V' identically zero or V constant/linear
    double r = 1;
    for (std::size_t k = 1; k + 1 <= dp + 1; ++k) {
      double c = a[k] * static_cast<double>(k);
      r = std::max(r, std::abs(c / lead));
    }
    double bound = 1 + r;
    lo = -bound;
    hi = bound;
  }

  auto dV = [&](double u) { return p.deriv(u, 1); };
  std::vector<critical_point> out;
  auto push_root = [&](double guess) {
    double u = guess;
    try {
      u = newton_fd(dV, guess, 1e-12, 0.0, 50);
    } catch (const error&) {
      return;  // Newton stalls on e.g. multiple roots: keep scan estimate
    }
    if (p.periodic()) {
      u = std::fmod(u, two_pi);
      if (u < 0) u += two_pi;
      if (u >= two_pi - 1e-8) u -= two_pi;  // fold the seam at 2 pi onto 0
      if (std::abs(u) < 1e-12) u = 0;
    }
    for (const auto& c : out) {
      double d = std::abs(c.u - u);
      if (p.periodic()) d = std::min(d, two_pi - d);
      if (d < 1e-8) return;  // duplicate
    }
    critical_point c;
    c.u = u;
    c.value = p(u);
    double vpp = p.deriv(u, 2);
    c.type = (std::abs(vpp) < 1e-8) ? 0 : (vpp > 0 ? -1 : +1);
    out.push_back(c);
  };

  const int n = 1024;
  double prev_u = lo, prev_f = dV(lo);
  for (int i = 1; i <= n; ++i) {
    double u = lo + (hi - lo) * i / n;
    double f = dV(u);
    if (prev_f == 0)
      push_root(prev_u);
    else if ((prev_f > 0) != (f > 0))
      push_root(0.5 * (prev_u + u));
    prev_u = u;
    prev_f = f;
  }
  std::sort(out.begin(), out.end(),
            [](const critical_point& a, const critical_point& b) { return a.u < b.u; });
  return out;
}

normalization_report check_normalization(const potential& p) {
  normalization_report r;
  if (!p.periodic()) return r;
  auto cps = critical_points(p);
  if (cps.empty()) return r;
  r.min_value = cps[0].value;
  r.max_value = cps[0].value;
  for (const auto& c : cps) {
    if (c.type == -1) ++r.n_minima;
    if (c.type == +1) ++r.n_maxima;
    r.min_value = std::min(r.min_value, c.value);
    r.max_value = std::max(r.max_value, c.value);
  }
  r.normalized = r.n_minima == 1 && r.n_maxima == 1 &&
                 std::abs(r.min_value + 1) <= 1e-8 &&
                 std::abs(r.max_value - 1) <= 1e-8 &&
                 cps.size() == 2;
  return r;
}

double chicone_signature(const potential& p, double u, int s) {
  if (s != 1 && s != -1)
    fail(errc::bad_config, "chicone_signature branch must be +1 or -1");
  auto norm = check_normalization(p);
  if (!norm.normalized)
    fail(errc::not_normalized,
         "the monotonicity signature is defined for the normalized periodic form");
  double V = p(u), Vp = p.deriv(u, 1), Vpp = p.deriv(u, 2), Vppp = p.deriv(u, 3);
  double off = V + s;
  return 6 * off * Vpp * Vpp - 3 * Vp * Vp * Vpp - 2 * off * Vp * Vppp;
}

}  // namespace kgw
