// Self-contained oracles computed inside the test binary by a method
// unrelated to anything in the library (arithmetic-geometric mean), so that
// closed-form expectations are checked against an independent route.
#pragma once

#include <cmath>
#include <cstddef>

namespace kgw::testoracle {

// Complete elliptic integral of the first kind with parameter m (not the
// modulus k): K(m) = pi / (2 * agm(1, sqrt(1 - m))).
inline double elliptic_K(double m) {
  // stop at the roundoff plateau: below ~1e-15 relative the pair just
  // oscillates by an ulp and never reaches exact equality
  double a = 1.0, b = std::sqrt(1.0 - m);
  for (int i = 0; i < 64 && std::abs(a - b) > 1e-15 * a; ++i) {
    double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  return 3.14159265358979323846 / (2.0 * a);
}

// Complete elliptic integral of the second kind via the AGM deficit series:
// E(m) = K(m) * (1 - sum_{n>=0} 2^{n-1} c_n^2), c_0^2 = m, c_{n+1} = (a_n - b_n)/2.
inline double elliptic_E(double m) {
  // the plateau cutoff matters doubly here: past it the weight 2^{n-1} would
  // amplify ulp-sized c_n into a visible error in the deficit sum
  double a = 1.0, b = std::sqrt(1.0 - m);
  double sum = 0.5 * m;
  double pw = 0.5;
  for (int n = 0; n < 64 && std::abs(a - b) > 1e-15 * a; ++n) {
    double c = 0.5 * (a - b);
    double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
    pw *= 2.0;
    sum += pw * c * c;
  }
  return elliptic_K(m) * (1.0 - sum);
}

// dK/dm by a Richardson-extrapolated central difference of the AGM value.
inline double elliptic_dKdm(double m) {
  const double h = 1e-5;
  auto diff = [&](double hh) {
    return (elliptic_K(m + hh) - elliptic_K(m - hh)) / (2 * hh);
  };
  double d1 = diff(h), d2 = diff(h / 2);
  return (4 * d2 - d1) / 3;
}

}  // namespace kgw::testoracle
