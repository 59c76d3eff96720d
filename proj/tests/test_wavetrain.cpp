#include <doctest.h>

#include <cmath>

#include "kgwave/wavetrain.hpp"
#include "oracles.hpp"
#include "reference_values.hpp"

namespace {

constexpr double pi = 3.14159265358979323846;
const double sqrt2 = std::sqrt(2.0);

kgw::potential quartic_potential() {
  kgw::potential p;
  p.name = "quartic";
  p.kind = kgw::potential_kind::poly;
  p.poly_coeffs = {0.0, 0.0, 0.5, 0.0, -0.25};
  return p;
}

kgw::potential harmonic_potential() {
  kgw::potential p;
  p.name = "harmonic";
  p.kind = kgw::potential_kind::poly;
  p.poly_coeffs = {0.0, 0.0, 0.5};
  return p;
}

// Each representative wave is built once and shared across test cases.
const kgw::wave& suplib() {
  static kgw::wave w = kgw::build_wave(kgw::make_sine_gordon(), 0.0, sqrt2);
  return w;
}
const kgw::wave& sublib() {
  static kgw::wave w = kgw::build_wave(kgw::make_sine_gordon(), 0.0, 0.5);
  return w;
}
const kgw::wave& subrot() {
  static kgw::wave w = kgw::build_wave(kgw::make_sine_gordon(), -2.0, 0.5);
  return w;
}
const kgw::wave& suprot() {
  static kgw::wave w = kgw::build_wave(kgw::make_sine_gordon(), 2.0, sqrt2);
  return w;
}

}  // namespace

TEST_CASE("classification of the admissible regions") {
  auto p = kgw::make_sine_gordon();
  CHECK(kgw::classify(p, 0.0, sqrt2) == kgw::wave_class::superluminal_librational);
  CHECK(kgw::classify(p, 0.0, 0.5) == kgw::wave_class::subluminal_librational);
  CHECK(kgw::classify(p, -2.0, 0.5) == kgw::wave_class::subluminal_rotational);
  CHECK(kgw::classify(p, 2.0, sqrt2) == kgw::wave_class::superluminal_rotational);
  CHECK(kgw::classify(quartic_potential(), 0.1, 2.0) ==
        kgw::wave_class::superluminal_librational);
}

TEST_CASE("classification guards") {
  auto p = kgw::make_sine_gordon();
  auto code_of = [&](double E, double c) {
    try {
      kgw::classify(p, E, c);
    } catch (const kgw::error& e) {
      return e.code;
    }
    return kgw::errc::no_convergence;  // sentinel: nothing thrown
  };
  CHECK(code_of(1.0, sqrt2) == kgw::errc::on_separatrix);   // barrier energy
  CHECK(code_of(-1.0, 0.5) == kgw::errc::on_separatrix);    // reversed role
  CHECK(code_of(0.0, 1.0) == kgw::errc::sonic_speed);
  CHECK(code_of(0.0, 1.0 + 4e-11) == kgw::errc::sonic_speed);
  CHECK(code_of(-1.0, sqrt2) == kgw::errc::outside_region);  // equilibrium level
  CHECK(code_of(-5.0, sqrt2) == kgw::errc::outside_region);  // below every value
  CHECK(code_of(5.0, 0.5) == kgw::errc::outside_region);
  CHECK(code_of(1.5, 0.5) == kgw::errc::outside_region);     // needs c^2 > 1

  // non-periodic potential: no rotational regime above the barrier
  try {
    kgw::classify(quartic_potential(), 0.3, 2.0);
    CHECK(false);
  } catch (const kgw::error& e) {
    CHECK(e.code == kgw::errc::outside_region);
  }
}

TEST_CASE("superluminal librational wave matches frozen references") {
  using namespace kgw::testref;
  const kgw::wave& w = suplib();
  CHECK(w.u0 == doctest::Approx(0.0).scale(1).epsilon(1e-12));
  CHECK(w.v0 == doctest::Approx(sg_suplib_v0).epsilon(1e-14));
  CHECK(w.f_hi == doctest::Approx(sg_suplib_turning).epsilon(1e-12));
  CHECK(w.f_lo == doctest::Approx(-sg_suplib_turning).epsilon(1e-12));
  CHECK(w.T == doctest::Approx(sg_suplib_period).epsilon(1e-11));
  CHECK(w.T_E == doctest::Approx(sg_suplib_period_E).epsilon(1e-7));
  CHECK(w.delta == doctest::Approx(sg_suplib_delta).epsilon(1e-6));
  CHECK(w.W == doctest::Approx(sg_suplib_W).epsilon(1e-9));
  CHECK(w.W_quad == doctest::Approx(sg_suplib_W).epsilon(1e-9));
  CHECK(w.q == doctest::Approx(sg_suplib_q).epsilon(1e-11));
  CHECK(w.f(0.7) == doctest::Approx(sg_suplib_f_at_0p7).epsilon(1e-9));
  CHECK(w.fz(0.7) == doctest::Approx(sg_suplib_fz_at_0p7).epsilon(1e-9));
}

TEST_CASE("subluminal librational wave matches frozen references") {
  using namespace kgw::testref;
  const kgw::wave& w = sublib();
  CHECK(w.u0 == doctest::Approx(pi).epsilon(1e-12));
  CHECK(w.v0 == doctest::Approx(sg_sublib_v0).epsilon(1e-14));
  CHECK(w.f_lo == doctest::Approx(sg_sublib_turning_lo).epsilon(1e-12));
  CHECK(w.f_hi == doctest::Approx(sg_sublib_turning_hi).epsilon(1e-12));
  CHECK(w.T == doctest::Approx(sg_sublib_period).epsilon(1e-11));
  CHECK(w.T_E == doctest::Approx(sg_sublib_period_E).epsilon(1e-7));
  CHECK(w.delta == doctest::Approx(sg_sublib_delta).epsilon(1e-6));
  CHECK(w.W == doctest::Approx(sg_sublib_W).epsilon(1e-9));
  CHECK(w.q == doctest::Approx(sg_sublib_q).epsilon(1e-11));
  CHECK(w.f(0.9) == doctest::Approx(sg_sublib_f_at_0p9).epsilon(1e-9));
  CHECK(w.fz(0.9) == doctest::Approx(sg_sublib_fz_at_0p9).epsilon(1e-9));
}

TEST_CASE("subluminal rotational wave matches frozen references") {
  using namespace kgw::testref;
  const kgw::wave& w = subrot();
  CHECK(w.u0 == doctest::Approx(pi).epsilon(1e-12));
  CHECK(w.v0 == doctest::Approx(sg_subrot_v0).epsilon(1e-14));
  CHECK(w.T == doctest::Approx(sg_subrot_period).epsilon(1e-11));
  CHECK(w.T_E == doctest::Approx(sg_subrot_period_E).epsilon(1e-7));
  CHECK(w.delta == doctest::Approx(sg_subrot_delta).epsilon(1e-6));
  CHECK(w.W == doctest::Approx(sg_subrot_W).epsilon(1e-9));
  CHECK(w.q == doctest::Approx(sg_subrot_q).epsilon(1e-11));
  CHECK(w.f(0.3) == doctest::Approx(sg_subrot_f_at_0p3).epsilon(1e-9));
  CHECK(w.fz(0.3) == doctest::Approx(sg_subrot_fz_at_0p3).epsilon(1e-9));
  // closed form for the rotating pendulum: 2 sqrt(2) sqrt(1-c^2) K(m) / sqrt(1+|E|)
  double m = 2.0 / (1.0 + 2.0);
  double closed = 2 * sqrt2 * std::sqrt(0.75) *
                  kgw::testoracle::elliptic_K(m) / std::sqrt(3.0);
  CHECK(w.T == doctest::Approx(closed).epsilon(1e-11));
}

TEST_CASE("superluminal rotational wave matches frozen references") {
  using namespace kgw::testref;
  const kgw::wave& w = suprot();
  CHECK(w.u0 == doctest::Approx(0.0).scale(1).epsilon(1e-12));
  CHECK(w.v0 == doctest::Approx(sg_suprot_v0).epsilon(1e-14));
  CHECK(w.T == doctest::Approx(sg_suprot_period).epsilon(1e-11));
  CHECK(w.T_E == doctest::Approx(sg_suprot_period_E).epsilon(1e-7));
  CHECK(w.delta == doctest::Approx(sg_suprot_delta).epsilon(1e-6));
  CHECK(w.W == doctest::Approx(sg_suprot_W).epsilon(1e-9));
  CHECK(w.q == doctest::Approx(sg_suprot_q).epsilon(1e-11));
  CHECK(w.f(0.4) == doctest::Approx(sg_suprot_f_at_0p4).epsilon(1e-9));
  CHECK(w.fz(0.4) == doctest::Approx(sg_suprot_fz_at_0p4).epsilon(1e-9));
}

TEST_CASE("profile satisfies the first integral along the period") {
  for (const kgw::wave* w : {&suplib(), &sublib(), &subrot(), &suprot()}) {
    double worst = 0;
    for (int i = 0; i <= 64; ++i)
      worst = std::max(worst, std::abs(w->energy_residual(w->T * i / 64.0)));
    CHECK(worst < 1e-8);
  }
}

TEST_CASE("periodic extension and rotational winding") {
  const kgw::wave& lib = suplib();
  const kgw::wave& rot = subrot();
  for (double z : {0.1, 1.3, 2.9}) {
    CHECK(lib.f(z + lib.T) == doctest::Approx(lib.f(z)).scale(1).epsilon(1e-9));
    CHECK(lib.f(z - lib.T) == doctest::Approx(lib.f(z)).scale(1).epsilon(1e-9));
    CHECK(lib.fz(z + lib.T) == doctest::Approx(lib.fz(z)).scale(1).epsilon(1e-9));
    CHECK(rot.f(z + rot.T) == doctest::Approx(rot.f(z) + 2 * pi).epsilon(1e-9));
    CHECK(rot.f(z - rot.T) == doctest::Approx(rot.f(z) - 2 * pi).epsilon(1e-9));
    CHECK(rot.fz(z + rot.T) == doctest::Approx(rot.fz(z)).epsilon(1e-9));
  }
}

TEST_CASE("librational turning instants hit the turning values") {
  for (const kgw::wave* w : {&suplib(), &sublib()}) {
    double z1 = w->turning_z[0], z2 = w->turning_z[1];
    CHECK(0 < z1);
    CHECK(z1 < z2);
    CHECK(z2 < w->T);
    CHECK(std::abs(w->fz(z1)) < 1e-7);
    CHECK(std::abs(w->fz(z2)) < 1e-7);
    // starting at the well center with positive slope: first stop at f_hi
    CHECK(w->f(z1) == doctest::Approx(w->f_hi).epsilon(1e-8));
    CHECK(w->f(z2) == doctest::Approx(w->f_lo).scale(1).epsilon(1e-8));
  }
}

TEST_CASE("quartic well wave matches frozen references") {
  using namespace kgw::testref;
  kgw::wave w = kgw::build_wave(quartic_potential(), 0.1, 2.0);
  CHECK(w.cls == kgw::wave_class::superluminal_librational);
  CHECK(w.v0 == doctest::Approx(quartic_v0).epsilon(1e-14));
  CHECK(w.f_hi == doctest::Approx(quartic_turning).epsilon(1e-12));
  CHECK(w.f_lo == doctest::Approx(-quartic_turning).epsilon(1e-12));
  CHECK(w.T == doctest::Approx(quartic_period).epsilon(1e-11));
  CHECK(w.T_E == doctest::Approx(quartic_period_E).epsilon(1e-7));
  CHECK(w.delta == doctest::Approx(quartic_delta).epsilon(1e-6));
  CHECK(w.W == doctest::Approx(quartic_W).epsilon(1e-9));
}

TEST_CASE("harmonic well is the degenerate control case") {
  using namespace kgw::testref;
  kgw::wave w = kgw::build_wave(harmonic_potential(), 0.5, sqrt2);
  CHECK(w.T == doctest::Approx(harmonic_period).epsilon(1e-11));
  CHECK(w.v0 == doctest::Approx(harmonic_v0).epsilon(1e-13));
  CHECK(w.W == doctest::Approx(harmonic_W).epsilon(1e-9));
  CHECK(std::abs(w.T_E) < 1e-7);   // period independent of energy
  CHECK(std::abs(w.delta) < 1e-7);
}

TEST_CASE("action quadrature is reusable away from the built wave") {
  const kgw::wave& w = suplib();
  CHECK(kgw::action_at(w.pot, w.E, w.c) == doctest::Approx(w.W).epsilon(1e-9));
  // nearby energies give smoothly varying actions bracketing the period
  double h = 1e-5;
  double slope = (kgw::action_at(w.pot, w.E + h, w.c) -
                  kgw::action_at(w.pot, w.E - h, w.c)) /
                 (2 * h);
  CHECK(slope == doctest::Approx(w.T).epsilon(1e-6));
}

TEST_CASE("uniform profile samples carry the profile data") {
  const kgw::wave& w = suplib();
  auto rows = kgw::sample_profile(w, 16);
  REQUIRE(rows.size() == 17);
  CHECK(rows.front().z == doctest::Approx(0.0));
  CHECK(rows.back().z == doctest::Approx(w.T));
  // the final row carries the integrated endpoint, which differs from the
  // periodically wrapped profile by the orbit-closure error of the solver
  for (const auto& r : rows) {
    CHECK(r.f == doctest::Approx(w.f(r.z)).scale(1).epsilon(1e-8));
    CHECK(r.f_z == doctest::Approx(w.fz(r.z)).scale(1).epsilon(1e-8));
    CHECK(std::abs(r.energy_residual) < 1e-8);
  }
}
