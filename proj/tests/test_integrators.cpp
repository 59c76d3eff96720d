#include <doctest.h>

#include <array>
#include <cmath>

#include "kgwave/ode.hpp"
#include "kgwave/quadrature.hpp"
#include "kgwave/rootfind.hpp"
#include "oracles.hpp"
#include "reference_values.hpp"

namespace {
constexpr double pi = 3.14159265358979323846;
}

TEST_CASE("adaptive integrator reproduces exponential growth") {
  auto rhs = [](double, const std::array<double, 1>& y, std::array<double, 1>& dy) {
    dy[0] = y[0];
  };
  auto y = kgw::integrate_ode<1>(rhs, {1.0}, 0.0, 1.0);
  CHECK(y[0] == doctest::Approx(std::exp(1.0)).epsilon(1e-10));
}

TEST_CASE("oscillator over many periods and dense interpolation") {
  auto rhs = [](double, const std::array<double, 2>& y, std::array<double, 2>& dy) {
    dy[0] = y[1];
    dy[1] = -y[0];
  };
  kgw::dense_path<2> path;
  auto y = kgw::integrate_ode<2>(rhs, {1.0, 0.0}, 0.0, 10.0, 1e-12, 1e-14, &path);
  CHECK(y[0] == doctest::Approx(std::cos(10.0)).epsilon(1e-9));
  CHECK(y[1] == doctest::Approx(-std::sin(10.0)).epsilon(1e-9));
  // interpolant hits the closed form at arbitrary interior points
  for (double t : {0.137, 1.0, 2.5, 4.9, 7.25, 9.999}) {
    CHECK(path.eval_component(t, 0) == doctest::Approx(std::cos(t)).epsilon(1e-8));
    CHECK(path.eval_component(t, 1) == doctest::Approx(-std::sin(t)).epsilon(1e-8));
  }
}

TEST_CASE("integration runs backwards in time") {
  auto rhs = [](double t, const std::array<double, 1>&, std::array<double, 1>& dy) {
    dy[0] = std::cos(t);
  };
  auto y = kgw::integrate_ode<1>(rhs, {std::sin(2.0)}, 2.0, -1.0);
  CHECK(y[0] == doctest::Approx(std::sin(-1.0)).epsilon(1e-10));
}

TEST_CASE("tanh-sinh handles smooth and endpoint-singular integrands") {
  CHECK(kgw::integrate([](double x) { return std::sin(x); }, 0.0, pi) ==
        doctest::Approx(2.0).epsilon(1e-12));

  // inverse-square-root singularities at both ends; the second argument gives
  // the distance to the nearer endpoint with full precision
  double v = kgw::integrate_endpoint_aware(
      [](double, double xc) {
        // x (1 - x) = d (1 - d) with d the distance to either endpoint
        double d = std::abs(xc);
        return 1.0 / std::sqrt(d * (1.0 - d));
      },
      0.0, 1.0);
  CHECK(v == doctest::Approx(pi).epsilon(1e-10));

  // signed-offset convention: negative near the lower endpoint, positive near
  // the upper one
  bool convention_ok = true;
  kgw::integrate_endpoint_aware(
      [&](double x, double xc) {
        if (x < 0.25 && xc > 0) convention_ok = false;
        if (x > 0.75 && xc < 0) convention_ok = false;
        return x;
      },
      0.0, 1.0);
  CHECK(convention_ok);
}

TEST_CASE("frozen elliptic integrals agree with the AGM oracle") {
  using namespace kgw::testref;
  using namespace kgw::testoracle;
  CHECK(elliptic_K(0.5) == doctest::Approx(elliptic_K_half).epsilon(1e-14));
  CHECK(elliptic_E(0.5) == doctest::Approx(elliptic_E_half).epsilon(1e-14));
  CHECK(elliptic_K(2.0 / 3.0) ==
        doctest::Approx(elliptic_K_two_thirds).epsilon(1e-14));
  CHECK(elliptic_dKdm(0.5) == doctest::Approx(elliptic_dKdm_half).epsilon(1e-9));
  // quadrature route for K(m): int_0^{pi/2} dt / sqrt(1 - m sin^2 t)
  double Kq = kgw::integrate(
      [](double t) { return 1.0 / std::sqrt(1.0 - 0.5 * std::sin(t) * std::sin(t)); },
      0.0, pi / 2);
  CHECK(Kq == doctest::Approx(elliptic_K_half).epsilon(1e-12));
}

TEST_CASE("bisection accepts brackets in either order") {
  auto f = [](double x) { return x * x - 2.0; };
  double up = kgw::bisect(f, 0.0, 2.0, 1e-13);
  double dn = kgw::bisect(f, 2.0, 0.0, 1e-13);  // descending bracket
  CHECK(up == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(dn == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

  // an endpoint that is exactly a root is returned as-is
  auto g = [](double x) { return x * x - 4.0; };
  CHECK(kgw::bisect(g, 2.0, 5.0) == 2.0);
  CHECK_THROWS_AS(kgw::bisect(f, 2.0, 3.0), kgw::error);
}

TEST_CASE("Newton refinement with finite-difference derivative") {
  double r = kgw::newton_fd([](double x) { return std::cos(x); }, 1.4);
  CHECK(r == doctest::Approx(pi / 2).epsilon(1e-12));
  // derivative vanishes at the start point: refuses rather than wanders
  CHECK_THROWS_AS(kgw::newton_fd([](double x) { return 1.0 + x * x; }, 0.0),
                  kgw::error);
}

TEST_CASE("bracket scan finds every sign change") {
  auto br = kgw::bracket_scan([](double x) { return std::sin(x); }, 0.5, 10.0, 200);
  REQUIRE(br.size() == 3);
  for (std::size_t i = 0; i < br.size(); ++i) {
    double root = (i + 1) * pi;
    CHECK(br[i].first <= root);
    CHECK(br[i].second >= root);
  }
}
