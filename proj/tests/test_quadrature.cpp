#include "doctest.h"

#include <cmath>
#include <numbers>

#include "gammacheck/quadrature.hpp"

using namespace gammacheck;

TEST_CASE("Gauss-Kronrod on smooth integrands") {
  const QuadratureResult r = integrate_gk15([](double t) { return std::exp(t); }, 0.0, 1.0, 1e-13);
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(std::numbers::e - 1.0).epsilon(1e-14));

  const QuadratureResult s = integrate_gk15([](double t) { return std::sin(t); }, 0.0, std::numbers::pi, 1e-13);
  CHECK(s.value == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(s.error <= 1e-12);
}

TEST_CASE("Gauss-Kronrod on an endpoint singularity") {
  // int_0^1 t^{-1/2} dt = 2
  const QuadratureResult r = integrate_gk15([](double t) { return 1.0 / std::sqrt(t); }, 0.0, 1.0, 1e-10);
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(r.intervals > 1);
}

TEST_CASE("Simpson and Gauss-Kronrod agree") {
  auto f = [](double t) { return std::exp(t) * std::pow(t, 2.5) * std::log(t); };
  const double gk = integrate_gk15(f, 1.0, 2.5, 1e-13).value;
  const double simpson = integrate_simpson(f, 1.0, 2.5, 1e-12).value;
  CHECK(std::fabs(gk - simpson) <= 1e-10 * std::fabs(gk));
}

TEST_CASE("reversed and empty ranges") {
  auto f = [](double t) { return t * t; };
  CHECK(integrate_gk15(f, 1.0, 1.0, 1e-12).value == 0.0);
  auto g = [](double t) { return 1.0 / std::sqrt(t); };
  CHECK(integrate_gk15(g, 1.0, 0.0, 1e-10).value == doctest::Approx(-2.0).epsilon(1e-9));
  CHECK(integrate_gk15(f, 1.0, 0.0, 1e-12).value == doctest::Approx(-1.0 / 3.0).epsilon(1e-13));
  CHECK(integrate_simpson(f, 1.0, 0.0, 1e-12).value == doctest::Approx(-1.0 / 3.0).epsilon(1e-12));
}
