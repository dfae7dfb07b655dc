#include "doctest.h"

#include <cmath>
#include <limits>
#include <numbers>

#include "gammacheck/compensated.hpp"
#include "gammacheck/error.hpp"
#include "gammacheck/summation.hpp"

using namespace gammacheck;

namespace {

constexpr double kGamma = 0.57721566490153286061;

// L(x) = sum log(1 + x/m) - x/m = -log Gamma(x + 1) - gamma x
double log_product_oracle(double x) { return -std::lgamma(x + 1.0) - kGamma * x; }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const NumericsError& e) {
    return e.kind();
  }
  FAIL("expected NumericsError");
  return ErrorKind::invalid_config;
}

}  // namespace

TEST_CASE("compensated sum recovers cancelled low-order bits") {
  CompensatedSum acc;
  acc += 1.0;
  acc += 1e100;
  acc += 1.0;
  acc += -1e100;
  CHECK(acc.value() == 2.0);
}

TEST_CASE("rational tail closed-form values") {
  SummationConfig cfg;
  CHECK(sum_rational_tail(0.0, cfg).value == 0.0);
  CHECK(sum_rational_tail(1.0, cfg).value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(sum_rational_tail(2.0, cfg).value == doctest::Approx(1.5).epsilon(1e-12));
}

TEST_CASE("rational tail meets the requested absolute tolerance") {
  const double exact[][2] = {
      {0.5, 2.0 - 2.0 * std::numbers::ln2}, {1.0, 1.0}, {2.0, 1.5}, {5.0, 137.0 / 60.0}};
  for (double tol : {1e-6, 1e-10}) {
    SummationConfig cfg;
    cfg.abs_tol = tol;
    cfg.rel_tol = tol;
    for (const auto& row : exact) {
      CAPTURE(row[0]);
      CAPTURE(tol);
      const SeriesEval r = sum_rational_tail(row[0], cfg);
      CHECK(r.converged);
      CHECK(r.tail_bound <= tol);
      CHECK(std::fabs(r.value - row[1]) <= tol);
    }
  }
}

TEST_CASE("rational tail for negative non-integer argument") {
  // S(-0.5) = psi(0.5) + gamma = -2 ln 2
  SummationConfig cfg;
  CHECK(sum_rational_tail(-0.5, cfg).value == doctest::Approx(-2.0 * std::numbers::ln2).epsilon(1e-11));
}

TEST_CASE("log-product sum against log Gamma") {
  SummationConfig cfg;
  for (double x : {-0.9, -0.5, 0.25, 1.0, 3.5, 9.0}) {
    CAPTURE(x);
    CHECK(std::fabs(log_weierstrass_sum(x, cfg).value - log_product_oracle(x)) <= 1e-11);
  }
  CHECK(log_weierstrass_sum(1.0, cfg).value == doctest::Approx(-kGamma).epsilon(1e-12));
}

TEST_CASE("log-product truncation error shrinks at least fourfold per doubling") {
  for (double x : {0.5, 2.0, 4.0}) {
    CAPTURE(x);
    const double exact = log_product_oracle(x);
    const auto m0 = static_cast<std::uint64_t>(2.0 * x) + 4;
    double previous = std::fabs(log_weierstrass_truncated(x, m0).value - exact);
    for (std::uint64_t m = 2 * m0; m <= 16 * m0; m *= 2) {
      const double err = std::fabs(log_weierstrass_truncated(x, m).value - exact);
      if (previous < 1e-13) break;
      CHECK(err * 4.0 <= previous);
      previous = err;
    }
  }
}

TEST_CASE("truncated sums bound their own error") {
  const double exact = 2.0 - 2.0 * std::numbers::ln2;
  for (std::uint64_t m : {2u, 8u, 64u}) {
    const SeriesEval r = sum_rational_tail_truncated(0.5, m);
    CHECK(std::fabs(r.value - exact) <= r.tail_bound + 1e-15);
  }
  CHECK(kind_of([] { sum_rational_tail_truncated(10.0, 3); }) == ErrorKind::invalid_config);
}

TEST_CASE("error kinds") {
  SummationConfig cfg;
  CHECK(kind_of([&] { sum_rational_tail(-2.01, cfg); }) == ErrorKind::near_pole);
  CHECK(kind_of([&] { log_weierstrass_sum(-1.0, cfg); }) == ErrorKind::non_positive_factor);
  CHECK(kind_of([&] { log_weierstrass_sum(-3.5, cfg); }) == ErrorKind::non_positive_factor);

  SummationConfig tight;
  tight.abs_tol = 1e-15;
  tight.max_terms = 100;
  CHECK(kind_of([&] { sum_rational_tail(1.0, tight); }) == ErrorKind::cap_exceeded);

  SummationConfig bad;
  bad.abs_tol = 0.0;
  CHECK(kind_of([&] { sum_rational_tail(1.0, bad); }) == ErrorKind::invalid_config);
  bad = SummationConfig{};
  bad.pole_guard = 0.5;
  CHECK(kind_of([&] { bad.validate(); }) == ErrorKind::invalid_config);
  bad = SummationConfig{};
  bad.max_terms = 0;
  CHECK(kind_of([&] { bad.validate(); }) == ErrorKind::invalid_config);
}

TEST_CASE("pole guard") {
  CHECK(near_negative_integer(-1.01, 0.05));
  CHECK(near_negative_integer(-2.99, 0.05));
  CHECK_FALSE(near_negative_integer(-1.1, 0.05));
  CHECK_FALSE(near_negative_integer(0.01, 0.05));
  CHECK_FALSE(near_negative_integer(-0.02, 0.05));
}

TEST_CASE("summation is deterministic") {
  SummationConfig cfg;
  for (double x : {0.3, 2.7, -0.6}) {
    CHECK(sum_rational_tail(x, cfg).value == sum_rational_tail(x, cfg).value);
    CHECK(log_weierstrass_sum(x, cfg).value == log_weierstrass_sum(x, cfg).value);
  }
}

TEST_CASE("trace of a convergent series") {
  const PartialSumTrace t = build_trace([](std::uint64_t j) { return std::pow(0.5, double(j)); }, 0, 30);
  CHECK(t.terms.size() == 31);
  CHECK_FALSE(t.diverged);
  CHECK_FALSE(t.first_growth_index.has_value());
  CHECK(t.stop == TraceStop::completed);
  CHECK(*t.last_partial_sum() == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("trace of a divergent series") {
  // terms shrink up to j = 4, then grow from j = 5 onward
  auto term = [](std::uint64_t j) { return std::pow(-1.0, double(j)) * std::pow(double(j) - 4.0, 2.0); };
  const PartialSumTrace t = build_trace(term, 0, 20);
  CHECK(t.diverged);
  REQUIRE(t.first_growth_index.has_value());
  CHECK(*t.first_growth_index == 5);
}

TEST_CASE("short growth run is not divergence") {
  std::vector<double> values = {1, 0.5, 0.25, 0.5, 1.0};
  const PartialSumTrace t =
      build_trace([&](std::uint64_t j) { return values[j]; }, 0, values.size() - 1);
  CHECK_FALSE(t.diverged);
  REQUIRE(t.first_growth_index.has_value());
  CHECK(*t.first_growth_index == 3);
}

TEST_CASE("trace stops at overflow and cap") {
  auto overflow = [](std::uint64_t j) {
    return j < 3 ? 1.0 : std::numeric_limits<double>::infinity();
  };
  const PartialSumTrace t = build_trace(overflow, 0, 10);
  CHECK(t.stop == TraceStop::overflow);
  CHECK(t.terms.size() == 3);
  CHECK(t.diverged);

  auto capped = [](std::uint64_t j) -> double {
    if (j >= 2) throw NumericsError(ErrorKind::cap_exceeded, "cap");
    return 1.0;
  };
  const PartialSumTrace c = build_trace(capped, 0, 10);
  CHECK(c.stop == TraceStop::cap_exceeded);
  CHECK(c.terms.size() == 2);

  auto other = [](std::uint64_t) -> double { throw NumericsError(ErrorKind::domain_error, "d"); };
  CHECK_THROWS_AS(build_trace(other, 0, 3), NumericsError);
}

TEST_CASE("empty trace") {
  const PartialSumTrace t = build_trace([](std::uint64_t) { return 1.0; }, 5, 4);
  CHECK(t.empty());
  CHECK_FALSE(t.last_partial_sum().has_value());
  CHECK_FALSE(t.diverged);
}
