#include "doctest.h"

#include <cmath>
#include <numbers>

#include "gammacheck/error.hpp"
#include "gammacheck/identity.hpp"
#include "gammacheck/special_functions.hpp"

using namespace gammacheck;

namespace {

double rel_err(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

double factorial(int n) { return std::tgamma(n + 1.0); }

}  // namespace

TEST_CASE("gate and snapped floor") {
  CHECK(gate(2.0) == 0.0);
  CHECK(gate(5.0 - 1e-15) == 0.0);
  CHECK(gate(2.5) == 1.0);
  CHECK(gate(5.0 / 3.0) == 1.0);
  CHECK(gate(3.0 + 1e-9) == 1.0);
  CHECK(snapped_floor(5.0 - 1e-15) == 5);
  CHECK(snapped_floor(2.999) == 2);
  CHECK(snapped_floor(1.5) == 1);
}

TEST_CASE("prefactor") {
  CHECK(identity_prefactor(1.0) == 1.0);
  CHECK(identity_prefactor(2.0) == doctest::Approx(1.0 / (4.0 * std::numbers::e)).epsilon(1e-15));
}

TEST_CASE("eta and alpha reference values") {
  SummationConfig cfg;
  CHECK(eta(2.0, 0, cfg) == doctest::Approx(1.34657359027997265).epsilon(1e-11));
  CHECK(eta(2.0, 2, cfg) == doctest::Approx(3.19314718055994531).epsilon(1e-11));
  struct Row {
    double s;
    std::uint64_t j;
    double alpha, eta;
  };
  const Row rows[] = {
      {1.5, 5, 0.42314218766081722, 1.4046926643676619},
      {2.5, 4, -0.30090111122547002, -0.67221987114739546},
      {2.5, 2, 1.2036044449018801, 3.5915828182659919},
      {std::numbers::e, 7, -5.8136090447543973, -4.9091464577709437},
      {4.2, 10, -67.351137362052252, -84.237958601078154},
  };
  for (const Row& r : rows) {
    CAPTURE(r.s);
    CAPTURE(r.j);
    const TermPair p = term_pair(r.s, r.j, cfg);
    CHECK(rel_err(p.alpha, r.alpha) <= 1e-9);
    CHECK(rel_err(p.eta, r.eta) <= 1e-9);
  }
}

TEST_CASE("alpha vanishes at j = 0") {
  SummationConfig cfg;
  for (double s : {1.5, 2.0, 3.7}) CHECK(alpha(s, 0, cfg) == 0.0);
}

TEST_CASE("eta minus alpha is the reciprocal gamma times the extra factor") {
  SummationConfig cfg;
  for (double s : {1.5, 2.0, 2.5, std::numbers::e, 4.2}) {
    for (std::uint64_t j = 0; j <= 10; ++j) {
      const double x = s - static_cast<double>(j);
      if (near_negative_integer(x, cfg.pole_guard)) continue;
      const TermPair p = term_pair(s, j, cfg);
      const double expected =
          recip_gamma_product(x, cfg).value * (2.0 + std::log(s) - static_cast<double>(j) / s);
      CAPTURE(s);
      CAPTURE(j);
      CHECK(std::fabs(p.eta - p.alpha - expected) <= 1e-9 * std::max(1.0, std::fabs(expected)));
    }
  }
}

TEST_CASE("alpha has finite limits at the poles") {
  SummationConfig cfg;
  for (int k = 1; k <= 3; ++k) {
    const double limit = ((k % 2 == 1) ? 1.0 : -1.0) * factorial(k - 1);
    const std::uint64_t j = static_cast<std::uint64_t>(k) + 2;
    for (double sign : {-1.0, 1.0}) {
      const double e1 = std::fabs(alpha(2.0 + sign * 1e-3, j, cfg) - limit);
      const double e2 = std::fabs(alpha(2.0 + sign * 5e-4, j, cfg) - limit);
      CAPTURE(k);
      CAPTURE(sign);
      CHECK(e1 <= 0.01 * factorial(k - 1));
      CHECK(e2 / e1 == doctest::Approx(0.5).epsilon(0.1));
    }
  }
}

TEST_CASE("near-pole path against reference values") {
  SummationConfig cfg;
  CHECK(term_pair(2.01, 4, cfg).near_pole);
  CHECK(rel_err(alpha(2.01, 4, cfg), -1.0004037933242518) <= 1e-9);
  CHECK(rel_err(alpha(1.99, 4, cfg), -0.99885733298689086) <= 1e-9);
  CHECK(rel_err(alpha(2.001, 4, cfg), -1.0000735222537647) <= 1e-9);
  CHECK(rel_err(eta(2.001, 4, cfg), -1.0007678742677961) <= 1e-9);
  CHECK(rel_err(eta(1.999, 4, cfg), -0.99922715065746893) <= 1e-9);
  // the regular path just outside the guard agrees with the limit trend
  CHECK_FALSE(term_pair(2.06, 4, cfg).near_pole);
}

TEST_CASE("exact pole takes the limit") {
  SummationConfig cfg;
  const TermPair p = term_pair(2.0, 3, cfg);
  CHECK(p.recip_gamma == 0.0);
  CHECK(p.alpha == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(p.eta == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("finite blocks at integer s") {
  SummationConfig cfg;
  CHECK(std::fabs(lhs_finite_block(2.0, cfg) - 0.70631693484712574696) <= 1e-11);
  CHECK(std::fabs(lhs_finite_block(3.0, cfg) - 0.22302897806588645148) <= 1e-11);
}

TEST_CASE("identity residual at integer s") {
  SummationConfig cfg;
  const IdentityReport r2 = identity_residual(2.0, 40, cfg);
  CHECK(r2.gate == 0.0);
  CHECK(r2.rhs == 0.5);
  CHECK_FALSE(r2.tail_partial.has_value());
  CHECK(std::fabs(r2.residual - 0.20631693484712574696) <= 1e-11);
  const IdentityReport r3 = identity_residual(3.0, 40, cfg);
  CHECK(std::fabs(r3.rhs - 1.0 / 6.0) <= 1e-16);
  CHECK(std::fabs(r3.residual - 0.05636231139921978482) <= 1e-11);
}

TEST_CASE("tails diverge for non-integer s") {
  SummationConfig cfg;
  for (double s : {1.5, 5.0 / 3.0, 2.5, 3.3}) {
    const PartialSumTrace t = lhs_tail(s, 30, cfg);
    CAPTURE(s);
    CHECK(t.diverged);
    REQUIRE(t.first_growth_index.has_value());
    CHECK(*t.first_growth_index <= 10 * static_cast<std::uint64_t>(std::ceil(s)));
    CHECK(t.j_first == snapped_floor(s) + 1);
  }
  const IdentityReport r = identity_residual(1.5, 30, cfg);
  CHECK(r.gate == 1.0);
  CHECK(r.tail_diverged);
  CHECK(std::fabs(r.residual) > 1.0);
}

TEST_CASE("integer s has an empty tail and a clipped trace") {
  SummationConfig cfg;
  CHECK(lhs_tail(4.0, 30, cfg).empty());
  const PartialSumTrace t = trace_alternating(TermFamily::eta, 3.0, 30, cfg);
  CHECK(t.terms.size() == 4);
  const PartialSumTrace u = trace_alternating(TermFamily::alpha, 2.5, 12, cfg);
  CHECK(u.terms.size() == 13);
  CHECK(u.terms[0] == 0.0);
}

TEST_CASE("combined family is the sum of the other two") {
  SummationConfig cfg;
  for (std::uint64_t j = 0; j <= 8; ++j) {
    const double sum = family_term(TermFamily::eta, 2.5, j, cfg) + family_term(TermFamily::alpha, 2.5, j, cfg);
    CHECK(family_term(TermFamily::combined, 2.5, j, cfg) == doctest::Approx(sum).epsilon(1e-15));
  }
}

TEST_CASE("term functions reject s <= 1") {
  SummationConfig cfg;
  CHECK_THROWS_AS(term_pair(1.0, 0, cfg), NumericsError);
  CHECK_THROWS_AS(identity_residual(0.5, 10, cfg), NumericsError);
}

TEST_CASE("corollary references") {
  const CorollaryReference a = corollary_reference(Corollary::three_halves);
  CHECK(std::fabs(a.closed_form - 0.75225277806367504926) <= 1e-15);
  CHECK(std::fabs(a.closed_form - a.via_gamma) <= 1e-11);
  const CorollaryReference b = corollary_reference(Corollary::five_thirds);
  CHECK(std::fabs(b.closed_form - 0.66463930045948348164) <= 1e-12);
  CHECK(std::fabs(b.closed_form - b.via_gamma) <= 1e-11);
  CHECK(parse_corollary("five_thirds") == Corollary::five_thirds);
  CHECK_FALSE(parse_corollary("seven").has_value());
}

TEST_CASE("integer inequality as printed") {
  SummationConfig cfg;
  struct Row {
    std::uint64_t s;
    double left, right;
  };
  const Row rows[] = {
      {2, 0.70631693484712575, 4.1164339756999316},   {3, 0.21133333630469770, 1.7573565340500775},
      {4, 0.067523064987524570, 0.51990666561894366}, {5, 0.014200149130184426, 0.11842275706507222},
      {6, 0.0025288323903221064, 0.021964256819555518}};
  for (const Row& r : rows) {
    const InequalityCheck c = integer_inequality_check(r.s, cfg);
    CAPTURE(r.s);
    CHECK(rel_err(c.left_expr, r.left) <= 1e-9);
    CHECK(rel_err(c.right_expr, r.right) <= 1e-9);
    CHECK(c.middle == doctest::Approx(1.0 / factorial(static_cast<int>(r.s))).epsilon(1e-15));
    CHECK_FALSE(c.left_holds);
    CHECK(c.right_holds);
  }
  CHECK_THROWS_AS(integer_inequality_check(1, cfg), NumericsError);
}
