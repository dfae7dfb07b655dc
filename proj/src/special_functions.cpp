#include "gammacheck/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "gammacheck/compensated.hpp"
#include "gammacheck/error.hpp"
#include "gammacheck/quadrature.hpp"

namespace gammacheck {

namespace {

constexpr std::uint64_t kEulerGammaMaxN = 10'000'000;
constexpr double kGammaQuadRelTol = 1e-13;
constexpr double kShiftTarget = 1.5;
constexpr double kStirlingThreshold = 10.0;
constexpr double kMaxExactFactorial = 171.0;

// B_{2k} / (2k (2k-1)) for k = 1..8
constexpr long double kStirlingCoefficients[] = {
    1.0L / 12.0L,        -1.0L / 360.0L,  1.0L / 1260.0L, -1.0L / 1680.0L,
    1.0L / 1188.0L,      -691.0L / 360360.0L, 1.0L / 156.0L, -3617.0L / 122400.0L,
};

double log_gamma_stirling(double s) {
  const long double x = s;
  const long double half_log_two_pi = 0.918938533204672741780329736405617639861L;
  long double result = (x - 0.5L) * std::log(x) - x + half_log_two_pi;
  const long double inv = 1.0L / x;
  const long double inv2 = inv * inv;
  long double power = inv;
  for (long double c : kStirlingCoefficients) {
    result += c * power;
    power *= inv2;
  }
  return static_cast<double>(result);
}

}  // namespace

const char* to_string(GammaMethod method) noexcept {
  switch (method) {
    case GammaMethod::quadrature: return "quadrature";
    case GammaMethod::product: return "product";
    case GammaMethod::recurrence_shifted: return "recurrence-shifted";
  }
  return "unknown";
}

EulerGamma euler_gamma_partial(std::uint64_t n, int correction_order) {
  if (n == 0) throw NumericsError(ErrorKind::domain_error, "euler_gamma needs n >= 1");
  if (correction_order < 0 || correction_order > 3) {
    throw NumericsError(ErrorKind::domain_error, "correction_order must lie in 0..3");
  }
  CompensatedSum harmonic;
  for (std::uint64_t k = 1; k <= n; ++k) harmonic += 1.0 / static_cast<double>(k);

  const double dn = static_cast<double>(n);
  CompensatedSum acc = harmonic;
  acc += -std::log(dn);
  if (correction_order >= 1) acc += -1.0 / (2.0 * dn);
  if (correction_order >= 2) acc += 1.0 / (12.0 * dn * dn);
  if (correction_order >= 3) acc += -1.0 / (120.0 * dn * dn * dn * dn);
  return EulerGamma{acc.value(), n, correction_order};
}

EulerGamma euler_gamma(double target_tol) {
  if (!(target_tol >= kEulerGammaTolFloor)) {
    throw NumericsError(ErrorKind::tol_unreachable,
                        "euler_gamma target below " + std::to_string(kEulerGammaTolFloor));
  }
  // first omitted correction is 1/(252 n^6)
  auto omitted = [](double n) { return 1.0 / (252.0 * std::pow(n, 6.0)); };
  std::uint64_t n = 1;
  while (omitted(static_cast<double>(n)) > target_tol) {
    if (++n > kEulerGammaMaxN) {
      throw NumericsError(ErrorKind::tol_unreachable, "euler_gamma needs n > 1e7");
    }
  }
  return euler_gamma_partial(n, 3);
}

double euler_gamma_value() {
  static const EulerGamma shared = euler_gamma(kEulerGammaTolFloor);
  return shared.value;
}

GammaValue gamma_reference(double s) {
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw NumericsError(ErrorKind::domain_error, "gamma_reference requires s > 0");
  }
  if (s == std::floor(s) && s <= kMaxExactFactorial) {
    // Gamma(n) = (n-1)! by the recurrence from Gamma(1) = 1; exact below 23
    GammaValue out;
    double product = 1.0;
    double log_product = 0.0;
    for (double k = 2.0; k < s; k += 1.0) {
      product *= k;
      log_product += std::log(k);
    }
    out.value = product;
    out.log_value = log_product;
    out.sign = 1;
    out.method = GammaMethod::recurrence_shifted;
    return out;
  }
  return gamma_quadrature(s);
}

GammaValue gamma_quadrature(double s) {
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw NumericsError(ErrorKind::domain_error, "gamma_quadrature requires s > 0");
  }

  double arg = s;
  double log_shift = 0.0;
  double shift = 1.0;
  int shifts = 0;
  while (arg < kShiftTarget) {
    shift *= arg;
    log_shift += std::log(arg);
    arg += 1.0;
    ++shifts;
  }

  const double power = arg - 1.0;
  const Integrand integrand = [power](double t) {
    return t > 0.0 ? std::exp(-t + power * std::log(t)) : 0.0;
  };

  const double split = std::max(1.0, arg);
  const QuadratureResult body = integrate_gk15(integrand, 0.0, split, kGammaQuadRelTol);

  // truncation point: T >= 2 arg and 2 e^{-T} T^{arg-1} <= 1e-17 * body
  const double log_budget = std::log(1e-17 * body.value);
  double cut = std::max(2.0 * arg, split);
  auto log_tail_bound = [power](double t) { return std::log(2.0) - t + power * std::log(t); };
  while (log_tail_bound(cut) > log_budget) cut += std::max(1.0, 0.125 * cut);

  const QuadratureResult middle = integrate_gk15(integrand, split, cut, kGammaQuadRelTol);
  const double integral = body.value + middle.value;

  GammaValue out;
  out.value = integral / shift;
  out.log_value = std::log(integral) - log_shift;
  out.sign = 1;
  out.method = shifts > 0 ? GammaMethod::recurrence_shifted : GammaMethod::quadrature;
  return out;
}

double log_gamma_reference(double s) {
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw NumericsError(ErrorKind::domain_error, "log_gamma_reference requires s > 0");
  }
  if (s >= kStirlingThreshold) return log_gamma_stirling(s);
  return gamma_reference(s).log_value;
}

GammaValue recip_gamma_product(double x, const SummationConfig& cfg, SeriesEval* series_out) {
  GammaValue out;
  out.method = GammaMethod::product;
  if (x <= -1.0 && x == std::floor(x)) {
    // the factor at m = -x vanishes
    out.value = 0.0;
    out.log_value = -std::numeric_limits<double>::infinity();
    out.sign = 0;
    if (series_out) *series_out = SeriesEval{0.0, 0, 0.0, 0.0, true};
    return out;
  }

  const double euler = euler_gamma_value();
  SeriesEval series;
  std::uint64_t negatives = 0;
  if (x > -1.0) {
    series = log_weierstrass_sum(x, cfg);
  } else {
    series = log_abs_weierstrass_sum(x, cfg, negatives);
  }
  out.log_value = euler * x + series.value;
  out.sign = (negatives % 2 == 0) ? 1 : -1;
  out.value = out.sign * std::exp(out.log_value);
  if (series_out) *series_out = series;
  return out;
}

double digamma(double x, const SummationConfig& cfg) {
  const SeriesEval s = sum_rational_tail(x, cfg);
  return s.value - euler_gamma_value();
}

double reflection_residual(double x) {
  if (!(x > 0.0 && x < 1.0)) {
    throw NumericsError(ErrorKind::domain_error, "reflection_residual requires x in (0, 1)");
  }
  const double product = gamma_reference(x).value * gamma_reference(1.0 - x).value;
  return product * sin_pi(x) / std::numbers::pi - 1.0;
}

double sin_pi(double x) noexcept {
  const double n = std::round(x);
  const double r = x - n;  // exact, |r| <= 1/2
  const double v = std::sin(std::numbers::pi * r);
  return std::fmod(std::fabs(n), 2.0) == 1.0 ? -v : v;
}

double cos_pi(double x) noexcept {
  const double n = std::round(x);
  const double r = x - n;
  if (std::fabs(r) == 0.5) return 0.0;
  const double v = std::cos(std::numbers::pi * r);
  return std::fmod(std::fabs(n), 2.0) == 1.0 ? -v : v;
}

}  // namespace gammacheck
