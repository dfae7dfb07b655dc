#include "gammacheck/derivation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gammacheck/compensated.hpp"
#include "gammacheck/error.hpp"
#include "gammacheck/identity.hpp"
#include "gammacheck/quadrature.hpp"
#include "gammacheck/special_functions.hpp"

namespace gammacheck {

namespace {

constexpr double kFQuadRelTol = 1e-14;
constexpr double kGQuadRelTol = 1e-13;

void require_above_one(double s, const char* what) {
  if (!(s > 1.0) || !std::isfinite(s)) {
    throw NumericsError(ErrorKind::domain_error, std::string(what) + " requires s > 1");
  }
}

double alternating(std::uint64_t j) { return (j % 2 == 0) ? 1.0 : -1.0; }

double log_gamma_plus_one(double s) {
  return s + 1.0 < 30.0 ? gamma_reference(s + 1.0).log_value : log_gamma_reference(s + 1.0);
}

}  // namespace

double F_quadrature(double s) {
  require_above_one(s, "F_quadrature");
  const Integrand f = [s](double t) { return std::exp(t + s * std::log(t)); };
  return integrate_gk15(f, 1.0, s, kFQuadRelTol).value;
}

double G_logweight_quadrature(double s) {
  require_above_one(s, "G_logweight_quadrature");
  const Integrand f = [s](double t) { return std::exp(t + s * std::log(t)) * std::log(t); };
  return integrate_gk15(f, 1.0, s, kGQuadRelTol).value;
}

double G_logweight_simpson(double s) {
  require_above_one(s, "G_logweight_simpson");
  const Integrand f = [s](double t) { return std::exp(t + s * std::log(t)) * std::log(t); };
  // absolute target scaled by the integrand's right-end magnitude
  const double scale = std::exp(s + s * std::log(s)) * std::log(s) * (s - 1.0);
  return integrate_simpson(f, 1.0, s, 1e-13 * scale).value;
}

double default_derivative_step(double s) { return 1e-4 * std::max(1.0, s); }

double F_derivative_numeric(double s, double h) {
  if (!(h >= 1e-6 && h <= 1e-2)) {
    throw NumericsError(ErrorKind::domain_error, "derivative step must lie in [1e-6, 1e-2]");
  }
  if (!(s - h > 1.0)) throw NumericsError(ErrorKind::domain_error, "derivative needs s - h > 1");
  return (F_quadrature(s + h) - F_quadrature(s - h)) / (2.0 * h);
}

double gamma_ratio(double s, std::uint64_t j, const SummationConfig& cfg) {
  const std::uint64_t n = snapped_floor(s);
  if (j <= n) {
    // falling factorial s (s-1) ... (s-j+1)
    double product = 1.0;
    for (std::uint64_t i = 0; i < j; ++i) product *= s - static_cast<double>(i);
    return product;
  }
  const double lower = s + 1.0 - static_cast<double>(j);
  if (lower > 0.0) return std::exp(log_gamma_plus_one(s) - log_gamma_reference(lower));
  const GammaValue recip = recip_gamma_product(lower - 1.0, cfg);
  return std::exp(log_gamma_plus_one(s)) * recip.value;
}

ClosedFormEval F_closed_form(double s, std::uint64_t j_max, const SummationConfig& cfg) {
  require_above_one(s, "F_closed_form");
  cfg.validate();
  const double e = std::numbers::e;
  const double exp_s = std::exp(s);
  const std::uint64_t n = snapped_floor(s);

  auto term = [&](std::uint64_t j) {
    const double ratio = gamma_ratio(s, j, cfg);
    const double upper = alternating(j) * exp_s * std::pow(s, s - static_cast<double>(j)) * ratio;
    const double lower = e * -alternating(j) * ratio;
    return upper + lower;
  };

  ClosedFormEval out;
  CompensatedSum block;
  for (std::uint64_t j = 0; j <= n; ++j) block += term(j);
  out.finite_block = block.value();
  out.value = out.finite_block;

  if (gate(s) != 0.0) {
    out.tail = build_trace(term, n + 1, j_max);
    if (const auto partial = out.tail.last_partial_sum()) out.value += *partial;
  } else {
    out.tail.j_first = n + 1;
  }
  return out;
}

DerivationReport leibniz_report(double s, std::uint64_t j_max, const SummationConfig& cfg) {
  if (!(s > 1.0 + 1e-3)) throw NumericsError(ErrorKind::domain_error, "leibniz_report requires s > 1.001");
  DerivationReport r;
  r.s = s;
  r.F_quad = F_quadrature(s);
  const ClosedFormEval closed = F_closed_form(s, j_max, cfg);
  r.F_closed = closed.value;
  r.closed_tail_diverged = closed.tail.diverged;
  r.closed_minus_quad = r.F_closed - r.F_quad;

  const double h = default_derivative_step(s);
  r.dF_numeric = F_derivative_numeric(s, h);
  const double half = F_derivative_numeric(s, 0.5 * h);
  r.dF_richardson = (4.0 * half - r.dF_numeric) / 3.0;

  r.boundary_dF = std::exp(s + s * std::log(s));
  r.G_correction = G_logweight_quadrature(s);
  r.leibniz_residual = r.dF_numeric - r.boundary_dF - r.G_correction;
  return r;
}

}  // namespace gammacheck
