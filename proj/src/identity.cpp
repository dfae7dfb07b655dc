#include "gammacheck/identity.hpp"

#include <cmath>
#include <cstring>
#include <numbers>

#include "gammacheck/compensated.hpp"
#include "gammacheck/error.hpp"
#include "gammacheck/special_functions.hpp"

namespace gammacheck {

namespace {

void require_s(double s) {
  if (!(s > 1.0) || !std::isfinite(s)) {
    throw NumericsError(ErrorKind::domain_error, "identity terms require s > 1");
  }
}

double signed_unit(std::uint64_t j) { return (j % 2 == 0) ? 1.0 : -1.0; }

}  // namespace

const char* to_string(TermFamily family) noexcept {
  switch (family) {
    case TermFamily::eta: return "eta";
    case TermFamily::alpha: return "alpha";
    case TermFamily::combined: return "combined";
  }
  return "unknown";
}

std::optional<TermFamily> parse_term_family(const char* text) noexcept {
  if (std::strcmp(text, "eta") == 0) return TermFamily::eta;
  if (std::strcmp(text, "alpha") == 0) return TermFamily::alpha;
  if (std::strcmp(text, "combined") == 0) return TermFamily::combined;
  return std::nullopt;
}

std::uint64_t snapped_floor(double s) {
  const double nearest = std::round(s);
  const double base = std::fabs(s - nearest) <= kIntegerSnapTol ? nearest : std::floor(s);
  return static_cast<std::uint64_t>(base);
}

double gate(double s) {
  return std::fabs(s - std::round(s)) <= kIntegerSnapTol ? 0.0 : 1.0;
}

double identity_prefactor(double s) { return std::exp(-(s - 1.0) - s * std::log(s)); }

TermPair term_pair(double s, std::uint64_t j, const SummationConfig& cfg) {
  require_s(s);
  cfg.validate();

  TermPair out;
  out.s = s;
  out.j = j;
  out.x = s - static_cast<double>(j);
  out.near_pole = near_negative_integer(out.x, cfg.pole_guard);

  const double x = out.x;
  const double extra = 2.0 + std::log(s) - static_cast<double>(j) / s;
  // psi(s+1) - psi(x+1) = S(s) - S(x); gamma cancels
  const double rational_s = sum_rational_tail(s, cfg).value;

  if (!out.near_pole) {
    const GammaValue recip = recip_gamma_product(x, cfg, &out.product_eval);
    out.digamma_eval = sum_rational_tail(x, cfg);
    out.recip_gamma = recip.value;
    out.alpha = recip.value * (rational_s - out.digamma_eval.value);
    out.eta = out.alpha + recip.value * extra;
    return out;
  }

  // x = -k + delta. With y = x + 1 = 1 - k + delta:
  //   1/Gamma(y) = sin(pi y) Gamma(1 - y) / pi
  //   psi(y)     = psi(1 - y) - pi cot(pi y)
  // so (1/Gamma(y)) (psi(s+1) - psi(y))
  //   = Gamma(-x) [sin(pi y) (psi(s+1) - psi(-x)) + pi cos(pi y)] / pi
  const double mirrored = -x - 1.0;  // Gamma(-x) = Gamma(mirrored + 1)
  const GammaValue recip_mirror = recip_gamma_product(mirrored, cfg, &out.product_eval);
  out.digamma_eval = sum_rational_tail(mirrored, cfg);
  const double sin_y = -sin_pi(x);
  const double cos_y = -cos_pi(x);
  const double gamma_mirror_over_pi = 1.0 / (std::numbers::pi * recip_mirror.value);

  out.recip_gamma = sin_y * gamma_mirror_over_pi;
  out.alpha = gamma_mirror_over_pi *
              (sin_y * (rational_s - out.digamma_eval.value) + std::numbers::pi * cos_y);
  out.eta = out.alpha + out.recip_gamma * extra;
  return out;
}

double eta(double s, std::uint64_t j, const SummationConfig& cfg) { return term_pair(s, j, cfg).eta; }

double alpha(double s, std::uint64_t j, const SummationConfig& cfg) {
  return term_pair(s, j, cfg).alpha;
}

double family_term(TermFamily family, double s, std::uint64_t j, const SummationConfig& cfg) {
  const TermPair pair = term_pair(s, j, cfg);
  const double eta_term = signed_unit(j) * pair.eta / std::pow(s, static_cast<double>(j));
  const double alpha_term = identity_prefactor(s) * -signed_unit(j) * pair.alpha;
  switch (family) {
    case TermFamily::eta: return eta_term;
    case TermFamily::alpha: return alpha_term;
    case TermFamily::combined: return eta_term + alpha_term;
  }
  return 0.0;
}

PartialSumTrace trace_alternating(TermFamily family, double s, std::uint64_t j_max,
                                  const SummationConfig& cfg) {
  require_s(s);
  cfg.validate();
  std::uint64_t last = j_max;
  if (gate(s) == 0.0) last = std::min(last, snapped_floor(s));
  return build_trace([&](std::uint64_t j) { return family_term(family, s, j, cfg); }, 0, last);
}

double lhs_finite_block(double s, const SummationConfig& cfg) {
  require_s(s);
  const std::uint64_t n = snapped_floor(s);
  CompensatedSum eta_block;
  CompensatedSum alpha_block;
  for (std::uint64_t j = 0; j <= n; ++j) {
    const TermPair pair = term_pair(s, j, cfg);
    eta_block += signed_unit(j) * pair.eta / std::pow(s, static_cast<double>(j));
    alpha_block += -signed_unit(j) * pair.alpha;
  }
  CompensatedSum total = eta_block;
  total += identity_prefactor(s) * alpha_block.value();
  return total.value();
}

PartialSumTrace lhs_tail(double s, std::uint64_t j_max, const SummationConfig& cfg) {
  require_s(s);
  cfg.validate();
  const std::uint64_t first = snapped_floor(s) + 1;
  if (gate(s) == 0.0) {
    PartialSumTrace empty;
    empty.j_first = first;
    return empty;
  }
  return build_trace([&](std::uint64_t j) { return family_term(TermFamily::combined, s, j, cfg); },
                     first, j_max);
}

IdentityReport identity_residual(double s, std::uint64_t j_max, const SummationConfig& cfg) {
  require_s(s);
  cfg.validate();
  IdentityReport report;
  report.s = s;
  report.gate = gate(s);
  report.j_max = j_max;
  report.prefactor = identity_prefactor(s);
  report.finite_block = lhs_finite_block(s, cfg);

  const PartialSumTrace tail = lhs_tail(s, j_max, cfg);
  report.tail_partial = tail.last_partial_sum();
  report.tail_diverged = tail.diverged;
  report.tail_first_growth_index = tail.first_growth_index;
  report.tail_stop = tail.stop;

  report.lhs = report.finite_block;
  if (report.gate != 0.0 && report.tail_partial) report.lhs += *report.tail_partial;
  report.rhs = 1.0 / gamma_reference(s + 1.0).value;
  report.residual = report.lhs - report.rhs;
  return report;
}

const char* to_string(Corollary which) noexcept {
  return which == Corollary::three_halves ? "three_halves" : "five_thirds";
}

std::optional<Corollary> parse_corollary(const char* text) noexcept {
  if (std::strcmp(text, "three_halves") == 0) return Corollary::three_halves;
  if (std::strcmp(text, "five_thirds") == 0) return Corollary::five_thirds;
  return std::nullopt;
}

CorollaryReference corollary_reference(Corollary which) {
  CorollaryReference ref;
  if (which == Corollary::three_halves) {
    ref.s = 1.5;
    ref.closed_form = 4.0 / (3.0 * std::sqrt(std::numbers::pi));
  } else {
    ref.s = 5.0 / 3.0;
    ref.closed_form = 9.0 / (10.0 * gamma_reference(2.0 / 3.0).value);
  }
  ref.via_gamma = 1.0 / gamma_reference(ref.s + 1.0).value;
  return ref;
}

InequalityCheck integer_inequality_check(std::uint64_t s, const SummationConfig& cfg) {
  if (s < 2) throw NumericsError(ErrorKind::domain_error, "inequality check requires integer s >= 2");
  const double sd = static_cast<double>(s);
  CompensatedSum eta_sum;
  CompensatedSum alpha_sum;
  CompensatedSum magnitude_sum;
  for (std::uint64_t j = 0; j <= s; ++j) {
    const TermPair pair = term_pair(sd, j, cfg);
    const double scale = std::pow(sd, static_cast<double>(j));
    eta_sum += signed_unit(j) * pair.eta / scale;
    alpha_sum += signed_unit(j) * pair.alpha;
    magnitude_sum += (std::fabs(pair.eta) + std::fabs(pair.alpha)) / scale;
  }
  InequalityCheck out;
  out.s = s;
  out.left_expr = std::fabs(eta_sum.value()) - identity_prefactor(sd) * std::fabs(alpha_sum.value());
  out.middle = 1.0 / gamma_reference(sd + 1.0).value;
  out.right_expr = magnitude_sum.value();
  out.left_holds = out.left_expr <= out.middle;
  out.right_holds = out.middle < out.right_expr;
  return out;
}

}  // namespace gammacheck
