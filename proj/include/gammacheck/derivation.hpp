#pragma once

#include <cstdint>

#include "gammacheck/summation.hpp"

namespace gammacheck {

// F(s) = int_1^s e^t t^s dt and the pieces needed to differentiate it.

struct ClosedFormEval {
  double value = 0.0;         // finite block plus gated tail partial sum
  double finite_block = 0.0;
  PartialSumTrace tail;       // empty when s is an integer
};

struct DerivationReport {
  double s = 0.0;
  double F_quad = 0.0;
  double F_closed = 0.0;
  double closed_minus_quad = 0.0;
  double dF_numeric = 0.0;
  double dF_richardson = 0.0;  // (4 D(h/2) - D(h)) / 3
  double boundary_dF = 0.0;       // e^s s^s
  double G_correction = 0.0;   // int_1^s e^t t^s log t dt
  double leibniz_residual = 0.0;
  bool closed_tail_diverged = false;
};

double F_quadrature(double s);

/*
  Integration-by-parts expansion
    sum_{j<=floor s} (-1)^j e^s s^{s-j} R_j + e sum_{j<=floor s} (-1)^{j+1} R_j
  plus, for non-integer s, the same two sums over j = floor(s)+1..j_max,
  with R_j = Gamma(s+1) / Gamma(s+1-j).
*/
ClosedFormEval F_closed_form(double s, std::uint64_t j_max, const SummationConfig& cfg);

/// Gamma(s+1) / Gamma(s+1-j), choosing the stable form for each regime.
double gamma_ratio(double s, std::uint64_t j, const SummationConfig& cfg);

double G_logweight_quadrature(double s);

/// Same integral through adaptive Simpson, for the dual-rule check.
double G_logweight_simpson(double s);

/// Central difference of F_quadrature; requires s - h > 1 and h in [1e-6, 1e-2].
double F_derivative_numeric(double s, double h);

/// Default step 1e-4 * max(1, s).
double default_derivative_step(double s);

DerivationReport leibniz_report(double s, std::uint64_t j_max, const SummationConfig& cfg);

}  // namespace gammacheck
