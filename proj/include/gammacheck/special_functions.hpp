#pragma once

#include <cstdint>

#include "gammacheck/summation.hpp"

namespace gammacheck {

enum class GammaMethod { quadrature, product, recurrence_shifted };

const char* to_string(GammaMethod method) noexcept;

struct GammaValue {
  double value = 0.0;
  double log_value = 0.0;  // log |value|; -inf when value == 0
  int sign = 0;            // -1, 0 or +1
  GammaMethod method = GammaMethod::quadrature;
};

struct EulerGamma {
  double value = 0.0;
  std::uint64_t n_used = 0;
  int correction_order = 0;
};

/// Smallest accepted target for euler_gamma.
inline constexpr double kEulerGammaTolFloor = 1e-13;

/*
  Euler-Mascheroni constant from its defining limit H_n - log n, with the
  Euler-Maclaurin corrections 1/(2n), -1/(12n^2), 1/(120n^4) removed. n is
  the smallest integer whose first omitted correction 1/(252 n^6) is below
  target_tol. Throws TolUnreachable below kEulerGammaTolFloor.
*/
EulerGamma euler_gamma(double target_tol);

/// H_n - log n minus the first `correction_order` (0..3) Euler-Maclaurin terms.
EulerGamma euler_gamma_partial(std::uint64_t n, int correction_order);

/// Process-wide gamma computed once at the tightest supported tolerance.
double euler_gamma_value();

/*
  Gamma(s) for s > 0. Positive integers go through the factorial recurrence
  (exact up to 22!); everything else through gamma_quadrature.
*/
GammaValue gamma_reference(double s);

/*
  Gamma(s) for s > 0 from the defining integral. Arguments below 1.5 are
  first shifted up with Gamma(s) = Gamma(s+n) / (s (s+1) ... (s+n-1)). The
  integral is split at max(1, s) and truncated at T >= 2s where the tail
  bound 2 e^{-T} T^{s-1} is negligible against the body.
*/
GammaValue gamma_quadrature(double s);

/// log Gamma(s) for s > 0; Stirling series above 10, quadrature below.
double log_gamma_reference(double s);

/*
  1/Gamma(x + 1) from the Weierstrass product exp(gamma x) prod (1 + x/m) e^{-x/m}.
  Valid for every real x: below -1 the product is summed in log-magnitude and
  its sign comes from the count of negative factors; at negative integers the
  result is an exact zero. `series` optionally receives the log-sum metadata.
*/
GammaValue recip_gamma_product(double x, const SummationConfig& cfg,
                               SeriesEval* series = nullptr);

/// psi(x + 1) = -gamma + sum_{m>=1} x / (m (x + m)).
double digamma(double x, const SummationConfig& cfg);

/// Gamma(x) Gamma(1-x) sin(pi x) / pi - 1 for x in (0, 1).
double reflection_residual(double x);

/// sin(pi x) and cos(pi x) with exact argument reduction.
double sin_pi(double x) noexcept;
double cos_pi(double x) noexcept;

}  // namespace gammacheck
