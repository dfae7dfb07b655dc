#pragma once

#include <cstddef>
#include <functional>

namespace gammacheck {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  // estimated absolute error
  std::size_t intervals = 0;
  bool converged = false;
};

using Integrand = std::function<double(double)>;

/*
  Globally adaptive Gauss-Kronrod (7/15) quadrature on a finite interval.
  The interval with the largest error estimate is bisected until the summed
  estimate drops below max(abs_tol, rel_tol * |value|) or max_intervals is
  reached. Error estimates follow the QUADPACK qk15 heuristic.
*/
QuadratureResult integrate_gk15(const Integrand& f, double a, double b, double rel_tol,
                                double abs_tol = 0.0, std::size_t max_intervals = 4000);

/// Recursive adaptive Simpson with Richardson correction; independent of the
/// Gauss-Kronrod path so the two can cross-check one another.
QuadratureResult integrate_simpson(const Integrand& f, double a, double b, double abs_tol,
                                   int max_depth = 50);

}  // namespace gammacheck
