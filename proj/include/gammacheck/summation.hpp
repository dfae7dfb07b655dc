#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace gammacheck {

/// Truncation policy shared by every infinite sum and product in the library.
struct SummationConfig {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  std::uint64_t max_terms = 1'000'000;
  double pole_guard = 0.05;

  /// Throws NumericsError(invalid_config) when an invariant is violated.
  void validate() const;
};

struct SeriesEval {
  double value = 0.0;
  std::uint64_t terms_used = 0;
  // signed correction for the omitted terms, already folded into value
  double tail_estimate = 0.0;
  // bound on |true sum - value| from truncation
  double tail_bound = 0.0;
  bool converged = false;
};

enum class TraceStop { completed, overflow, cap_exceeded };

/*
  Running record of a j-indexed series. Element k of every vector refers to
  index j = j_first + k. ratio_flags[k] is |t_k| > |t_{k-1}|; ratio_flags[0]
  is always false since there is no predecessor.

  The series is classified as diverged when the trailing run of growth flags
  is at least kDivergenceWindow long and the final term magnitude exceeds the
  magnitude at the start of that run (first_growth_index, an absolute j). A
  trace cut short by a non-finite term is always diverged.
*/
struct PartialSumTrace {
  std::uint64_t j_first = 0;
  std::vector<double> terms;
  std::vector<double> partial_sums;
  std::vector<bool> ratio_flags;
  bool diverged = false;
  std::optional<std::uint64_t> first_growth_index;
  TraceStop stop = TraceStop::completed;

  bool empty() const noexcept { return terms.empty(); }
  std::optional<double> last_partial_sum() const;
};

inline constexpr std::size_t kDivergenceWindow = 5;

/// S(x) = sum_{m>=1} x / (m (x + m)), i.e. psi(x + 1) + gamma.
SeriesEval sum_rational_tail(double x, const SummationConfig& cfg);

/// S(x) with exactly `terms` explicit terms plus the analytic tail correction.
SeriesEval sum_rational_tail_truncated(double x, std::uint64_t terms);

/// L(x) = sum_{m>=1} [log(1 + x/m) - x/m]; requires every factor 1 + x/m > 0.
SeriesEval log_weierstrass_sum(double x, const SummationConfig& cfg);

/// L(x) with exactly `terms` explicit terms plus the analytic tail correction.
SeriesEval log_weierstrass_truncated(double x, std::uint64_t terms);

/*
  sum_{m>=1} [log|1 + x/m| - x/m] for any x that is not a negative integer.
  negative_factors receives the number of factors 1 + x/m below zero, which
  fixes the sign of the product.
*/
SeriesEval log_abs_weierstrass_sum(double x, const SummationConfig& cfg,
                                   std::uint64_t& negative_factors);

/// True when x lies strictly closer than guard to an integer <= -1.
bool near_negative_integer(double x, double guard) noexcept;

/*
  Evaluates term(j) for j = j_first..j_last in ascending order and records
  the partial sums with compensated accumulation. A NumericsError of kind
  cap_exceeded thrown by `term` ends the trace with stop = cap_exceeded; a
  non-finite term ends it with stop = overflow. Other exceptions propagate.
*/
PartialSumTrace build_trace(const std::function<double(std::uint64_t)>& term,
                            std::uint64_t j_first, std::uint64_t j_last);

/// Recomputes ratio_flags, diverged and first_growth_index from terms.
void classify_trace(PartialSumTrace& trace);

}  // namespace gammacheck
