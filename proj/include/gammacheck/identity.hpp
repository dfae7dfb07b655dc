#pragma once

#include <cstdint>
#include <optional>

#include "gammacheck/summation.hpp"

namespace gammacheck {

/// Integer snap tolerance used by gate() and the block split.
inline constexpr double kIntegerSnapTol = 1e-12;

enum class TermFamily { eta, alpha, combined };

const char* to_string(TermFamily family) noexcept;
std::optional<TermFamily> parse_term_family(const char* text) noexcept;

/*
  Both term functions of the identity at one (s, j), sharing x = s - j.

    alpha = (1/Gamma(x+1)) (psi(s+1) - psi(x+1))
    eta   = alpha + (1/Gamma(x+1)) (2 + log s - j/s)

  Within pole_guard of x = -k the pair is evaluated through the reflection
  formulas, which cancel the zero of 1/Gamma against the pole of psi.
*/
struct TermPair {
  double s = 0.0;
  std::uint64_t j = 0;
  double x = 0.0;
  double eta = 0.0;
  double alpha = 0.0;
  double recip_gamma = 0.0;  // 1/Gamma(x + 1)
  bool near_pole = false;
  SeriesEval product_eval;   // log-product sum behind 1/Gamma
  SeriesEval digamma_eval;   // rational sum behind psi at the shifted argument
};

struct IdentityReport {
  double s = 0.0;
  double gate = 0.0;
  double finite_block = 0.0;
  std::optional<double> tail_partial;
  bool tail_diverged = false;
  std::optional<std::uint64_t> tail_first_growth_index;
  TraceStop tail_stop = TraceStop::completed;
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
  std::uint64_t j_max = 0;
  double prefactor = 0.0;

  bool terms_capped() const noexcept { return tail_stop == TraceStop::cap_exceeded; }
};

struct InequalityCheck {
  std::uint64_t s = 0;
  double left_expr = 0.0;
  double middle = 0.0;
  double right_expr = 0.0;
  bool left_holds = false;
  bool right_holds = false;
};

/// floor(s) after snapping values within kIntegerSnapTol of an integer.
std::uint64_t snapped_floor(double s);

/// 0 for (snapped) integer s, 1 otherwise.
double gate(double s);

/// 1 / (e^{s-1} s^s)
double identity_prefactor(double s);

TermPair term_pair(double s, std::uint64_t j, const SummationConfig& cfg);
double eta(double s, std::uint64_t j, const SummationConfig& cfg);
double alpha(double s, std::uint64_t j, const SummationConfig& cfg);

/*
  Signed term of one family at index j:
    eta       (-1)^j eta / s^j
    alpha     P (-1)^{j+1} alpha,  P = identity_prefactor(s)
    combined  the sum of the two
*/
double family_term(TermFamily family, double s, std::uint64_t j, const SummationConfig& cfg);

/*
  Partial sums of a family from j = 0. For integer s the tail block is gated
  off, so the trace stops at j = s even when j_max is larger.
*/
PartialSumTrace trace_alternating(TermFamily family, double s, std::uint64_t j_max,
                                  const SummationConfig& cfg);

/// Both sums over j = 0..floor(s); the alpha sum is scaled by the prefactor.
double lhs_finite_block(double s, const SummationConfig& cfg);

/// Combined tail for j = floor(s)+1..j_max; empty for integer s.
PartialSumTrace lhs_tail(double s, std::uint64_t j_max, const SummationConfig& cfg);

IdentityReport identity_residual(double s, std::uint64_t j_max, const SummationConfig& cfg);

enum class Corollary { three_halves, five_thirds };

const char* to_string(Corollary which) noexcept;
std::optional<Corollary> parse_corollary(const char* text) noexcept;

/*
  Right-hand side of a corollary two ways: the closed form quoted with it
  (4 / (3 sqrt(pi)) at s = 3/2, 9 / (10 Gamma(2/3)) at s = 5/3) and directly
  as 1 / Gamma(s + 1).
*/
struct CorollaryReference {
  double s = 0.0;
  double closed_form = 0.0;
  double via_gamma = 0.0;
};

CorollaryReference corollary_reference(Corollary which);

/// The two-sided bound for integer s >= 2, evaluated exactly as printed.
InequalityCheck integer_inequality_check(std::uint64_t s, const SummationConfig& cfg);

}  // namespace gammacheck
