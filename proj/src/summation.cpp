#include "gammacheck/summation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "gammacheck/compensated.hpp"
#include "gammacheck/error.hpp"

namespace gammacheck {

namespace {

// Euler-Maclaurin remainder constant 2 zeta(3) / (2 pi)^3 for the order-3
// remainder, rounded up.
constexpr double kEulerMaclaurinR3 = 0.0097;

constexpr std::uint64_t kMaxTermsCeiling = 1'000'000'000;

std::string describe(double x) {
  std::ostringstream os;
  os.precision(17);
  os << "x=" << x;
  return os.str();
}

// Rational series term f(t) = x / (t (t + x)) and its first two derivatives.
struct RationalModel {
  double x;

  double term(double t) const { return x / (t * (t + x)); }
  double d1(double t) const {
    const double tx = t + x;
    return -x * (2.0 * t + x) / (t * t * tx * tx);
  }
  double d2(double t) const {
    const double tx = t + x;
    return 2.0 * x * (3.0 * t * t + 3.0 * t * x + x * x) / (t * t * t * tx * tx * tx);
  }
  // integral of f over [t, inf) is log(1 + x/t)
  double integral(double t) const { return std::log1p(x / t); }
};

// Log-product series term g(t) = log(1 + x/t) - x/t.
struct LogModel {
  double x;

  double term(double t) const { return std::log1p(x / t) - x / t; }
  double d1(double t) const { return x * x / (t * t * (t + x)); }
  double d2(double t) const {
    const double tx = t + x;
    return -x * x * (3.0 * t + 2.0 * x) / (t * t * t * tx * tx);
  }
  // integral of g over [t, inf) = x - (t + x) log(1 + x/t), expanded in
  // u = x/t to avoid cancellation: -t * sum_{k>=2} (-u)^k / (k (k - 1)).
  double integral(double t) const {
    const double u = x / t;
    double acc = 0.0;
    double power = -u;  // (-u)^(k-1)
    for (int k = 2; k < 200; ++k) {
      power *= -u;
      const double contribution = power / (static_cast<double>(k) * (k - 1));
      acc += contribution;
      if (std::fabs(contribution) <= 1e-18 * std::fabs(acc)) break;
    }
    return -t * acc;
  }
};

template <class Model>
double tail_correction(const Model& model, double cut) {
  // sum_{m>cut} f(m) = int_cut^inf f - f(cut)/2 - f'(cut)/12 + R3
  return model.integral(cut) - 0.5 * model.term(cut) - model.d1(cut) / 12.0;
}

template <class Model>
double tail_bound(const Model& model, double cut) {
  return kEulerMaclaurinR3 * std::fabs(model.d2(cut));
}

// Smallest cut >= lo with tail_bound(cut) <= target, or nullopt past cap.
template <class Model>
std::optional<std::uint64_t> choose_cut(const Model& model, std::uint64_t lo, double target,
                                        std::uint64_t cap) {
  if (lo > cap) return std::nullopt;
  if (tail_bound(model, static_cast<double>(lo)) <= target) return lo;
  std::uint64_t bad = lo;
  std::uint64_t good = lo;
  for (;;) {
    if (good >= cap) return std::nullopt;
    good = std::min(cap, good * 2);
    if (tail_bound(model, static_cast<double>(good)) <= target) break;
    bad = good;
  }
  while (good - bad > 1) {
    const std::uint64_t mid = bad + (good - bad) / 2;
    if (tail_bound(model, static_cast<double>(mid)) <= target) {
      good = mid;
    } else {
      bad = mid;
    }
  }
  return good;
}

// First index past which the Euler-Maclaurin bound is valid: the
// derivatives of both models keep a fixed sign once t + x > 0.
std::uint64_t minimal_cut(double x) {
  return static_cast<std::uint64_t>(std::ceil(2.0 * std::fabs(x))) + 1;
}

struct Accumulation {
  CompensatedSum sum;
  std::uint64_t next = 1;
};

template <class Model, class TermFn>
void accumulate_to(Accumulation& acc, std::uint64_t cut, TermFn&& term_at) {
  for (; acc.next <= cut; ++acc.next) acc.sum += term_at(acc.next);
}

template <class Model>
SeriesEval finish(const Model& model, Accumulation& acc, std::uint64_t cut, double abs_tol) {
  SeriesEval out;
  const double c = static_cast<double>(cut);
  out.tail_estimate = tail_correction(model, c);
  out.tail_bound = tail_bound(model, c);
  out.terms_used = cut;
  CompensatedSum total = acc.sum;
  total += out.tail_estimate;
  out.value = total.value();
  out.converged = out.tail_bound <= abs_tol;
  return out;
}

template <class Model, class TermFn>
SeriesEval sum_adaptive(const Model& model, const SummationConfig& cfg, TermFn&& term_at,
                        double x) {
  const std::uint64_t lo = minimal_cut(x);
  const auto cut = choose_cut(model, lo, cfg.abs_tol, cfg.max_terms);
  if (!cut) {
    throw NumericsError(ErrorKind::cap_exceeded,
                        describe(x) + " needs more than max_terms=" + std::to_string(cfg.max_terms));
  }
  Accumulation acc;
  accumulate_to<Model>(acc, *cut, term_at);
  SeriesEval out = finish(model, acc, *cut, cfg.abs_tol);

  // The relative target is honoured when reachable inside the cap; the
  // absolute target alone decides convergence.
  const double rel_target = cfg.rel_tol * std::fabs(out.value);
  if (out.tail_bound > rel_target && rel_target > 0.0) {
    if (const auto tighter = choose_cut(model, *cut, rel_target, cfg.max_terms)) {
      accumulate_to<Model>(acc, *tighter, term_at);
      out = finish(model, acc, *tighter, cfg.abs_tol);
    }
  }
  return out;
}

// log|1 + x/m| with full relative accuracy when 1 + x/m is close to zero.
double log_abs_factor(double x, double m) {
  const double ratio = x / m;
  if (std::fabs(ratio) < 0.5) return std::log1p(ratio);
  return std::log(std::fabs(m + x) / m);
}

}  // namespace

void SummationConfig::validate() const {
  if (!(abs_tol > 0.0) || !std::isfinite(abs_tol)) {
    throw NumericsError(ErrorKind::invalid_config, "abs_tol must be positive");
  }
  if (!(rel_tol > 0.0) || !std::isfinite(rel_tol)) {
    throw NumericsError(ErrorKind::invalid_config, "rel_tol must be positive");
  }
  if (max_terms < 1 || max_terms > kMaxTermsCeiling) {
    throw NumericsError(ErrorKind::invalid_config, "max_terms must lie in [1, 1e9]");
  }
  if (!(pole_guard > 0.0 && pole_guard < 0.5)) {
    throw NumericsError(ErrorKind::invalid_config, "pole_guard must lie in (0, 0.5)");
  }
}

std::optional<double> PartialSumTrace::last_partial_sum() const {
  if (partial_sums.empty()) return std::nullopt;
  return partial_sums.back();
}

bool near_negative_integer(double x, double guard) noexcept {
  const double nearest = std::round(x);
  return nearest <= -1.0 && std::fabs(x - nearest) < guard;
}

SeriesEval sum_rational_tail(double x, const SummationConfig& cfg) {
  cfg.validate();
  if (near_negative_integer(x, cfg.pole_guard)) {
    throw NumericsError(ErrorKind::near_pole, describe(x) + " is within pole_guard of a pole");
  }
  if (x == 0.0) return SeriesEval{0.0, 0, 0.0, 0.0, true};
  const RationalModel model{x};
  return sum_adaptive(model, cfg, [&](std::uint64_t m) { return model.term(static_cast<double>(m)); },
                      x);
}

SeriesEval sum_rational_tail_truncated(double x, std::uint64_t terms) {
  if (x == 0.0) return SeriesEval{0.0, 0, 0.0, 0.0, true};
  if (terms < minimal_cut(x)) {
    throw NumericsError(ErrorKind::invalid_config, "truncation below 2|x|+1 has no valid tail bound");
  }
  const RationalModel model{x};
  Accumulation acc;
  accumulate_to<RationalModel>(acc, terms,
                               [&](std::uint64_t m) { return model.term(static_cast<double>(m)); });
  return finish(model, acc, terms, std::numeric_limits<double>::infinity());
}

SeriesEval log_weierstrass_sum(double x, const SummationConfig& cfg) {
  cfg.validate();
  if (!(x > -1.0)) {
    throw NumericsError(ErrorKind::non_positive_factor, describe(x) + " makes 1 + x/1 <= 0");
  }
  if (x == 0.0) return SeriesEval{0.0, 0, 0.0, 0.0, true};
  const LogModel model{x};
  return sum_adaptive(model, cfg, [&](std::uint64_t m) { return model.term(static_cast<double>(m)); },
                      x);
}

SeriesEval log_weierstrass_truncated(double x, std::uint64_t terms) {
  if (!(x > -1.0)) {
    throw NumericsError(ErrorKind::non_positive_factor, describe(x) + " makes 1 + x/1 <= 0");
  }
  if (x == 0.0) return SeriesEval{0.0, 0, 0.0, 0.0, true};
  if (terms < minimal_cut(x)) {
    throw NumericsError(ErrorKind::invalid_config, "truncation below 2|x|+1 has no valid tail bound");
  }
  const LogModel model{x};
  Accumulation acc;
  accumulate_to<LogModel>(acc, terms,
                          [&](std::uint64_t m) { return model.term(static_cast<double>(m)); });
  return finish(model, acc, terms, std::numeric_limits<double>::infinity());
}

SeriesEval log_abs_weierstrass_sum(double x, const SummationConfig& cfg,
                                   std::uint64_t& negative_factors) {
  cfg.validate();
  negative_factors = 0;
  if (x <= -1.0 && x == std::floor(x)) {
    throw NumericsError(ErrorKind::non_positive_factor, describe(x) + " has a vanishing factor");
  }
  if (x == 0.0) return SeriesEval{0.0, 0, 0.0, 0.0, true};
  const LogModel model{x};
  std::uint64_t negatives = 0;
  auto term_at = [&](std::uint64_t m) {
    const double dm = static_cast<double>(m);
    if (dm + x < 0.0) ++negatives;
    return log_abs_factor(x, dm) - x / dm;
  };
  SeriesEval out = sum_adaptive(model, cfg, term_at, x);
  negative_factors = negatives;
  return out;
}

PartialSumTrace build_trace(const std::function<double(std::uint64_t)>& term,
                            std::uint64_t j_first, std::uint64_t j_last) {
  PartialSumTrace trace;
  trace.j_first = j_first;
  if (j_last < j_first) return trace;
  const std::size_t count = static_cast<std::size_t>(j_last - j_first + 1);
  trace.terms.reserve(count);
  trace.partial_sums.reserve(count);

  CompensatedSum acc;
  for (std::uint64_t j = j_first; j <= j_last; ++j) {
    double t = 0.0;
    try {
      t = term(j);
    } catch (const NumericsError& e) {
      if (e.kind() != ErrorKind::cap_exceeded) throw;
      trace.stop = TraceStop::cap_exceeded;
      break;
    }
    if (!std::isfinite(t)) {
      trace.stop = TraceStop::overflow;
      break;
    }
    acc += t;
    trace.terms.push_back(t);
    trace.partial_sums.push_back(acc.value());
  }
  classify_trace(trace);
  return trace;
}

void classify_trace(PartialSumTrace& trace) {
  const std::size_t n = trace.terms.size();
  trace.ratio_flags.assign(n, false);
  for (std::size_t k = 1; k < n; ++k) {
    trace.ratio_flags[k] = std::fabs(trace.terms[k]) > std::fabs(trace.terms[k - 1]);
  }

  std::size_t run = 0;
  while (run < n && trace.ratio_flags[n - 1 - run]) ++run;

  trace.first_growth_index.reset();
  trace.diverged = false;
  if (run > 0) {
    const std::size_t start = n - run;
    trace.first_growth_index = trace.j_first + start;
    trace.diverged =
        run >= kDivergenceWindow && std::fabs(trace.terms[n - 1]) > std::fabs(trace.terms[start]);
  }
  if (trace.stop == TraceStop::overflow) trace.diverged = true;
}

}  // namespace gammacheck
