#include "gammacheck/cli.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "gammacheck/derivation.hpp"
#include "gammacheck/error.hpp"
#include "gammacheck/identity.hpp"
#include "gammacheck/scan.hpp"
#include "gammacheck/special_functions.hpp"

namespace gammacheck {

namespace {

constexpr double kEulerGammaDigits = 0.57721566490153286061;

struct Outcome {
  RunRecord record;
  int code = kExitOk;
};

int exit_code_for(const NumericsError& e) {
  switch (e.kind()) {
    case ErrorKind::invalid_config:
    case ErrorKind::domain_error:
    case ErrorKind::near_pole:
    case ErrorKind::non_positive_factor:
      return kExitUsage;
    case ErrorKind::cap_exceeded:
    case ErrorKind::tol_unreachable:
    case ErrorKind::numerical_overflow:
      return kExitNumerical;
  }
  return kExitNumerical;
}

std::string at_s(double s) { return "s=" + format_real(s); }

std::string describe_stop(TraceStop stop) {
  switch (stop) {
    case TraceStop::completed: return "completed";
    case TraceStop::overflow: return "stopped at a non-finite term";
    case TraceStop::cap_exceeded: return "stopped at max_terms";
  }
  return "unknown";
}

void add_trace_findings(const std::string& label, const PartialSumTrace& trace,
                        std::vector<std::string>& findings) {
  if (trace.diverged) {
    std::string line = label + ": diverged";
    if (trace.first_growth_index) {
      line += " (terms grow from j=" + std::to_string(*trace.first_growth_index) + ")";
    }
    findings.push_back(line);
  }
  if (trace.stop != TraceStop::completed) {
    findings.push_back(label + ": trace " + describe_stop(trace.stop));
  }
}

bool all_finite(const std::vector<Cell>& cells) {
  for (const auto& c : cells) {
    if (const double* v = std::get_if<double>(&c); v && !std::isfinite(*v)) return false;
  }
  return true;
}

std::vector<Cell> trace_row(const PartialSumTrace& trace, std::size_t k) {
  return {static_cast<std::int64_t>(trace.j_first + k), trace.terms[k], trace.partial_sums[k],
          static_cast<bool>(trace.ratio_flags[k])};
}

template <class Fn>
double max_over(const std::vector<double>& xs, Fn&& fn) {
  double worst = 0.0;
  for (double x : xs) {
    const double v = fn(x);
    if (!std::isfinite(v)) return v;
    worst = std::max(worst, v);
  }
  return worst;
}

template <class Fn>
SelftestCheck checked(std::string name, double tolerance, Fn&& fn) {
  SelftestCheck c;
  c.name = std::move(name);
  c.tolerance = tolerance;
  try {
    c.value = fn();
    c.passed = std::isfinite(c.value) && c.value <= tolerance;
  } catch (const std::exception& e) {
    c.value = std::numeric_limits<double>::quiet_NaN();
    c.error = e.what();
  }
  return c;
}

}  // namespace

std::vector<SelftestCheck> run_selftest(const SummationConfig& cfg) {
  std::vector<SelftestCheck> checks;

  checks.push_back(checked("euler_gamma", std::max(cfg.abs_tol, 1e-15), [&] {
    return std::fabs(euler_gamma(cfg.abs_tol).value - kEulerGammaDigits);
  }));

  checks.push_back(checked("euler_gamma_9_digits", 0.0, [&] {
    const double digits = std::floor(euler_gamma(1e-9).value * 1e9);
    return std::fabs(digits - 577215664.0);
  }));

  checks.push_back(checked("functional_equation", 1e-11, [&] {
    return max_over({0.5, 1.3, 2.7, 6.1}, [](double s) {
      const double next = gamma_reference(s + 1.0).value;
      return std::fabs(next - s * gamma_reference(s).value) / next;
    });
  }));

  checks.push_back(checked("reflection", 1e-10, [&] {
    std::vector<double> xs;
    for (int i = 0; i < 20; ++i) xs.push_back((i + 0.5) / 20.0);
    return max_over(xs, [](double x) { return std::fabs(reflection_residual(x)); });
  }));

  checks.push_back(checked("product_vs_quadrature", 1e-8, [&] {
    std::vector<double> xs;
    for (int i = 0; i < 50; ++i) xs.push_back(-0.9 + (i + 0.5) * 10.9 / 50.0);
    return max_over(xs, [&](double x) {
      return std::fabs(recip_gamma_product(x, cfg).value * gamma_reference(x + 1.0).value - 1.0);
    });
  }));

  checks.push_back(checked("digamma_vs_log_gamma_slope", 1e-6, [&] {
    return max_over({0.5, 1.0, 2.0, 5.0}, [&](double x) {
      constexpr double h = 1e-5;
      const double slope =
          (log_gamma_reference(x + 1.0 + h) - log_gamma_reference(x + 1.0 - h)) / (2.0 * h);
      return std::fabs(digamma(x, cfg) - slope);
    });
  }));

  checks.push_back(checked("digamma_telescoping", 1e-10, [&] {
    const double g = euler_gamma_value();
    return std::max({std::fabs(digamma(0.0, cfg) + g), std::fabs(digamma(1.0, cfg) - (1.0 - g)),
                     std::fabs(digamma(2.0, cfg) - (1.5 - g))});
  }));

  checks.push_back(checked("reciprocal_zeros", 0.0, [&] {
    double worst = 0.0;
    for (int k = 1; k <= 10; ++k) {
      worst = std::max(worst, std::fabs(recip_gamma_product(-k, cfg).value));
    }
    return worst;
  }));

  return checks;
}

namespace {

Outcome cmd_selftest(const SummationConfig& cfg) {
  Outcome o;
  o.record.columns = {"check", "value", "tolerance", "passed"};
  for (const auto& c : run_selftest(cfg)) {
    o.record.rows.push_back({c.name, c.value, c.tolerance, c.passed});
    if (!c.error.empty()) o.record.findings.push_back(c.name + ": " + c.error);
    if (!c.passed) o.code = kExitNumerical;
  }
  return o;
}

Outcome cmd_residual(const ScanConfig& scan) {
  Outcome o;
  o.record.columns = kResidualColumns;
  for (const auto& row : scan_residual(scan, Execution::parallel)) {
    if (!row.report) {
      o.record.findings.push_back(at_s(row.s) + ": " + row.error);
      o.code = kExitNumerical;
      continue;
    }
    const IdentityReport& r = *row.report;
    auto cells = residual_cells(r);
    if (!all_finite(cells)) {
      o.record.findings.push_back(at_s(r.s) + ": non-finite value in row");
      o.code = kExitNumerical;
    }
    o.record.rows.push_back(std::move(cells));
    if (r.tail_diverged) {
      std::string line = at_s(r.s) + ": tail diverged";
      if (r.tail_first_growth_index) {
        line += " (terms grow from j=" + std::to_string(*r.tail_first_growth_index) + ")";
      }
      o.record.findings.push_back(line);
    }
    if (r.terms_capped()) o.record.findings.push_back(at_s(r.s) + ": tail stopped at max_terms");
    if (r.gate == 0.0) {
      o.record.findings.push_back(at_s(r.s) + ": residual " + format_real(r.residual) +
                                  " with the tail gated off");
    }
  }
  return o;
}

Outcome cmd_leibniz(const ScanConfig& scan) {
  if (!(scan.s_start > 1.001)) {
    throw NumericsError(ErrorKind::invalid_config, "leibniz requires s_start > 1.001");
  }
  Outcome o;
  o.record.columns = kLeibnizColumns;
  for (const auto& row : scan_leibniz(scan, Execution::parallel)) {
    if (!row.report) {
      o.record.findings.push_back(at_s(row.s) + ": " + row.error);
      o.code = kExitNumerical;
      continue;
    }
    const DerivationReport& r = *row.report;
    auto cells = leibniz_cells(r);
    if (!all_finite(cells)) {
      o.record.findings.push_back(at_s(r.s) + ": non-finite value in row");
      o.code = kExitNumerical;
    }
    o.record.rows.push_back(std::move(cells));
    if (r.closed_tail_diverged) {
      o.record.findings.push_back(at_s(r.s) + ": closed-form tail diverged");
    }
    o.record.findings.push_back(at_s(r.s) + ": (dF_numeric - boundary_dF) / G_correction = " +
                                format_real((r.dF_numeric - r.boundary_dF) / r.G_correction));
  }
  return o;
}

Outcome cmd_trace(double s, TermFamily family, std::uint64_t j_max, const SummationConfig& cfg) {
  Outcome o;
  o.record.columns = kTraceColumns;
  const PartialSumTrace trace = trace_alternating(family, s, j_max, cfg);
  for (std::size_t k = 0; k < trace.terms.size(); ++k) o.record.rows.push_back(trace_row(trace, k));
  add_trace_findings(at_s(s) + " " + to_string(family), trace, o.record.findings);
  if (!trace.diverged) o.record.findings.push_back(at_s(s) + " " + to_string(family) + ": not diverged");
  return o;
}

Outcome cmd_corollary(Corollary which, std::uint64_t j_max, const SummationConfig& cfg) {
  Outcome o;
  o.record.columns = kCorollaryColumns;
  const CorollaryReference ref = corollary_reference(which);
  const PartialSumTrace trace = trace_alternating(TermFamily::combined, ref.s, j_max, cfg);
  for (std::size_t k = 0; k < trace.terms.size(); ++k) {
    auto cells = trace_row(trace, k);
    cells.push_back(ref.closed_form);
    cells.push_back(trace.partial_sums[k] - ref.closed_form);
    o.record.rows.push_back(std::move(cells));
  }
  const std::string label = std::string(to_string(which));
  o.record.findings.push_back(label + ": reference " + format_real(ref.closed_form) +
                              ", 1/Gamma(s+1) = " + format_real(ref.via_gamma));
  add_trace_findings(label, trace, o.record.findings);
  return o;
}

Outcome cmd_inequality(std::uint64_t s_max, const SummationConfig& cfg) {
  if (s_max < 2) throw NumericsError(ErrorKind::invalid_config, "s_max must be >= 2");
  Outcome o;
  o.record.columns = kInequalityColumns;
  for (std::uint64_t s = 2; s <= s_max; ++s) {
    const InequalityCheck c = integer_inequality_check(s, cfg);
    o.record.rows.push_back(inequality_cells(c));
    if (!c.left_holds) o.record.findings.push_back("s=" + std::to_string(s) + ": left bound fails");
    if (!c.right_holds) o.record.findings.push_back("s=" + std::to_string(s) + ": right bound fails");
  }
  return o;
}

Outcome cmd_gamma(double s, const SummationConfig& cfg) {
  Outcome o;
  o.record.columns = {"s", "gamma", "log_gamma", "method", "recip_gamma_product"};
  const GammaValue g = gamma_reference(s);
  const GammaValue r = recip_gamma_product(s - 1.0, cfg);
  o.record.rows.push_back(
      {s, g.value, log_gamma_reference(s), std::string(to_string(g.method)), r.value});
  return o;
}

Outcome cmd_digamma(double x, const SummationConfig& cfg) {
  Outcome o;
  o.record.columns = {"x", "psi_x_plus_1", "terms_used", "tail_bound"};
  const SeriesEval series = sum_rational_tail(x, cfg);
  o.record.rows.push_back({x, series.value - euler_gamma_value(),
                           static_cast<std::int64_t>(series.terms_used), series.tail_bound});
  return o;
}

Outcome cmd_term(bool want_eta, double s, std::uint64_t j, const SummationConfig& cfg) {
  Outcome o;
  const TermPair p = term_pair(s, j, cfg);
  o.record.columns = {"s", "j", "x", want_eta ? "eta" : "alpha", "recip_gamma", "near_pole"};
  o.record.rows.push_back({s, static_cast<std::int64_t>(j), p.x, want_eta ? p.eta : p.alpha,
                           p.recip_gamma, p.near_pole});
  return o;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical checks of a claimed Gamma-function identity"};
  app.require_subcommand(1);
  app.fallthrough();

  ScanConfig scan;
  std::string format = "csv";
  std::string output;
  bool json_flag = false;
  bool seedless = false;

  app.add_option("--abs-tol", scan.abs_tol, "absolute tolerance for every truncated series")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-terms", scan.max_terms, "hard cap on explicit series terms");
  app.add_option("--j-max", scan.j_max, "last j index of traced tails");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_flag("--json", json_flag, "shorthand for --format json");
  app.add_option("--output", output, "write output to this path instead of stdout");
  app.add_option("--pole-guard", scan.pole_guard, "distance below which a pole is avoided");
  app.add_flag("--seedless", seedless, "accepted for compatibility; every run is deterministic");

  auto* selftest = app.add_subcommand("selftest", "check classical Gamma identities");

  double gamma_s = 0.0;
  auto* gamma_cmd = app.add_subcommand("gamma", "Gamma(s) by quadrature and by product");
  gamma_cmd->add_option("--s", gamma_s)->required();

  double digamma_x = 0.0;
  auto* digamma_cmd = app.add_subcommand("digamma", "psi(x+1) from its series");
  digamma_cmd->add_option("--x", digamma_x)->required();

  double term_s = 0.0;
  std::uint64_t term_j = 0;
  auto* eta_cmd = app.add_subcommand("eta", "eta_s(j)");
  eta_cmd->add_option("--s", term_s)->required();
  eta_cmd->add_option("--j", term_j)->required();
  auto* alpha_cmd = app.add_subcommand("alpha", "alpha_s(j)");
  alpha_cmd->add_option("--s", term_s)->required();
  alpha_cmd->add_option("--j", term_j)->required();

  std::optional<double> s_end;
  auto add_grid = [&](CLI::App* cmd) {
    cmd->add_option("--s-start", scan.s_start)->required();
    cmd->add_option("--s-end", s_end);
    cmd->add_option("--s-step", scan.s_step);
  };
  auto* residual_cmd = app.add_subcommand("residual", "left side minus 1/Gamma(s+1) over a grid");
  add_grid(residual_cmd);
  auto* leibniz_cmd = app.add_subcommand("leibniz", "derivative of F(s) against e^s s^s");
  add_grid(leibniz_cmd);

  double trace_s = 0.0;
  std::string family_text = "eta";
  auto* trace_cmd = app.add_subcommand("trace", "partial sums of one term family");
  trace_cmd->add_option("--s", trace_s)->required();
  trace_cmd->add_option("--family", family_text)
      ->check(CLI::IsMember({"eta", "alpha", "combined"}));

  std::string which_text;
  auto* corollary_cmd = app.add_subcommand("corollary", "partial sums of a corollary series");
  corollary_cmd->add_option("--which", which_text)
      ->required()
      ->check(CLI::IsMember({"three_halves", "five_thirds"}));

  std::uint64_t s_max = 2;
  auto* inequality_cmd = app.add_subcommand("inequality", "integer-s two-sided bound");
  inequality_cmd->add_option("--s-max", s_max)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  if (json_flag) format = "json";
  scan.format = format == "json" ? OutputFormat::json : OutputFormat::csv;
  if (!output.empty()) scan.output_path = output;
  scan.s_end = s_end.value_or(scan.s_start);

  Outcome outcome;
  nlohmann::json config = config_json(scan);
  try {
    const SummationConfig cfg = scan.summation();
    cfg.validate();
    if (*selftest) {
      config["command"] = "selftest";
      outcome = cmd_selftest(cfg);
    } else if (*gamma_cmd) {
      config["command"] = "gamma";
      config["s"] = gamma_s;
      outcome = cmd_gamma(gamma_s, cfg);
    } else if (*digamma_cmd) {
      config["command"] = "digamma";
      config["x"] = digamma_x;
      outcome = cmd_digamma(digamma_x, cfg);
    } else if (*eta_cmd || *alpha_cmd) {
      config["command"] = *eta_cmd ? "eta" : "alpha";
      config["s"] = term_s;
      config["j"] = term_j;
      outcome = cmd_term(static_cast<bool>(*eta_cmd), term_s, term_j, cfg);
    } else if (*residual_cmd) {
      config["command"] = "residual";
      outcome = cmd_residual(scan);
    } else if (*leibniz_cmd) {
      config["command"] = "leibniz";
      outcome = cmd_leibniz(scan);
    } else if (*trace_cmd) {
      config["command"] = "trace";
      config["s"] = trace_s;
      config["family"] = family_text;
      outcome = cmd_trace(trace_s, *parse_term_family(family_text.c_str()), scan.j_max, cfg);
    } else if (*corollary_cmd) {
      config["command"] = "corollary";
      config["which"] = which_text;
      outcome = cmd_corollary(*parse_corollary(which_text.c_str()), scan.j_max, cfg);
    } else if (*inequality_cmd) {
      config["command"] = "inequality";
      config["s_max"] = s_max;
      outcome = cmd_inequality(s_max, cfg);
    }
  } catch (const NumericsError& e) {
    err << e.what() << '\n';
    return exit_code_for(e);
  }
  outcome.record.config = std::move(config);

  if (scan.output_path) {
    std::ofstream file(*scan.output_path, std::ios::binary);
    if (!file) {
      err << "cannot open " << *scan.output_path << '\n';
      return kExitUsage;
    }
    write_record(outcome.record, scan.format, file);
  } else {
    write_record(outcome.record, scan.format, out);
  }
  for (const auto& f : outcome.record.findings) {
    if (scan.format == OutputFormat::csv) err << "finding: " << f << '\n';
  }
  return outcome.code;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("gammacheck");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace gammacheck
