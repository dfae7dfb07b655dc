#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gammacheck/report.hpp"
#include "gammacheck/summation.hpp"

namespace gammacheck {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNumerical = 2;

struct SelftestCheck {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string error;  // non-empty when the check could not be evaluated
};

/// Classical-identity checks on the special functions under cfg.
std::vector<SelftestCheck> run_selftest(const SummationConfig& cfg);

/*
  Entry point of the command-line tool. Subcommands: selftest, gamma,
  digamma, eta, alpha, residual, trace, corollary, inequality, leibniz.
  Output goes to --output when given, otherwise to `out`; diagnostics go to
  `err`. Returns 0, 1 (usage/config) or 2 (numerical failure).
*/
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gammacheck
