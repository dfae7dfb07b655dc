#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gammacheck/derivation.hpp"
#include "gammacheck/identity.hpp"
#include "gammacheck/summation.hpp"

namespace gammacheck {

enum class OutputFormat { csv, json };

struct ScanConfig {
  double s_start = 2.0;
  double s_end = 2.0;
  double s_step = 1.0;
  std::uint64_t j_max = 40;
  double abs_tol = 1e-10;
  std::uint64_t max_terms = 1'000'000;
  double pole_guard = 0.05;
  OutputFormat format = OutputFormat::csv;
  std::optional<std::string> output_path;

  /// Throws NumericsError(invalid_config) on a malformed grid.
  void validate() const;
  SummationConfig summation() const;
  /// s_start + i * s_step for every i with the point not past s_end.
  std::vector<double> grid() const;
};

inline constexpr std::uint64_t kMaxScanRows = 1'000'000;

template <class Report>
struct ScanRow {
  double s = 0.0;
  std::optional<Report> report;
  std::string error;  // set when report is empty
};

enum class Execution { serial, parallel };

/*
  Row kernels over the s grid. The parallel variant distributes rows over
  OpenMP threads; the serial variant is the reference it is tested against.
  Rows are returned in grid order either way and are bit-identical between
  the two, since every row is a pure function of (s, config).
*/
std::vector<ScanRow<IdentityReport>> scan_residual(const ScanConfig& cfg, Execution mode);
std::vector<ScanRow<DerivationReport>> scan_leibniz(const ScanConfig& cfg, Execution mode);

}  // namespace gammacheck
