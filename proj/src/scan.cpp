#include "gammacheck/scan.hpp"

#include <cmath>
#include <exception>

#include "gammacheck/error.hpp"

namespace gammacheck {

namespace {

template <class Report, class Kernel>
ScanRow<Report> run_row(double s, Kernel&& kernel) {
  ScanRow<Report> row;
  row.s = s;
  try {
    row.report = kernel(s);
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  return row;
}

template <class Report, class Kernel>
std::vector<ScanRow<Report>> run_serial(const std::vector<double>& grid, Kernel&& kernel) {
  std::vector<ScanRow<Report>> rows(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) rows[i] = run_row<Report>(grid[i], kernel);
  return rows;
}

template <class Report, class Kernel>
std::vector<ScanRow<Report>> run_parallel(const std::vector<double>& grid, Kernel&& kernel) {
  std::vector<ScanRow<Report>> rows(grid.size());
  const auto n = static_cast<std::int64_t>(grid.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < n; ++i) {
    rows[static_cast<std::size_t>(i)] = run_row<Report>(grid[static_cast<std::size_t>(i)], kernel);
  }
  return rows;
}

template <class Report, class Kernel>
std::vector<ScanRow<Report>> dispatch(const ScanConfig& cfg, Execution mode, Kernel&& kernel) {
  cfg.validate();
  const std::vector<double> grid = cfg.grid();
  if (mode == Execution::parallel) return run_parallel<Report>(grid, kernel);
  return run_serial<Report>(grid, kernel);
}

}  // namespace

void ScanConfig::validate() const {
  if (!(s_start > 1.0) || !std::isfinite(s_start)) {
    throw NumericsError(ErrorKind::invalid_config, "s_start must exceed 1");
  }
  if (!(s_end >= s_start) || !std::isfinite(s_end)) {
    throw NumericsError(ErrorKind::invalid_config, "s_end must be >= s_start");
  }
  if (!(s_step > 0.0) || !std::isfinite(s_step)) {
    throw NumericsError(ErrorKind::invalid_config, "s_step must be positive");
  }
  if ((s_end - s_start) / s_step > static_cast<double>(kMaxScanRows)) {
    throw NumericsError(ErrorKind::invalid_config, "grid exceeds 1e6 rows");
  }
  if (j_max < 1) throw NumericsError(ErrorKind::invalid_config, "j_max must be positive");
  summation().validate();
}

SummationConfig ScanConfig::summation() const {
  SummationConfig sc;
  sc.abs_tol = abs_tol;
  sc.rel_tol = abs_tol;
  sc.max_terms = max_terms;
  sc.pole_guard = pole_guard;
  return sc;
}

std::vector<double> ScanConfig::grid() const {
  // small slack so that an end point hit up to rounding is kept
  const double span = (s_end - s_start) / s_step;
  const auto count = static_cast<std::uint64_t>(std::floor(span + 1e-9)) + 1;
  std::vector<double> points;
  points.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    points.push_back(s_start + static_cast<double>(i) * s_step);
  }
  return points;
}

std::vector<ScanRow<IdentityReport>> scan_residual(const ScanConfig& cfg, Execution mode) {
  const SummationConfig sc = cfg.summation();
  const std::uint64_t j_max = cfg.j_max;
  return dispatch<IdentityReport>(cfg, mode,
                                  [&](double s) { return identity_residual(s, j_max, sc); });
}

std::vector<ScanRow<DerivationReport>> scan_leibniz(const ScanConfig& cfg, Execution mode) {
  const SummationConfig sc = cfg.summation();
  const std::uint64_t j_max = cfg.j_max;
  return dispatch<DerivationReport>(cfg, mode,
                                    [&](double s) { return leibniz_report(s, j_max, sc); });
}

}  // namespace gammacheck
