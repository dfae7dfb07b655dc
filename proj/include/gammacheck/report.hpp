#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "gammacheck/derivation.hpp"
#include "gammacheck/identity.hpp"
#include "gammacheck/scan.hpp"

namespace gammacheck {

inline constexpr const char* kToolVersion = "gammacheck 1.0.0";

/// An empty cell renders as an empty CSV field and a JSON null.
using Cell = std::variant<std::monostate, double, std::int64_t, bool, std::string>;

struct RunRecord {
  std::string tool_version = kToolVersion;
  nlohmann::json config = nlohmann::json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::string> findings;
};

/// Shortest decimal string that parses back to the same double.
std::string format_real(double value);

void write_csv(const RunRecord& record, std::ostream& out);
void write_json(const RunRecord& record, std::ostream& out);
void write_record(const RunRecord& record, OutputFormat format, std::ostream& out);
std::string render(const RunRecord& record, OutputFormat format);

nlohmann::json config_json(const ScanConfig& cfg);

// Column lists per command. The CSV header and the JSON row keys both come
// from these.
extern const std::vector<std::string> kResidualColumns;
extern const std::vector<std::string> kLeibnizColumns;
extern const std::vector<std::string> kTraceColumns;
extern const std::vector<std::string> kCorollaryColumns;
extern const std::vector<std::string> kInequalityColumns;

std::vector<Cell> residual_cells(const IdentityReport& r);
std::vector<Cell> leibniz_cells(const DerivationReport& r);
std::vector<Cell> inequality_cells(const InequalityCheck& r);

}  // namespace gammacheck
