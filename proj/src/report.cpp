#include "gammacheck/report.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <sstream>

namespace gammacheck {

namespace {

std::string csv_field(const Cell& cell) {
  struct Visitor {
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(double v) const { return format_real(v); }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
    std::string operator()(const std::string& v) const {
      if (v.find_first_of(",\"\n") == std::string::npos) return v;
      std::string quoted = "\"";
      for (char c : v) {
        if (c == '"') quoted += '"';
        quoted += c;
      }
      return quoted + '"';
    }
  };
  return std::visit(Visitor{}, cell);
}

nlohmann::json json_value(const Cell& cell) {
  struct Visitor {
    nlohmann::json operator()(std::monostate) const { return nullptr; }
    nlohmann::json operator()(double v) const {
      if (std::isfinite(v)) return v;
      return format_real(v);  // JSON has no literal for nan/inf
    }
    nlohmann::json operator()(std::int64_t v) const { return v; }
    nlohmann::json operator()(bool v) const { return v; }
    nlohmann::json operator()(const std::string& v) const { return v; }
  };
  return std::visit(Visitor{}, cell);
}

Cell optional_cell(const std::optional<double>& v) {
  if (v) return *v;
  return std::monostate{};
}

}  // namespace

const std::vector<std::string> kResidualColumns = {
    "s", "gate", "finite_block", "tail_partial", "tail_diverged",
    "lhs", "rhs", "residual", "j_max", "terms_capped"};

const std::vector<std::string> kLeibnizColumns = {
    "s", "F_quad", "F_closed", "closed_minus_quad",
    "dF_numeric", "boundary_dF", "G_correction", "leibniz_residual"};

const std::vector<std::string> kTraceColumns = {"j", "term", "partial_sum", "ratio_flag"};

const std::vector<std::string> kCorollaryColumns = {"j", "term", "partial_sum", "ratio_flag",
                                                    "reference", "gap"};

const std::vector<std::string> kInequalityColumns = {"s", "left_expr", "middle", "right_expr",
                                                     "left_holds", "right_holds"};

std::string format_real(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

void write_csv(const RunRecord& record, std::ostream& out) {
  for (std::size_t i = 0; i < record.columns.size(); ++i) {
    if (i) out << ',';
    out << record.columns[i];
  }
  out << '\n';
  for (const auto& row : record.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << csv_field(row[i]);
    }
    out << '\n';
  }
}

void write_json(const RunRecord& record, std::ostream& out) {
  nlohmann::json doc;
  doc["version"] = record.tool_version;
  doc["config"] = record.config;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : record.rows) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t i = 0; i < row.size() && i < record.columns.size(); ++i) {
      obj[record.columns[i]] = json_value(row[i]);
    }
    rows.push_back(std::move(obj));
  }
  doc["rows"] = std::move(rows);
  doc["findings"] = record.findings;
  out << doc.dump(2) << '\n';
}

void write_record(const RunRecord& record, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::json) {
    write_json(record, out);
  } else {
    write_csv(record, out);
  }
}

std::string render(const RunRecord& record, OutputFormat format) {
  std::ostringstream os;
  write_record(record, format, os);
  return os.str();
}

nlohmann::json config_json(const ScanConfig& cfg) {
  nlohmann::json c;
  c["s_start"] = cfg.s_start;
  c["s_end"] = cfg.s_end;
  c["s_step"] = cfg.s_step;
  c["j_max"] = cfg.j_max;
  c["abs_tol"] = cfg.abs_tol;
  c["max_terms"] = cfg.max_terms;
  c["pole_guard"] = cfg.pole_guard;
  c["format"] = cfg.format == OutputFormat::json ? "json" : "csv";
  c["output_path"] = cfg.output_path ? nlohmann::json(*cfg.output_path) : nlohmann::json(nullptr);
  return c;
}

std::vector<Cell> residual_cells(const IdentityReport& r) {
  return {r.s,
          r.gate,
          r.finite_block,
          optional_cell(r.tail_partial),
          r.tail_diverged,
          r.lhs,
          r.rhs,
          r.residual,
          static_cast<std::int64_t>(r.j_max),
          r.terms_capped()};
}

std::vector<Cell> leibniz_cells(const DerivationReport& r) {
  return {r.s,          r.F_quad,   r.F_closed,     r.closed_minus_quad,
          r.dF_numeric, r.boundary_dF, r.G_correction, r.leibniz_residual};
}

std::vector<Cell> inequality_cells(const InequalityCheck& r) {
  return {static_cast<std::int64_t>(r.s), r.left_expr, r.middle, r.right_expr, r.left_holds,
          r.right_holds};
}

}  // namespace gammacheck
