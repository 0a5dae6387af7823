#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "pathweights/centrality.hpp"
#include "pathweights/decompose.hpp"
#include "pathweights/fit.hpp"
#include "pathweights/model_file.hpp"
#include "pathweights/weights.hpp"

namespace pathweights {

enum class ReportFormat { Table, Json, Csv, Tsv };

/// Accepts "table", "json", "csv", "tsv"; throws InvalidArgument otherwise.
ReportFormat parse_report_format(std::string_view name);

struct RenderOptions {
  ReportFormat format = ReportFormat::Table;
  /// Decimal places in human-readable tables. JSON always carries 12
  /// significant digits, CSV/TSV likewise.
  int precision = 2;
};

/// A path cell is a list of labels.
using Cell = std::variant<std::monostate, std::string, double, std::int64_t, bool,
                          std::vector<std::string>>;

/// Table-shaped report: header fields followed by rows.
struct Report {
  std::string kind;
  std::vector<std::pair<std::string, Cell>> meta;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::string> warnings;
};

std::string render(const Report& report, const RenderOptions& options = {});
/// Table format is not accepted; use json, csv or tsv.
void save_report(const Report& report, const std::filesystem::path& path, ReportFormat format);

/// Rows sorted by decreasing share, then path order.
Report to_report(const DecompositionReport& r);
/// Rows sorted by decreasing B, then vertex label.
Report to_report(const CentralityTable& t);
/// `limit` = 0 keeps every path.
Report to_report(const std::vector<RankedPath>& ranked, std::size_t vertex_count,
                 std::size_t limit = 0);
Report to_report(const std::vector<EdgeMeasures>& edges);
Report matrix_report(const SymMatrix& m, const std::string& name);
Report to_report(const Model& m, const std::optional<SignAssignment>& signs);

/// Outcome of `check`: validity of a model file without requiring it to be
/// constructible.
struct CheckResult {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::string specified_by;
  ModelDiagnostics diagnostics;
  std::optional<bool> signed_mtp2;
  std::optional<double> varrho_determinant;

  bool ok() const noexcept { return diagnostics.positive_definite && diagnostics.adapted; }
};

CheckResult check_model(const ModelFile& file, const ModelOptions& options = {});
Report to_report(const CheckResult& c);

}  // namespace pathweights
