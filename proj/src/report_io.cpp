#include "pathweights/report_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "pathweights/inflation.hpp"

namespace pathweights {

using ojson = nlohmann::ordered_json;

ReportFormat parse_report_format(std::string_view name) {
  if (name == "table") return ReportFormat::Table;
  if (name == "json") return ReportFormat::Json;
  if (name == "csv") return ReportFormat::Csv;
  if (name == "tsv") return ReportFormat::Tsv;
  throw Error(ErrorCode::InvalidArgument, "unknown report format '" + std::string(name) + "'");
}

namespace {

std::string significant(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string fixed(double x, int precision) {
  if (!std::isfinite(x)) return significant(x);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", std::max(0, precision), x);
  std::string s = buf;
  // "-0.00" reads as a sign claim the value does not make.
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string text_of(const Cell& c, bool human, int precision) {
  return std::visit(
      [&](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) return human ? "-" : "";
        else if constexpr (std::is_same_v<T, std::string>) return v;
        else if constexpr (std::is_same_v<T, double>) return human ? fixed(v, precision) : significant(v);
        else if constexpr (std::is_same_v<T, std::int64_t>) return std::to_string(v);
        else if constexpr (std::is_same_v<T, bool>) return human ? (v ? "yes" : "no") : (v ? "true" : "false");
        else return join(v, " - ");
      },
      c);
}

ojson json_of(const Cell& c) {
  return std::visit(
      [](const auto& v) -> ojson {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) return nullptr;
        else if constexpr (std::is_same_v<T, double>) {
          if (!std::isfinite(v)) return nullptr;
          return std::strtod(significant(v).c_str(), nullptr);
        } else return v;
      },
      c);
}

bool numeric(const Cell& c) {
  return std::holds_alternative<double>(c) || std::holds_alternative<std::int64_t>(c);
}

std::string render_table(const Report& r, int precision) {
  std::ostringstream os;
  for (const auto& [key, value] : r.meta) os << key << ": " << text_of(value, true, precision) << "\n";
  for (const auto& w : r.warnings) os << "warning: " << w << "\n";
  if (!r.meta.empty() || !r.warnings.empty()) os << "\n";
  if (r.columns.empty()) return os.str();

  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> width(r.columns.size());
  std::vector<bool> right(r.columns.size(), false);
  for (std::size_t j = 0; j < r.columns.size(); ++j) width[j] = r.columns[j].size();
  for (const auto& row : r.rows) {
    auto& out = cells.emplace_back();
    for (std::size_t j = 0; j < row.size(); ++j) {
      out.push_back(text_of(row[j], true, precision));
      width[j] = std::max(width[j], out.back().size());
      if (numeric(row[j])) right[j] = true;
    }
  }
  auto emit = [&](const std::vector<std::string>& row) {
    std::string line;
    for (std::size_t j = 0; j < row.size(); ++j) {
      const std::string pad(width[j] - row[j].size(), ' ');
      if (j) line += "  ";
      line += right[j] ? pad + row[j] : row[j] + pad;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << "\n";
  };
  emit(r.columns);
  std::vector<std::string> rule;
  for (auto w : width) rule.emplace_back(w, '-');
  emit(rule);
  for (const auto& row : cells) emit(row);
  return os.str();
}

std::string quote_csv(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render_delimited(const Report& r, char sep) {
  auto cell = [&](const std::string& s) {
    if (sep == ',') return quote_csv(s);
    std::string out = s;
    std::replace(out.begin(), out.end(), '\t', ' ');
    return out;
  };
  std::ostringstream os;
  for (std::size_t j = 0; j < r.columns.size(); ++j) os << (j ? std::string(1, sep) : "") << cell(r.columns[j]);
  os << "\n";
  for (const auto& row : r.rows) {
    for (std::size_t j = 0; j < row.size(); ++j)
      os << (j ? std::string(1, sep) : "") << cell(text_of(row[j], false, 0));
    os << "\n";
  }
  return os.str();
}

std::string render_json(const Report& r) {
  ojson doc;
  doc["report"] = r.kind;
  ojson meta = ojson::object();
  for (const auto& [key, value] : r.meta) meta[key] = json_of(value);
  doc["meta"] = std::move(meta);
  doc["warnings"] = r.warnings;
  ojson rows = ojson::array();
  for (const auto& row : r.rows) {
    ojson obj = ojson::object();
    for (std::size_t j = 0; j < row.size(); ++j) obj[r.columns[j]] = json_of(row[j]);
    rows.push_back(std::move(obj));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

Cell path_cell(const Path& p) { return p.vertices(); }

Cell count(std::size_t n) { return static_cast<std::int64_t>(n); }

}  // namespace

std::string render(const Report& report, const RenderOptions& options) {
  switch (options.format) {
    case ReportFormat::Table: return render_table(report, options.precision);
    case ReportFormat::Json: return render_json(report);
    case ReportFormat::Csv: return render_delimited(report, ',');
    case ReportFormat::Tsv: return render_delimited(report, '\t');
  }
  return {};
}

void save_report(const Report& report, const std::filesystem::path& path, ReportFormat format) {
  if (format == ReportFormat::Table)
    throw Error(ErrorCode::InvalidArgument, "reports are saved as json, csv or tsv");
  write_text_file(path, render(report, {format, 2}));
}

Report to_report(const DecompositionReport& r) {
  Report out;
  out.kind = "decomposition";
  out.meta = {{"x", r.x},
              {"y", r.y},
              {"measure", std::string(to_string(r.measure))},
              {"restrict", r.restrict_to ? Cell(*r.restrict_to) : Cell()},
              {"paths", count(r.entries.size())},
              {"target", r.target},
              {"total_weight", r.total_weight()},
              {"residual", r.residual},
              {"signed_mtp2", r.signed_mtp2}};
  if (r.signed_mtp2)
    out.warnings.push_back("model is signed-MTP2: all weights share one sign, so shares are signed proportions");
  out.columns = {"path", "vertices", "weight", "share"};
  std::vector<const DecompositionEntry*> order;
  for (const auto& e : r.entries) order.push_back(&e);
  std::stable_sort(order.begin(), order.end(),
                   [](const auto* a, const auto* b) { return a->share > b->share; });
  for (const auto* e : order)
    out.rows.push_back({path_cell(e->path), count(e->path.size()), e->weight, e->share});
  return out;
}

Report to_report(const CentralityTable& t) {
  Report out;
  out.kind = "centrality";
  out.meta = {{"mode", std::string(to_string(t.mode))},
              {"skipped_pairs", count(t.skipped_pairs.size())},
              {"degenerate", t.degenerate}};
  if (t.degenerate) out.warnings.push_back("B is constant; every normalized value is 0");
  out.columns = {"vertex", "B", "B_normalized", "degree"};
  auto records = t.records;
  std::stable_sort(records.begin(), records.end(), [](const auto& a, const auto& b) {
    if (a.betweenness != b.betweenness) return a.betweenness > b.betweenness;
    return a.vertex < b.vertex;
  });
  for (const auto& rec : records)
    out.rows.push_back({rec.vertex, rec.betweenness, rec.normalized, count(rec.degree)});
  return out;
}

Report to_report(const std::vector<RankedPath>& ranked, std::size_t vertex_count,
                 std::size_t limit) {
  Report out;
  out.kind = "rank-paths";
  out.meta = {{"vertices", count(vertex_count)},
              {"measure", std::string(to_string(MeasureKind::InflatedCorrelation))},
              {"paths", count(ranked.size())}};
  out.columns = {"rank", "path", "weight"};
  const std::size_t n = limit ? std::min(limit, ranked.size()) : ranked.size();
  for (std::size_t i = 0; i < n; ++i)
    out.rows.push_back({count(i + 1), path_cell(ranked[i].path), ranked[i].weight});
  return out;
}

Report to_report(const std::vector<EdgeMeasures>& edges) {
  Report out;
  out.kind = "edges";
  out.meta = {{"edges", count(edges.size())}};
  out.columns = {"u", "v", "pc", "inflation", "npc", "nipc", "partial_covariance",
                 "networked_partial_covariance"};
  for (const auto& e : edges)
    out.rows.push_back({e.edge.u, e.edge.v, e.partial_correlation, e.inflation,
                        e.networked_partial_correlation,
                        e.networked_inflated_partial_correlation, e.partial_covariance,
                        e.networked_partial_covariance});
  return out;
}

Report matrix_report(const SymMatrix& m, const std::string& name) {
  Report out;
  out.kind = "matrix";
  out.meta = {{"matrix", name}, {"size", count(m.size())}};
  out.columns.push_back("");
  for (const auto& l : m.labels()) out.columns.push_back(l);
  for (std::size_t i = 0; i < m.size(); ++i) {
    std::vector<Cell> row{m.labels()[i]};
    for (std::size_t j = 0; j < m.size(); ++j) row.emplace_back(m(i, j));
    out.rows.push_back(std::move(row));
  }
  return out;
}

Report to_report(const Model& m, const std::optional<SignAssignment>& signs) {
  Report out;
  out.kind = "mtp2";
  out.meta = {{"signable", signs.has_value()}};
  if (!signs) {
    out.warnings.push_back("not signable: some cycle carries an odd number of negative partial correlations");
    return out;
  }
  std::size_t flipped = 0;
  for (const auto& [v, d] : signs->delta) flipped += d < 0;
  out.meta.emplace_back("flipped", count(flipped));
  out.columns = {"vertex", "delta"};
  for (const auto& v : m.vertices())
    out.rows.push_back({v, static_cast<std::int64_t>(signs->delta.at(v))});
  return out;
}

CheckResult check_model(const ModelFile& file, const ModelOptions& options) {
  CheckResult c;
  c.vertices = file.vertices.size();
  c.edges = file.edges.size();
  const Graph g = graph_of(file);
  std::optional<Model> model;
  if (file.sigma) {
    c.specified_by = "sigma";
    c.diagnostics = diagnose(g, *file.sigma, options);
    if (c.ok()) model = Model::from_sigma(g, *file.sigma, options);
  } else {
    c.specified_by = "partial_correlations";
    try {
      model = build_model(file, options);
      c.diagnostics = diagnose(g, model->sigma(), options);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotPositiveDefinite) throw;
      c.diagnostics.positive_definite = false;
    }
  }
  if (model) {
    c.signed_mtp2 = mtp2_sign_search(*model).has_value();
    c.varrho_determinant =
        global_collinearity(*model, CollinearityScale::PartialVariance);
  }
  return c;
}

Report to_report(const CheckResult& c) {
  Report out;
  out.kind = "check";
  auto opt_bool = [](const std::optional<bool>& b) { return b ? Cell(*b) : Cell(); };
  auto opt_real = [](const std::optional<double>& d) { return d ? Cell(*d) : Cell(); };
  out.meta = {{"status", std::string(c.ok() ? "ok" : "invalid")},
              {"vertices", count(c.vertices)},
              {"edges", count(c.edges)},
              {"specified_by", c.specified_by},
              {"positive_definite", c.diagnostics.positive_definite},
              {"adapted", c.diagnostics.positive_definite ? Cell(c.diagnostics.adapted) : Cell()},
              {"max_non_edge_pcor", c.diagnostics.positive_definite ? Cell(c.diagnostics.max_non_edge) : Cell()},
              {"signed_mtp2", opt_bool(c.signed_mtp2)},
              {"varrho_determinant", opt_real(c.varrho_determinant)}};
  if (!c.diagnostics.positive_definite) out.warnings.push_back("covariance is not positive definite");
  out.columns = {"u", "v", "magnitude"};
  for (const auto& e : c.diagnostics.offending) out.rows.push_back({e.u, e.v, e.magnitude});
  return out;
}

}  // namespace pathweights
