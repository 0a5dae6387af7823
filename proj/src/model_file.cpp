#include "pathweights/model_file.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace pathweights {

using nlohmann::json;

namespace {

constexpr const char* kFormatTag = "pathweights-model";
constexpr int kFormatVersion = 1;

std::string line_of(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

class FieldReader {
 public:
  explicit FieldReader(std::string origin) : origin_(std::move(origin)) {}

  [[noreturn]] void fail(const std::string& field, const std::string& message) const {
    throw ParseError(origin_ + ": field '" + field + "'", message);
  }

  const json& require(const json& obj, const char* key, const std::string& field) const {
    if (!obj.is_object()) fail(field, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) fail(field + "." + key, "missing");
    return *it;
  }

  std::string string(const json& j, const std::string& field) const {
    if (!j.is_string()) fail(field, "expected a string");
    return j.get<std::string>();
  }

  double number(const json& j, const std::string& field) const {
    if (!j.is_number()) fail(field, "expected a number");
    return j.get<double>();
  }

  const json& array(const json& j, const std::string& field) const {
    if (!j.is_array()) fail(field, "expected an array");
    return j;
  }

 private:
  std::string origin_;
};

std::vector<Label> label_list(const FieldReader& r, const json& j, const std::string& field) {
  std::vector<Label> out;
  const auto& arr = r.array(j, field);
  for (std::size_t i = 0; i < arr.size(); ++i)
    out.push_back(r.string(arr[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_cells(const std::string& line, char sep) {
  std::vector<std::string> cells;
  std::string cell;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cell += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cell += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == sep) {
      cells.push_back(trim(cell));
      cell.clear();
    } else {
      cell += c;
    }
  }
  cells.push_back(trim(cell));
  return cells;
}

}  // namespace

ModelFile parse_model_file(const std::string& text, const std::string& origin) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(origin + ": " + line_of(text, e.byte == 0 ? 0 : e.byte - 1),
                     "malformed JSON");
  }
  const FieldReader r(origin);
  if (!doc.is_object()) r.fail("<root>", "expected an object");

  if (auto it = doc.find("format"); it != doc.end() && r.string(*it, "format") != kFormatTag)
    r.fail("format", "expected \"" + std::string(kFormatTag) + "\"");
  if (auto it = doc.find("version"); it != doc.end()) {
    if (!it->is_number_integer() || it->get<int>() != kFormatVersion)
      r.fail("version", "unsupported version");
  }

  ModelFile out;
  if (auto it = doc.find("metadata"); it != doc.end()) {
    if (!it->is_object()) r.fail("metadata", "expected an object");
    if (auto n = it->find("name"); n != it->end()) out.name = r.string(*n, "metadata.name");
    if (auto s = it->find("source"); s != it->end()) out.source = r.string(*s, "metadata.source");
  }

  out.vertices = label_list(r, r.require(doc, "vertices", "<root>"), "vertices");
  std::map<Label, std::size_t> known;
  for (std::size_t i = 0; i < out.vertices.size(); ++i)
    if (!known.emplace(out.vertices[i], i).second)
      r.fail("vertices[" + std::to_string(i) + "]", "duplicate vertex '" + out.vertices[i] + "'");

  if (auto it = doc.find("edges"); it != doc.end()) {
    const auto& arr = r.array(*it, "edges");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string field = "edges[" + std::to_string(i) + "]";
      ModelFile::EdgeSpec e;
      e.u = r.string(r.require(arr[i], "u", field), field + ".u");
      e.v = r.string(r.require(arr[i], "v", field), field + ".v");
      for (const auto* end : {&e.u, &e.v})
        if (!known.contains(*end)) r.fail(field, "unknown vertex '" + *end + "'");
      if (e.u == e.v) r.fail(field, "self-loop on '" + e.u + "'");
      if (auto p = arr[i].find("pcor"); p != arr[i].end() && !p->is_null())
        e.pcor = r.number(*p, field + ".pcor");
      out.edges.push_back(std::move(e));
    }
  }

  if (auto it = doc.find("sigma"); it != doc.end() && !it->is_null()) {
    auto labels = label_list(r, r.require(*it, "labels", "sigma"), "sigma.labels");
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (!known.contains(labels[i]))
        r.fail("sigma.labels[" + std::to_string(i) + "]", "unknown vertex '" + labels[i] + "'");
    if (labels.size() != out.vertices.size())
      r.fail("sigma.labels", "must list every vertex exactly once");
    const auto& rows = r.array(r.require(*it, "rows", "sigma"), "sigma.rows");
    const auto n = static_cast<Eigen::Index>(labels.size());
    if (rows.size() != labels.size()) r.fail("sigma.rows", "expected one row per label");
    Eigen::MatrixXd values(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      const std::string rf = "sigma.rows[" + std::to_string(i) + "]";
      const auto& row = r.array(rows[static_cast<std::size_t>(i)], rf);
      if (row.size() != labels.size()) r.fail(rf, "expected " + std::to_string(n) + " entries");
      for (Eigen::Index j = 0; j < n; ++j)
        values(i, j) = r.number(row[static_cast<std::size_t>(j)], rf + "[" + std::to_string(j) + "]");
    }
    try {
      out.sigma = SymMatrix(std::move(labels), std::move(values));
    } catch (const Error& e) {
      r.fail("sigma", e.what());
    }
  }
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw Error(ErrorCode::IoError, "failed writing '" + path.string() + "'");
}

ModelFile read_model_file(const std::filesystem::path& path) {
  return parse_model_file(read_text_file(path), path.string());
}

std::string dump_model_file(const ModelFile& file) {
  json doc;
  doc["format"] = kFormatTag;
  doc["version"] = kFormatVersion;
  doc["metadata"] = {{"name", file.name}, {"source", file.source}};
  doc["vertices"] = file.vertices;
  json edges = json::array();
  for (const auto& e : file.edges) {
    json je = {{"u", e.u}, {"v", e.v}};
    if (e.pcor) je["pcor"] = *e.pcor;
    edges.push_back(std::move(je));
  }
  doc["edges"] = std::move(edges);
  if (file.sigma) {
    json rows = json::array();
    const auto& m = file.sigma->values();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
      rows.push_back(std::move(row));
    }
    doc["sigma"] = {{"labels", file.sigma->labels()}, {"rows", std::move(rows)}};
  }
  return doc.dump(2) + "\n";
}

Graph graph_of(const ModelFile& file) {
  std::vector<Edge> edges;
  for (const auto& e : file.edges) edges.emplace_back(e.u, e.v);
  return Graph(file.vertices, edges);
}

Model build_model(const ModelFile& file, const ModelOptions& options) {
  const bool all_pcor = std::all_of(file.edges.begin(), file.edges.end(),
                                    [](const auto& e) { return e.pcor.has_value(); });
  const bool any_pcor = std::any_of(file.edges.begin(), file.edges.end(),
                                    [](const auto& e) { return e.pcor.has_value(); });
  const bool has_pcor = all_pcor && (any_pcor || !file.sigma);
  if (has_pcor == file.sigma.has_value())
    throw ParseError("model", file.sigma ? "give either edge partial correlations or sigma, not both"
                                         : "every edge needs a partial correlation when sigma is absent");
  Graph g = graph_of(file);
  if (file.sigma) return Model::from_sigma(std::move(g), *file.sigma, options);
  std::map<Edge, double> pcor;
  for (const auto& e : file.edges) pcor[Edge(e.u, e.v)] = *e.pcor;
  return Model::from_partial_correlations(std::move(g), pcor, options);
}

Model load_model(const std::filesystem::path& path, const ModelOptions& options) {
  return build_model(read_model_file(path), options);
}

ModelFile to_model_file(const Model& m, std::string name, std::string source) {
  ModelFile out;
  out.name = std::move(name);
  out.source = std::move(source);
  out.vertices = m.vertices();
  const bool from_pcor = m.origin() == ModelOrigin::PartialCorrelations;
  for (const auto& e : m.graph().edges()) {
    ModelFile::EdgeSpec spec{e.u, e.v, std::nullopt};
    if (from_pcor) spec.pcor = m.input_partial_correlations().at(e);
    out.edges.push_back(std::move(spec));
  }
  if (!from_pcor) out.sigma = m.sigma();
  return out;
}

void save_model(const Model& m, const std::filesystem::path& path, std::string name,
                std::string source) {
  write_text_file(path, dump_model_file(to_model_file(m, std::move(name), std::move(source))));
}

SymMatrix parse_matrix_csv(const std::string& text, const std::string& origin) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> line_numbers;
  std::istringstream in(text);
  std::string line;
  for (std::size_t n = 1; std::getline(in, line); ++n) {
    if (trim(line).empty()) continue;
    rows.push_back(split_cells(line, ','));
    line_numbers.push_back(n);
  }
  if (rows.empty()) throw ParseError(origin, "empty matrix file");
  const std::vector<std::string> header(rows[0].begin() + 1, rows[0].end());
  const auto n = header.size();
  if (rows.size() != n + 1)
    throw ParseError(origin, "expected " + std::to_string(n) + " data rows, found " +
                                 std::to_string(rows.size() - 1));
  Eigen::MatrixXd values(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = rows[i + 1];
    const std::string where = origin + ": line " + std::to_string(line_numbers[i + 1]);
    if (row.size() != n + 1)
      throw ParseError(where, "expected " + std::to_string(n + 1) + " cells");
    if (row[0] != header[i])
      throw ParseError(where, "row label '" + row[0] + "' does not match column '" + header[i] + "'");
    for (std::size_t j = 0; j < n; ++j) {
      const std::string& cell = row[j + 1];
      double value = 0.0;
      auto [end, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
      if (ec != std::errc() || end != cell.data() + cell.size())
        throw ParseError(where + ", column " + std::to_string(j + 2), "not a number: '" + cell + "'");
      values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = value;
    }
  }
  try {
    return SymMatrix(header, std::move(values));
  } catch (const Error& e) {
    throw ParseError(origin, e.what());
  }
}

SymMatrix read_matrix_csv(const std::filesystem::path& path) {
  return parse_matrix_csv(read_text_file(path), path.string());
}

}  // namespace pathweights
