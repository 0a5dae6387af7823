// Command-line front end. Talks to the library only through the C API.

#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pathweights/pathweights.h"

namespace {

// sysexits.h values
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitNoInput = 66;
constexpr int kExitSoftware = 70;
constexpr int kExitCantCreate = 73;
constexpr int kExitCheckFailed = 1;

struct Failure {
  pw_status status;
};

int exit_code(pw_status s) {
  switch (s) {
    case PW_OK: return 0;
    case PW_INVALID_ARGUMENT:
    case PW_INDEX_ERROR:
    case PW_INVALID_PATH: return kExitUsage;
    case PW_IO_ERROR: return kExitNoInput;
    case PW_INTERNAL_ERROR: return kExitSoftware;
    default: return kExitData;
  }
}

void ok(pw_status s) {
  if (s != PW_OK) throw Failure{s};
}

class Model {
 public:
  explicit Model(const std::string& path) { ok(pw_model_load(path.c_str(), &m_)); }
  explicit Model(pw_model* m) : m_(m) {}
  Model(const Model&) = delete;
  Model& operator=(const Model&) = delete;
  ~Model() { pw_model_free(m_); }
  const pw_model* get() const { return m_; }

 private:
  pw_model* m_ = nullptr;
};

void emit(char* text) {
  std::fputs(text, stdout);
  pw_string_free(text);
}

std::vector<const char*> c_strings(const std::vector<std::string>& v) {
  std::vector<const char*> out;
  for (const auto& s : v) out.push_back(s.c_str());
  return out;
}

struct Output {
  std::string format = "table";
  int precision = 2;

  pw_render_options options() const {
    pw_render_options o{PW_FORMAT_TABLE, precision};
    ok(pw_parse_format(format.c_str(), &o.format));
    return o;
  }
};

void add_output_flags(CLI::App* cmd, Output& out) {
  cmd->add_option("--format", out.format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv", "tsv"}))
      ->capture_default_str();
  cmd->add_option("--precision", out.precision, "Decimal places in tables")
      ->check(CLI::Range(0, 17))
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Path weights in Gaussian concentration graph models"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "pathweights 1.0.0");

  Output out;
  std::string model_path;
  int result = 0;

  auto* check = app.add_subcommand("check", "Positive definiteness and adaptedness report");
  check->add_option("model", model_path, "Model file")->required();
  add_output_flags(check, out);
  check->callback([&] {
    char* text = nullptr;
    int valid = 0;
    ok(pw_check_file(model_path.c_str(), out.options(), &text, &valid));
    emit(text);
    if (!valid) result = kExitCheckFailed;
  });

  std::string kind = "varrho";
  auto* matrices = app.add_subcommand("matrices", "Derived matrices of a model");
  matrices->add_option("model", model_path, "Model file")->required();
  matrices->add_option("--kind", kind, "Matrix to print")
      ->check(CLI::IsMember({"sigma", "kappa", "omega", "r", "varrho"}))
      ->capture_default_str();
  add_output_flags(matrices, out);
  matrices->callback([&] {
    const Model m(model_path);
    const pw_matrix_kind k = kind == "sigma"   ? PW_MATRIX_SIGMA
                             : kind == "kappa" ? PW_MATRIX_KAPPA
                             : kind == "omega" ? PW_MATRIX_OMEGA
                             : kind == "r"     ? PW_MATRIX_R
                                               : PW_MATRIX_VARRHO;
    char* text = nullptr;
    ok(pw_render_matrix(m.get(), k, out.options(), &text));
    emit(text);
  });

  std::string x, y, measure = "cov";
  std::vector<std::string> restrict_to;
  std::size_t cap = PW_DEFAULT_PATH_CAP;
  auto* dec = app.add_subcommand("decompose", "Decompose the association between two vertices");
  dec->add_option("model", model_path, "Model file")->required();
  dec->add_option("x", x, "First vertex")->required();
  dec->add_option("y", y, "Second vertex")->required();
  dec->add_option("--measure", measure, "cov, cor or inf")
      ->check(CLI::IsMember({"cov", "cor", "inf"}))
      ->capture_default_str();
  dec->add_option("--restrict", restrict_to, "Vertex set A (comma separated) for the partial decomposition")
      ->delimiter(',');
  dec->add_option("--cap", cap, "Maximum number of paths")->check(CLI::PositiveNumber)->capture_default_str();
  add_output_flags(dec, out);
  dec->callback([&] {
    const Model m(model_path);
    const pw_measure mk = measure == "cov"   ? PW_MEASURE_COVARIANCE
                          : measure == "cor" ? PW_MEASURE_CORRELATION
                                             : PW_MEASURE_INFLATED_CORRELATION;
    const auto a = c_strings(restrict_to);
    char* text = nullptr;
    ok(pw_render_decomposition(m.get(), x.c_str(), y.c_str(), mk,
                               dec->count("--restrict") ? a.data() : nullptr, a.size(), cap,
                               out.options(), &text));
    emit(text);
  });

  std::string mode = "all";
  auto* cen = app.add_subcommand("centrality", "Path-weight betweenness centrality");
  cen->add_option("model", model_path, "Model file")->required();
  cen->add_option("--mode", mode, "all or shortest")
      ->check(CLI::IsMember({"all", "shortest"}))
      ->capture_default_str();
  cen->add_option("--cap", cap, "Maximum number of paths per pair")->check(CLI::PositiveNumber);
  add_output_flags(cen, out);
  cen->callback([&] {
    const Model m(model_path);
    char* text = nullptr;
    ok(pw_render_centrality(m.get(), mode == "shortest", cap, out.options(), &text));
    emit(text);
  });

  std::size_t vertices = 0, limit = 0;
  auto* rank = app.add_subcommand("rank-paths", "Rank paths by inflated correlation weight");
  rank->add_option("model", model_path, "Model file")->required();
  rank->add_option("--vertices", vertices, "Number of vertices on each path")
      ->required()
      ->check(CLI::Range(std::size_t{2}, std::size_t{1000}));
  rank->add_option("--limit", limit, "Print only the first N paths (0 = all)");
  rank->add_option("--cap", cap, "Maximum number of paths per pair")->check(CLI::PositiveNumber);
  add_output_flags(rank, out);
  rank->callback([&] {
    const Model m(model_path);
    char* text = nullptr;
    ok(pw_render_rank_paths(m.get(), vertices, limit, cap, out.options(), &text));
    emit(text);
  });

  auto* edges = app.add_subcommand("edges", "Partial correlations and networked edge measures");
  edges->add_option("model", model_path, "Model file")->required();
  add_output_flags(edges, out);
  edges->callback([&] {
    const Model m(model_path);
    char* text = nullptr;
    ok(pw_render_edges(m.get(), out.options(), &text));
    emit(text);
  });

  std::string csv, graph, output, name;
  double tol = 1e-9;
  std::size_t max_iter = 10000;
  auto* fit = app.add_subcommand("fit", "Maximum-likelihood fit by iterative proportional scaling");
  fit->add_option("covariance", csv, "Sample covariance CSV")->required();
  fit->add_option("graph", graph, "Model file giving the graph")->required();
  fit->add_option("-o,--output", output, "Write the fitted model here instead of stdout");
  fit->add_option("--name", name, "Model name stored in the metadata");
  fit->add_option("--tol", tol, "Convergence tolerance")->capture_default_str();
  fit->add_option("--max-iter", max_iter, "Iteration limit")->capture_default_str();
  fit->callback([&] {
    pw_model* raw = nullptr;
    std::size_t iterations = 0;
    double gap = 0.0;
    ok(pw_fit(csv.c_str(), graph.c_str(), tol, max_iter, &raw, &iterations, &gap));
    const Model m(raw);
    const std::string source = "ips fit of " + csv;
    if (output.empty()) {
      char* text = nullptr;
      ok(pw_model_dump(m.get(), name.c_str(), source.c_str(), &text));
      emit(text);
    } else if (pw_model_save(m.get(), output.c_str(), name.c_str(), source.c_str()) != PW_OK) {
      std::fprintf(stderr, "error: %s\n", pw_last_error_message());
      result = kExitCantCreate;
      return;
    }
    std::fprintf(stderr, "converged after %zu sweeps, max discrepancy %.3g\n", iterations, gap);
  });

  auto* mtp2 = app.add_subcommand("mtp2", "Signed-MTP2 sign assignment");
  mtp2->add_option("model", model_path, "Model file")->required();
  add_output_flags(mtp2, out);
  mtp2->callback([&] {
    const Model m(model_path);
    char* text = nullptr;
    int signable = 0;
    ok(pw_render_mtp2(m.get(), out.options(), &text, &signable));
    emit(text);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const Failure& f) {
    std::fprintf(stderr, "error (%s): %s\n", pw_status_name(f.status), pw_last_error_message());
    return exit_code(f.status);
  }
  return result;
}
