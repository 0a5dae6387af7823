#include "pathweights/pathweights.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "pathweights/inflation.hpp"
#include "pathweights/report_io.hpp"

struct pw_model {
  pathweights::Model model;
};

namespace {

using namespace pathweights;

thread_local std::string last_error;

pw_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return PW_INVALID_ARGUMENT;
    case ErrorCode::IndexError: return PW_INDEX_ERROR;
    case ErrorCode::InvalidMatrix: return PW_INVALID_MATRIX;
    case ErrorCode::NotPositiveDefinite: return PW_NOT_POSITIVE_DEFINITE;
    case ErrorCode::NotAdapted: return PW_NOT_ADAPTED;
    case ErrorCode::InvalidPath: return PW_INVALID_PATH;
    case ErrorCode::PathExplosion: return PW_PATH_EXPLOSION;
    case ErrorCode::UndefinedShare: return PW_UNDEFINED_SHARE;
    case ErrorCode::NotConverged: return PW_NOT_CONVERGED;
    case ErrorCode::ParseError: return PW_PARSE_ERROR;
    case ErrorCode::IoError: return PW_IO_ERROR;
  }
  return PW_INTERNAL_ERROR;
}

template <class F>
pw_status guard(F&& body) {
  try {
    body();
    last_error.clear();
    return PW_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return PW_INTERNAL_ERROR;
  } catch (const std::exception& e) {
    last_error = e.what();
    return PW_INTERNAL_ERROR;
  } catch (...) {
    last_error = "unknown error";
    return PW_INTERNAL_ERROR;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::InvalidArgument, what);
}

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

VertexSet labels(const char* const* items, std::size_t n) {
  require(n == 0 || items != nullptr, "null label array");
  VertexSet out;
  for (std::size_t i = 0; i < n; ++i) {
    require(items[i] != nullptr, "null label");
    out.emplace_back(items[i]);
  }
  return out;
}

Measure measure_of(pw_measure m) {
  switch (m) {
    case PW_MEASURE_COVARIANCE: return Measure::covariance();
    case PW_MEASURE_CORRELATION: return Measure::correlation();
    case PW_MEASURE_INFLATED_CORRELATION: return Measure::inflated_correlation();
  }
  throw Error(ErrorCode::InvalidArgument, "unknown measure");
}

RenderOptions render_options(pw_render_options o) {
  require(o.format >= PW_FORMAT_TABLE && o.format <= PW_FORMAT_TSV, "unknown format");
  require(o.precision >= 0 && o.precision <= 17, "precision must lie in [0, 17]");
  return {static_cast<ReportFormat>(o.format), o.precision};
}

const SymMatrix& matrix_of(const Model& m, pw_matrix_kind kind) {
  switch (kind) {
    case PW_MATRIX_SIGMA: return m.sigma();
    case PW_MATRIX_KAPPA: return m.kappa();
    case PW_MATRIX_OMEGA: return m.correlation_matrix();
    case PW_MATRIX_R: return m.partial_correlation_matrix();
    case PW_MATRIX_VARRHO: return m.inflated_correlation_matrix();
  }
  throw Error(ErrorCode::InvalidArgument, "unknown matrix kind");
}

const char* matrix_name(pw_matrix_kind kind) {
  switch (kind) {
    case PW_MATRIX_SIGMA: return "sigma";
    case PW_MATRIX_KAPPA: return "kappa";
    case PW_MATRIX_OMEGA: return "omega";
    case PW_MATRIX_R: return "r";
    case PW_MATRIX_VARRHO: return "varrho";
  }
  return "?";
}

template <class F>
pw_status render_into(char** out, F&& make) {
  return guard([&] {
    require(out != nullptr, "null output");
    *out = copy_out(make());
  });
}

}  // namespace

extern "C" {

const char* pw_last_error_message(void) { return last_error.c_str(); }

const char* pw_status_name(pw_status status) {
  switch (status) {
    case PW_OK: return "ok";
    case PW_INVALID_ARGUMENT: return to_string(ErrorCode::InvalidArgument);
    case PW_INDEX_ERROR: return to_string(ErrorCode::IndexError);
    case PW_INVALID_MATRIX: return to_string(ErrorCode::InvalidMatrix);
    case PW_NOT_POSITIVE_DEFINITE: return to_string(ErrorCode::NotPositiveDefinite);
    case PW_NOT_ADAPTED: return to_string(ErrorCode::NotAdapted);
    case PW_INVALID_PATH: return to_string(ErrorCode::InvalidPath);
    case PW_PATH_EXPLOSION: return to_string(ErrorCode::PathExplosion);
    case PW_UNDEFINED_SHARE: return to_string(ErrorCode::UndefinedShare);
    case PW_NOT_CONVERGED: return to_string(ErrorCode::NotConverged);
    case PW_PARSE_ERROR: return to_string(ErrorCode::ParseError);
    case PW_IO_ERROR: return to_string(ErrorCode::IoError);
    case PW_INTERNAL_ERROR: return "internal error";
  }
  return "unknown status";
}

void pw_string_free(char* s) { std::free(s); }

pw_status pw_parse_format(const char* name, pw_format* out) {
  return guard([&] {
    require(name && out, "null argument");
    *out = static_cast<pw_format>(parse_report_format(name));
  });
}

pw_status pw_model_load(const char* path, pw_model** out) {
  return guard([&] {
    require(path && out, "null argument");
    *out = new pw_model{load_model(path)};
  });
}

pw_status pw_model_parse(const char* text, pw_model** out) {
  return guard([&] {
    require(text && out, "null argument");
    *out = new pw_model{build_model(parse_model_file(text))};
  });
}

void pw_model_free(pw_model* model) { delete model; }

pw_status pw_model_dump(const pw_model* model, const char* name, const char* source,
                        char** out) {
  return render_into(out, [&] {
    require(model != nullptr, "null model");
    return dump_model_file(to_model_file(model->model, name ? name : "", source ? source : ""));
  });
}

pw_status pw_model_save(const pw_model* model, const char* path, const char* name,
                        const char* source) {
  return guard([&] {
    require(model && path, "null argument");
    save_model(model->model, path, name ? name : "", source ? source : "");
  });
}

size_t pw_model_vertex_count(const pw_model* model) {
  return model ? model->model.graph().vertex_count() : 0;
}

size_t pw_model_edge_count(const pw_model* model) {
  return model ? model->model.graph().edges().size() : 0;
}

const char* pw_model_vertex(const pw_model* model, size_t index) {
  if (!model || index >= model->model.vertices().size()) return nullptr;
  return model->model.vertices()[index].c_str();
}

pw_status pw_weight(const pw_model* model, const char* const* path, size_t length,
                    pw_measure measure, double* out) {
  return guard([&] {
    require(model && out, "null argument");
    *out = weight(model->model, Path(labels(path, length)), measure_of(measure));
  });
}

pw_status pw_phi(const pw_model* model, const char* const* path, size_t length, double* out) {
  return guard([&] {
    require(model && out, "null argument");
    *out = phi(model->model, Path(labels(path, length)));
  });
}

pw_status pw_inflation_factor(const pw_model* model, const char* const* a, size_t na,
                              const char* const* b, size_t nb, double* out) {
  return guard([&] {
    require(model && out, "null argument");
    *out = nb == 0 && b == nullptr ? inflation_factor(model->model, labels(a, na))
                                   : inflation_factor(model->model, labels(a, na), labels(b, nb));
  });
}

pw_status pw_matrix_entry(const pw_model* model, pw_matrix_kind kind, const char* u,
                          const char* v, double* out) {
  return guard([&] {
    require(model && u && v && out, "null argument");
    *out = matrix_of(model->model, kind).at(u, v);
  });
}

pw_status pw_path_count(const pw_model* model, const char* x, const char* y, size_t cap,
                        size_t* out) {
  return guard([&] {
    require(model && x && y && out, "null argument");
    PathQuery q;
    q.cap = cap;
    *out = enumerate_paths(model->model.graph(), x, y, q).size();
  });
}

pw_status pw_check_file(const char* path, pw_render_options options, char** out, int* valid) {
  return render_into(out, [&] {
    require(path && valid, "null argument");
    const CheckResult c = check_model(read_model_file(path));
    *valid = c.ok() ? 1 : 0;
    return render(to_report(c), render_options(options));
  });
}

pw_status pw_render_matrix(const pw_model* model, pw_matrix_kind kind,
                           pw_render_options options, char** out) {
  return render_into(out, [&] {
    require(model != nullptr, "null model");
    return render(matrix_report(matrix_of(model->model, kind), matrix_name(kind)),
                  render_options(options));
  });
}

pw_status pw_render_decomposition(const pw_model* model, const char* x, const char* y,
                                  pw_measure measure, const char* const* restrict_to,
                                  size_t n_restrict, size_t cap, pw_render_options options,
                                  char** out) {
  return render_into(out, [&] {
    require(model && x && y, "null argument");
    std::optional<VertexSet> a;
    if (restrict_to) a = labels(restrict_to, n_restrict);
    return render(to_report(decompose(model->model, x, y, measure_of(measure), a, cap)),
                  render_options(options));
  });
}

pw_status pw_render_centrality(const pw_model* model, int shortest_paths, size_t cap,
                               pw_render_options options, char** out) {
  return render_into(out, [&] {
    require(model != nullptr, "null model");
    const auto mode = shortest_paths ? BetweennessMode::ShortestPaths : BetweennessMode::AllPaths;
    return render(to_report(betweenness(model->model, mode, cap)), render_options(options));
  });
}

pw_status pw_render_rank_paths(const pw_model* model, size_t vertex_count, size_t limit,
                               size_t cap, pw_render_options options, char** out) {
  return render_into(out, [&] {
    require(model != nullptr, "null model");
    const auto ranked =
        rank_paths(model->model, vertex_count, Measure::inflated_correlation(), cap);
    return render(to_report(ranked, vertex_count, limit), render_options(options));
  });
}

pw_status pw_render_edges(const pw_model* model, pw_render_options options, char** out) {
  return render_into(out, [&] {
    require(model != nullptr, "null model");
    return render(to_report(networked_edge_measures(model->model)), render_options(options));
  });
}

pw_status pw_render_mtp2(const pw_model* model, pw_render_options options, char** out,
                         int* signable) {
  return render_into(out, [&] {
    require(model && signable, "null argument");
    const auto signs = mtp2_sign_search(model->model);
    *signable = signs ? 1 : 0;
    return render(to_report(model->model, signs), render_options(options));
  });
}

pw_status pw_fit(const char* covariance_csv, const char* graph_path, double tol,
                 size_t max_iter, pw_model** out, size_t* iterations, double* discrepancy) {
  return guard([&] {
    require(covariance_csv && graph_path && out, "null argument");
    require(tol > 0.0, "tolerance must be positive");
    IpsOptions opts;
    opts.tol = tol;
    opts.max_iter = max_iter;
    const SymMatrix s = read_matrix_csv(covariance_csv);
    const Graph g = graph_of(read_model_file(graph_path));
    IpsFit fit = ips_fit(s, g, opts);
    if (iterations) *iterations = fit.iterations;
    if (discrepancy) *discrepancy = fit.max_discrepancy;
    *out = new pw_model{std::move(fit.model)};
  });
}

}  // extern "C"
