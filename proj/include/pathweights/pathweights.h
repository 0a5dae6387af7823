#ifndef PATHWEIGHTS_H
#define PATHWEIGHTS_H

/* C interface to the pathweights library. Every fallible call returns a
 * pw_status; on failure pw_last_error_message() describes the problem for
 * the calling thread. Strings returned through char** are owned by the
 * caller and released with pw_string_free. */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct pw_model pw_model;

typedef enum pw_status {
  PW_OK = 0,
  PW_INVALID_ARGUMENT,
  PW_INDEX_ERROR,
  PW_INVALID_MATRIX,
  PW_NOT_POSITIVE_DEFINITE,
  PW_NOT_ADAPTED,
  PW_INVALID_PATH,
  PW_PATH_EXPLOSION,
  PW_UNDEFINED_SHARE,
  PW_NOT_CONVERGED,
  PW_PARSE_ERROR,
  PW_IO_ERROR,
  PW_INTERNAL_ERROR
} pw_status;

typedef enum pw_format {
  PW_FORMAT_TABLE = 0,
  PW_FORMAT_JSON,
  PW_FORMAT_CSV,
  PW_FORMAT_TSV
} pw_format;

typedef enum pw_measure {
  PW_MEASURE_COVARIANCE = 0,
  PW_MEASURE_CORRELATION,
  PW_MEASURE_INFLATED_CORRELATION
} pw_measure;

typedef enum pw_matrix_kind {
  PW_MATRIX_SIGMA = 0,
  PW_MATRIX_KAPPA,
  PW_MATRIX_OMEGA,
  PW_MATRIX_R,
  PW_MATRIX_VARRHO
} pw_matrix_kind;

typedef struct pw_render_options {
  pw_format format;
  /* decimal places for table output */
  int precision;
} pw_render_options;

/* Default path enumeration cap. */
#define PW_DEFAULT_PATH_CAP ((size_t)1000000)

const char* pw_last_error_message(void);
const char* pw_status_name(pw_status status);
void pw_string_free(char* s);

/* Parses "table", "json", "csv" or "tsv". */
pw_status pw_parse_format(const char* name, pw_format* out);

pw_status pw_model_load(const char* path, pw_model** out);
pw_status pw_model_parse(const char* text, pw_model** out);
void pw_model_free(pw_model* model);
/* Writes the model file text (the form the model was built from). */
pw_status pw_model_dump(const pw_model* model, const char* name, const char* source, char** out);
pw_status pw_model_save(const pw_model* model, const char* path, const char* name,
                        const char* source);

size_t pw_model_vertex_count(const pw_model* model);
size_t pw_model_edge_count(const pw_model* model);
/* The returned pointer lives as long as the model. */
const char* pw_model_vertex(const pw_model* model, size_t index);

pw_status pw_weight(const pw_model* model, const char* const* path, size_t length,
                    pw_measure measure, double* out);
pw_status pw_phi(const pw_model* model, const char* const* path, size_t length, double* out);
/* IF_A^B; pass nb = 0 and b = NULL for the complement of A. */
pw_status pw_inflation_factor(const pw_model* model, const char* const* a, size_t na,
                              const char* const* b, size_t nb, double* out);
pw_status pw_matrix_entry(const pw_model* model, pw_matrix_kind kind, const char* u,
                          const char* v, double* out);
/* Number of simple paths between x and y. */
pw_status pw_path_count(const pw_model* model, const char* x, const char* y, size_t cap,
                        size_t* out);

/* Report renderers. */
pw_status pw_check_file(const char* path, pw_render_options options, char** out, int* valid);
pw_status pw_render_matrix(const pw_model* model, pw_matrix_kind kind,
                           pw_render_options options, char** out);
pw_status pw_render_decomposition(const pw_model* model, const char* x, const char* y,
                                  pw_measure measure, const char* const* restrict_to,
                                  size_t n_restrict, size_t cap, pw_render_options options,
                                  char** out);
pw_status pw_render_centrality(const pw_model* model, int shortest_paths, size_t cap,
                               pw_render_options options, char** out);
pw_status pw_render_rank_paths(const pw_model* model, size_t vertex_count, size_t limit,
                               size_t cap, pw_render_options options, char** out);
pw_status pw_render_edges(const pw_model* model, pw_render_options options, char** out);
pw_status pw_render_mtp2(const pw_model* model, pw_render_options options, char** out,
                         int* signable);

/* Maximum-likelihood fit of the graph in `graph_path` (a model file whose
 * edges carry no partial correlations) to the sample covariance CSV. */
pw_status pw_fit(const char* covariance_csv, const char* graph_path, double tol,
                 size_t max_iter, pw_model** out, size_t* iterations, double* discrepancy);

#ifdef __cplusplus
}
#endif

#endif
