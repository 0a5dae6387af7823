#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "pathweights/model.hpp"

namespace pathweights {

/// On-disk description of a model (JSON). A model is built either from a
/// partial correlation on every edge or from a full covariance matrix;
/// exactly one of the two must be present.
///
///   {
///     "format": "pathweights-model", "version": 1,
///     "metadata": {"name": "...", "source": "..."},
///     "vertices": ["a", "b", ...],
///     "edges": [{"u": "a", "v": "b", "pcor": 0.31}, ...],
///     "sigma": {"labels": [...], "rows": [[...], ...]}
///   }
struct ModelFile {
  struct EdgeSpec {
    Label u;
    Label v;
    std::optional<double> pcor;
  };

  std::string name;
  std::string source;
  std::vector<Label> vertices;
  std::vector<EdgeSpec> edges;
  std::optional<SymMatrix> sigma;
};

/// Throws ParseError with the offending line or field.
ModelFile parse_model_file(const std::string& text, const std::string& origin = "<input>");
ModelFile read_model_file(const std::filesystem::path& path);
std::string dump_model_file(const ModelFile& file);

Graph graph_of(const ModelFile& file);
Model build_model(const ModelFile& file, const ModelOptions& options = {});
Model load_model(const std::filesystem::path& path, const ModelOptions& options = {});

/// Describes `m` in the form it was built from, so that loading the result
/// reproduces the stored fields exactly.
ModelFile to_model_file(const Model& m, std::string name = {}, std::string source = {});
void save_model(const Model& m, const std::filesystem::path& path, std::string name = {},
                std::string source = {});

/// Labelled square matrix: the first row and column carry labels. Checked
/// for symmetry within 1e-12 and then symmetrized.
SymMatrix parse_matrix_csv(const std::string& text, const std::string& origin = "<input>");
SymMatrix read_matrix_csv(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace pathweights
