#pragma once

#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "pathweights/error.hpp"
#include "pathweights/graph.hpp"
#include "pathweights/sym_matrix.hpp"

namespace pathweights {

/// Which diagonal rescaling Gamma = Delta Sigma Delta a weight refers to.
enum class MeasureKind {
  Covariance,           // Delta = I
  Correlation,          // Delta = diag(Sigma)^{-1/2}
  InflatedCorrelation,  // Delta = diag(K)^{1/2}
  Custom,               // caller-supplied nonzero diagonal
};

const char* to_string(MeasureKind kind) noexcept;

struct Measure {
  MeasureKind kind = MeasureKind::Covariance;
  /// Diagonal of Delta by vertex, used only for MeasureKind::Custom.
  std::unordered_map<Label, double> delta;

  static Measure covariance() { return {MeasureKind::Covariance, {}}; }
  static Measure correlation() { return {MeasureKind::Correlation, {}}; }
  static Measure inflated_correlation() { return {MeasureKind::InflatedCorrelation, {}}; }
  /// Throws InvalidArgument if any entry is zero or non-finite.
  static Measure custom(std::unordered_map<Label, double> delta);
};

struct ModelOptions {
  /// Relative tolerance on |kappa_uv| / sqrt(kappa_uu kappa_vv) for non-edges.
  double adapted_tol = 1e-8;
  double pivot_tol = kDefaultPivotTol;
};

/// How a model was specified; kept so it can be written back unchanged.
enum class ModelOrigin { Covariance, PartialCorrelations };

/// Result of checking a candidate (graph, Sigma) pair without throwing.
struct ModelDiagnostics {
  bool positive_definite = false;
  bool adapted = false;
  /// Largest |kappa_uv| / sqrt(kappa_uu kappa_vv) over non-edges.
  double max_non_edge = 0.0;
  std::vector<NonAdaptedEntry> offending;
};

ModelDiagnostics diagnose(const Graph& g, const SymMatrix& sigma,
                          const ModelOptions& options = {});

/// Gaussian concentration graph model: a graph together with a positive
/// definite covariance whose inverse is adapted to the graph. Immutable;
/// every derived matrix is computed once at construction.
class Model {
 public:
  /// Throws NotPositiveDefinite, NotAdapted, or IndexError when the labels
  /// of `sigma` differ from the vertices of `g`.
  static Model from_sigma(Graph g, const SymMatrix& sigma,
                          const ModelOptions& options = {});

  /// Unit-diagonal concentration K = I - R built from edge partial
  /// correlations, so that Sigma equals the inflated correlation matrix.
  /// Every downstream quantity reported in normalized form is unaffected by
  /// this choice of scale.
  static Model from_partial_correlations(Graph g, const std::map<Edge, double>& pcor,
                                         const ModelOptions& options = {});

  const Graph& graph() const noexcept { return graph_; }
  const std::vector<Label>& vertices() const noexcept { return graph_.vertices(); }
  const ModelOptions& options() const noexcept { return options_; }
  ModelOrigin origin() const noexcept { return origin_; }
  /// Input partial correlations (only for ModelOrigin::PartialCorrelations).
  const std::map<Edge, double>& input_partial_correlations() const noexcept {
    return input_pcor_;
  }

  const SymMatrix& sigma() const noexcept { return sigma_; }
  const SymMatrix& kappa() const noexcept { return kappa_; }
  /// Omega
  const SymMatrix& correlation_matrix() const noexcept { return omega_; }
  /// R: partial correlations off the diagonal, zero diagonal.
  const SymMatrix& partial_correlation_matrix() const noexcept { return pcor_; }
  /// I - R
  const SymMatrix& scaled_concentration() const noexcept { return i_minus_r_; }
  /// Varrho = diag(K)^{1/2} Sigma diag(K)^{1/2} = (I - R)^{-1}
  const SymMatrix& inflated_correlation_matrix() const noexcept { return varrho_; }

  double partial_correlation(const Label& u, const Label& v) const {
    return pcor_.at(u, v);
  }

  /// Sigma_{AA.A-bar} = (K_AA)^{-1}.
  SymMatrix conditional_covariance(const VertexSet& a) const;
  /// Varrho^A_{AA.A-bar} = ((I - R)_AA)^{-1}.
  SymMatrix conditional_inflated_correlation(const VertexSet& a) const;
  /// Omega_[A|A-bar]: Sigma_{AA.A-bar} scaled to unit diagonal.
  SymMatrix conditional_correlation(const VertexSet& a) const;

  /// Model of X_A | X_{A-bar} on the induced subgraph, with concentration K_AA.
  Model conditional(const VertexSet& a) const;

  /// delta_vv for the given measure.
  double scale(const Measure& measure, const Label& v) const;
  /// Gamma = Delta Sigma Delta.
  SymMatrix scaled(const Measure& measure) const;

 private:
  Model() = default;
  void derive();

  Graph graph_;
  ModelOptions options_;
  ModelOrigin origin_ = ModelOrigin::Covariance;
  std::map<Edge, double> input_pcor_;
  SymMatrix sigma_;
  SymMatrix kappa_;
  SymMatrix omega_;
  SymMatrix pcor_;
  SymMatrix i_minus_r_;
  SymMatrix varrho_;
};

}  // namespace pathweights
