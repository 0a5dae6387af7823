#include "pathweights/model.hpp"

#include <cmath>
#include <sstream>

namespace pathweights {

const char* to_string(MeasureKind kind) noexcept {
  switch (kind) {
    case MeasureKind::Covariance: return "covariance";
    case MeasureKind::Correlation: return "correlation";
    case MeasureKind::InflatedCorrelation: return "inflated_correlation";
    case MeasureKind::Custom: return "custom";
  }
  return "unknown";
}

Measure Measure::custom(std::unordered_map<Label, double> delta) {
  for (const auto& [v, d] : delta)
    if (!std::isfinite(d) || d == 0.0)
      throw Error(ErrorCode::InvalidArgument,
                  "scaling entry for '" + v + "' must be finite and nonzero");
  return {MeasureKind::Custom, std::move(delta)};
}

namespace {

// Sigma re-ordered to the graph's vertex order.
Eigen::MatrixXd aligned(const Graph& g, const SymMatrix& sigma) {
  if (sigma.size() != g.vertex_count()) {
    std::ostringstream os;
    os << "covariance has " << sigma.size() << " labels but graph has "
       << g.vertex_count() << " vertices";
    throw Error(ErrorCode::IndexError, os.str());
  }
  std::vector<std::size_t> idx;
  idx.reserve(g.vertex_count());
  for (const auto& v : g.vertices()) idx.push_back(sigma.index_of(v));
  return linalg::principal(sigma.values(), idx);
}

std::vector<NonAdaptedEntry> non_edges_above(const Graph& g, const Eigen::MatrixXd& k,
                                             double tol, double* max_seen) {
  std::vector<NonAdaptedEntry> out;
  const auto& vs = g.vertices();
  double worst = 0.0;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (g.adjacent(i, j)) continue;
      const auto a = static_cast<Eigen::Index>(i);
      const auto b = static_cast<Eigen::Index>(j);
      const double mag = std::abs(k(a, b)) / std::sqrt(k(a, a) * k(b, b));
      worst = std::max(worst, mag);
      if (mag > tol) out.push_back({vs[i], vs[j], mag});
    }
  if (max_seen) *max_seen = worst;
  return out;
}

Eigen::MatrixXd scale_both(const Eigen::MatrixXd& m, const Eigen::VectorXd& d) {
  return d.asDiagonal() * m * d.asDiagonal();
}

}  // namespace

ModelDiagnostics diagnose(const Graph& g, const SymMatrix& sigma,
                          const ModelOptions& options) {
  ModelDiagnostics out;
  const Eigen::MatrixXd s = aligned(g, sigma);
  out.positive_definite = linalg::is_pd(s, options.pivot_tol);
  if (!out.positive_definite) return out;
  const Eigen::MatrixXd k = linalg::inverse_pd(s, options.pivot_tol);
  out.offending = non_edges_above(g, k, options.adapted_tol, &out.max_non_edge);
  out.adapted = out.offending.empty();
  return out;
}

Model Model::from_sigma(Graph g, const SymMatrix& sigma, const ModelOptions& options) {
  Eigen::MatrixXd s = aligned(g, sigma);
  if (!linalg::is_pd(s, options.pivot_tol))
    throw Error(ErrorCode::NotPositiveDefinite, "covariance matrix is not positive definite");
  Eigen::MatrixXd k = linalg::inverse_pd(s, options.pivot_tol);
  auto offending = non_edges_above(g, k, options.adapted_tol, nullptr);
  if (!offending.empty()) throw NotAdaptedError(std::move(offending), options.adapted_tol);

  Model m;
  m.options_ = options;
  m.origin_ = ModelOrigin::Covariance;
  m.sigma_ = SymMatrix(g.vertices(), std::move(s));
  m.kappa_ = SymMatrix(g.vertices(), std::move(k));
  m.graph_ = std::move(g);
  m.derive();
  return m;
}

Model Model::from_partial_correlations(Graph g, const std::map<Edge, double>& pcor,
                                       const ModelOptions& options) {
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  Eigen::MatrixXd k = Eigen::MatrixXd::Identity(n, n);
  for (const auto& [e, value] : pcor) {
    if (!g.has_edge(e.u, e.v))
      throw Error(ErrorCode::InvalidArgument,
                  "partial correlation given for non-edge {" + e.u + "," + e.v + "}");
    if (!(std::abs(value) < 1.0))
      throw Error(ErrorCode::InvalidArgument,
                  "partial correlation for {" + e.u + "," + e.v + "} must lie in (-1, 1)");
    const auto a = static_cast<Eigen::Index>(g.index_of(e.u));
    const auto b = static_cast<Eigen::Index>(g.index_of(e.v));
    k(a, b) = k(b, a) = -value;
  }
  for (const auto& e : g.edges())
    if (!pcor.contains(e))
      throw Error(ErrorCode::InvalidArgument,
                  "edge {" + e.u + "," + e.v + "} has no partial correlation");
  if (!linalg::is_pd(k, options.pivot_tol))
    throw Error(ErrorCode::NotPositiveDefinite,
                "I - R built from the partial correlations is not positive definite");

  Model m;
  m.options_ = options;
  m.origin_ = ModelOrigin::PartialCorrelations;
  m.input_pcor_ = pcor;
  m.sigma_ = SymMatrix(g.vertices(), linalg::inverse_pd(k, options.pivot_tol));
  m.kappa_ = SymMatrix(g.vertices(), std::move(k));
  m.graph_ = std::move(g);
  m.derive();
  return m;
}

void Model::derive() {
  const auto& labels = graph_.vertices();
  const Eigen::MatrixXd& s = sigma_.values();
  const Eigen::MatrixXd& k = kappa_.values();
  const Eigen::VectorXd inv_sd = s.diagonal().cwiseSqrt().cwiseInverse();
  const Eigen::VectorXd k_sqrt = k.diagonal().cwiseSqrt();
  const Eigen::VectorXd k_inv_sqrt = k_sqrt.cwiseInverse();

  Eigen::MatrixXd omega = scale_both(s, inv_sd);
  omega.diagonal().setOnes();

  Eigen::MatrixXd i_minus_r = scale_both(k, k_inv_sqrt);
  i_minus_r.diagonal().setOnes();
  Eigen::MatrixXd r = -i_minus_r;
  r.diagonal().setZero();

  omega_ = SymMatrix(labels, std::move(omega));
  pcor_ = SymMatrix(labels, std::move(r));
  i_minus_r_ = SymMatrix(labels, std::move(i_minus_r));
  varrho_ = SymMatrix(labels, scale_both(s, k_sqrt));
}

SymMatrix Model::conditional_covariance(const VertexSet& a) const {
  const auto idx = kappa_.positions(a);
  return SymMatrix(kappa_.ordered(a),
                   linalg::inverse_pd(linalg::principal(kappa_.values(), idx),
                                      options_.pivot_tol));
}

SymMatrix Model::conditional_inflated_correlation(const VertexSet& a) const {
  const auto idx = i_minus_r_.positions(a);
  return SymMatrix(i_minus_r_.ordered(a),
                   linalg::inverse_pd(linalg::principal(i_minus_r_.values(), idx),
                                      options_.pivot_tol));
}

SymMatrix Model::conditional_correlation(const VertexSet& a) const {
  const SymMatrix cov = conditional_covariance(a);
  Eigen::MatrixXd c =
      scale_both(cov.values(), cov.values().diagonal().cwiseSqrt().cwiseInverse());
  c.diagonal().setOnes();
  return SymMatrix(cov.labels(), std::move(c));
}

Model Model::conditional(const VertexSet& a) const {
  const auto idx = kappa_.positions(a);
  Eigen::MatrixXd k = linalg::principal(kappa_.values(), idx);
  Graph sub = induced_subgraph(graph_, a);

  Model m;
  m.options_ = options_;
  m.origin_ = ModelOrigin::Covariance;
  m.sigma_ = SymMatrix(sub.vertices(), linalg::inverse_pd(k, options_.pivot_tol));
  m.kappa_ = SymMatrix(sub.vertices(), std::move(k));
  m.graph_ = std::move(sub);
  m.derive();
  return m;
}

double Model::scale(const Measure& measure, const Label& v) const {
  switch (measure.kind) {
    case MeasureKind::Covariance: return 1.0;
    case MeasureKind::Correlation: return 1.0 / std::sqrt(sigma_.at(v, v));
    case MeasureKind::InflatedCorrelation: return std::sqrt(kappa_.at(v, v));
    case MeasureKind::Custom: {
      auto it = measure.delta.find(v);
      if (it == measure.delta.end())
        throw Error(ErrorCode::InvalidArgument, "custom scaling has no entry for '" + v + "'");
      return it->second;
    }
  }
  return 1.0;
}

SymMatrix Model::scaled(const Measure& measure) const {
  Eigen::VectorXd d(static_cast<Eigen::Index>(vertices().size()));
  for (std::size_t i = 0; i < vertices().size(); ++i)
    d(static_cast<Eigen::Index>(i)) = scale(measure, vertices()[i]);
  return SymMatrix(vertices(), scale_both(sigma_.values(), d));
}

}  // namespace pathweights
