#pragma once

#include <vector>

#include "pathweights/model.hpp"

namespace pathweights {

/// Weights smaller than this in magnitude count as zero in sign comparisons.
/// Reported weights are never rounded.
inline constexpr double kSignZeroTol = 1e-12;

/// Weight of `p` under an arbitrary positive definite `gamma` whose inverse
/// `theta` is adapted to the host graph of `p`:
/// (-1)^{|P|+1} |gamma_PP| prod_{uv in E(p)} theta_uv.
double path_weight(const SymMatrix& gamma, const SymMatrix& theta, const Path& p);

/// Weight of `p` for the given measure: the covariance weight times
/// delta_xx delta_yy. Throws InvalidPath if `p` is not a path of the model graph.
double weight(const Model& m, const Path& p, const Measure& measure = Measure::covariance());

/// Partial covariance weight of `p` relative to X_A | X_{A-bar}, i.e. the
/// covariance weight computed in the model with concentration K_AA.
double partial_weight(const Model& m, const Path& p, const VertexSet& a);

struct WeightBreakdown {
  Path path;
  MeasureKind measure = MeasureKind::Covariance;
  double weight = 0.0;
  /// Weight of the path in the conditional distribution of X_A | X_{A-bar},
  /// expressed in the same measure.
  double partial_weight = 0.0;
  /// IF_P^{A-bar}
  double inflation = 1.0;
  /// 1 / sqrt(IF_x^{A-bar} IF_y^{A-bar}) for correlations, 1 otherwise.
  double endpoint_factor = 1.0;
  /// phi(p, R)
  double phi = 0.0;
};

/// Splits the weight of `p` as partial_weight * inflation * endpoint_factor.
/// Requires V(p) subset of A; A = V(p) gives the canonical factorization.
WeightBreakdown factorize(const Model& m, const Path& p, const VertexSet& a,
                          const Measure& measure = Measure::covariance());
WeightBreakdown factorize(const Model& m, const Path& p,
                          const Measure& measure = Measure::covariance());

/// |Varrho_PP| times the product of edge partial correlations.
double inflated_weight_explicit(const Model& m, const Path& p);
/// |((I - R)_PP)^{-1}| times the product of edge partial correlations.
double partial_inflated_weight_explicit(const Model& m, const Path& p);

/// |(I - R)_{P-bar P-bar}| times the product of edge partial correlations;
/// always within [-1, 1].
double phi(const Model& m, const Path& p);

struct WeightBounds {
  double lower;
  double upper;
};

/// Symmetric attainable bounds on the weight of any path between the
/// endpoints of `p`. For inflated correlations these are +-|Varrho| for
/// every path of the graph.
WeightBounds weight_bounds(const Model& m, const Path& p,
                           const Measure& measure = Measure::covariance());

struct EdgeMeasures {
  Edge edge;
  /// rho_{xy.rest}
  double partial_correlation = 0.0;
  /// sigma_{xy.rest}
  double partial_covariance = 0.0;
  /// IF_{xy} on the remaining variables.
  double inflation = 1.0;
  /// sigma_{xy.rest} * IF_{xy}
  double networked_partial_covariance = 0.0;
  /// rho_{xy.rest} * IF_{xy}
  double networked_partial_correlation = 0.0;
  /// rho / (1 - rho^2) * IF_{xy}: the inflated correlation weight of the edge.
  double networked_inflated_partial_correlation = 0.0;
};

/// Throws InvalidArgument when `e` is not an edge of the model graph.
EdgeMeasures networked_edge_measures(const Model& m, const Edge& e);
std::vector<EdgeMeasures> networked_edge_measures(const Model& m);

}  // namespace pathweights
