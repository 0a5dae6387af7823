#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "pathweights/model.hpp"

namespace pathweights {

struct DecompositionEntry {
  Path path;
  double weight;
  /// |weight| / sum of |weights|; zero when every weight is zero.
  double share;
};

/// Decomposition of one association between x and y over the paths joining
/// them. `target` is read directly from the relevant matrix, so `residual`
/// is an independent check of the weights.
struct DecompositionReport {
  Label x;
  Label y;
  MeasureKind measure = MeasureKind::Covariance;
  std::optional<VertexSet> restrict_to;
  std::vector<DecompositionEntry> entries;
  double target = 0.0;
  /// sum of weights - target
  double residual = 0.0;
  /// The model is signed-MTP2, so all weights between a pair share a sign
  /// and absolute shares equal signed proportions.
  bool signed_mtp2 = false;

  double total_weight() const;
};

/// Decomposes the association between x and y. With `restrict_to` = A the
/// weights are those of the conditional distribution of X_A | X_{A-bar} and
/// the target is the corresponding partial association.
DecompositionReport decompose(const Model& m, const Label& x, const Label& y,
                              const Measure& measure = Measure::covariance(),
                              const std::optional<VertexSet>& restrict_to = {},
                              std::size_t cap = kDefaultPathCap);

/// Share of the absolute weight carried by the paths accepted by `pred`.
/// Throws UndefinedShare when the report has no nonzero weight.
double subset_share(const DecompositionReport& r,
                    const std::function<bool(const Path&)>& pred);

struct RankedPath {
  Path path;
  double weight;
};

/// Every path of the graph with exactly `vertex_count` vertices, ordered by
/// decreasing |weight|. Only inflated correlation weights share bounds
/// across endpoint pairs, so any other measure is rejected.
std::vector<RankedPath> rank_paths(const Model& m, std::size_t vertex_count,
                                   const Measure& measure = Measure::inflated_correlation(),
                                   std::size_t cap = kDefaultPathCap);

}  // namespace pathweights
