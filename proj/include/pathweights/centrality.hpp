#pragma once

#include <map>
#include <utility>
#include <vector>

#include "pathweights/model.hpp"

namespace pathweights {

enum class BetweennessMode { AllPaths, ShortestPaths };

const char* to_string(BetweennessMode mode) noexcept;

struct CentralityRecord {
  Label vertex;
  /// B(v): sum over unordered pairs of the weight share of paths through v.
  double betweenness = 0.0;
  /// (B - B_min) / (B_max - B_min)
  double normalized = 0.0;
  std::size_t degree = 0;
};

struct CentralityTable {
  BetweennessMode mode = BetweennessMode::AllPaths;
  /// One record per vertex, in model vertex order.
  std::vector<CentralityRecord> records;
  /// Pairs with no connecting path, or whose total absolute weight is
  /// below kMinPairWeight; they contribute nothing.
  std::vector<std::pair<Label, Label>> skipped_pairs;
  /// B_max == B_min, so every normalized value was set to 0.
  bool degenerate = false;

  const CentralityRecord& at(const Label& v) const;
};

inline constexpr double kMinPairWeight = 1e-12;

/// B_xy(v) for every interior vertex v of some path between x and y.
/// Empty when x and y are not connected or the pair is degenerate.
std::map<Label, double> pair_betweenness(const Model& m, const Label& x, const Label& y,
                                         BetweennessMode mode = BetweennessMode::AllPaths,
                                         std::size_t cap = kDefaultPathCap,
                                         const Measure& measure = Measure::inflated_correlation());

/// Path-weight betweenness centrality. The result does not depend on the
/// measure; inflated correlations are the default because their weights
/// are bounded by |Varrho| for every path.
CentralityTable betweenness(const Model& m, BetweennessMode mode = BetweennessMode::AllPaths,
                            std::size_t cap = kDefaultPathCap,
                            const Measure& measure = Measure::inflated_correlation());

}  // namespace pathweights
