#pragma once

#include <optional>
#include <vector>

#include "pathweights/model.hpp"

namespace pathweights {

/// Inflation factor of A on B, |S_AA| |S_BB| / |S_{A u B}|, evaluated as
/// |S_AA| / |S_{AA.B}|. Equals 1 when A or B is empty. Throws
/// InvalidArgument when A and B overlap.
double inflation_factor(const SymMatrix& s, const VertexSet& a, const VertexSet& b);
double inflation_factor(const Model& m, const VertexSet& a, const VertexSet& b);

/// IF_A, the inflation factor of A on its complement.
double inflation_factor(const Model& m, const VertexSet& a);

/// All the equivalent closed forms of IF_A^B, for cross-checking.
struct InflationIdentities {
  double joint;          // |S_AA| |S_BB| / |S_{A u B}|
  double given_b;        // |S_AA| / |S_{AA.B}|
  double given_a;        // |S_BB| / |S_{BB.A}|
  double symmetric;      // |S_{A u B}| / (|S_{AA.B}| |S_{BB.A}|)
  /// |K_AA| |K_{A-bar A-bar}| / |K|, present only when B is the complement of A.
  std::optional<double> concentration;
};

InflationIdentities inflation_factor_identities(const Model& m, const VertexSet& a,
                                                const VertexSet& b);

enum class CollinearityScale {
  Variance,         // prod |S_{A_i A_i}| / |S|
  PartialVariance,  // |S| / prod |S_{A_i A_i . A_i-bar}|
};

/// Global collinearity over a partition of the vertices (singletons by
/// default). Singletons give 1/|Omega| and |Varrho| respectively.
double global_collinearity(const Model& m, CollinearityScale scale,
                           const std::optional<std::vector<VertexSet>>& partition = {});

}  // namespace pathweights
