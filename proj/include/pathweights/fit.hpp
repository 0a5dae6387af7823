#pragma once

#include <cstddef>
#include <map>
#include <optional>

#include "pathweights/model.hpp"

namespace pathweights {

struct IpsOptions {
  /// Absolute tolerance on |Sigma-hat_uv - S_uv| over edges and the diagonal.
  double tol = 1e-9;
  std::size_t max_iter = 10000;
  ModelOptions model;
};

struct IpsFit {
  Model model;
  std::size_t iterations;
  /// Largest edge/diagonal moment mismatch after the final sweep.
  double max_discrepancy;
};

/// Maximum-likelihood covariance of the concentration graph model for `g`
/// given the sample covariance `s`, by iterative proportional scaling over
/// the edges and single vertices of `g`. Throws NotConvergedError.
IpsFit ips_fit(const SymMatrix& s, const Graph& g, const IpsOptions& options = {});

/// Signs delta_v = +-1 that make every edge partial correlation of
/// Delta X non-negative.
struct SignAssignment {
  std::map<Label, int> delta;
};

inline constexpr double kSignTol = 1e-10;

/// True if delta_u delta_v rho_uv >= -tol for every edge.
bool is_valid_assignment(const Model& m, const SignAssignment& s, double tol = kSignTol);

/// Finds a signed-MTP2 assignment by propagating signs along spanning trees
/// of the non-zero edges; nullopt when some cycle carries an odd number of
/// negative partial correlations.
std::optional<SignAssignment> mtp2_sign_search(const Model& m, double tol = kSignTol);

}  // namespace pathweights
