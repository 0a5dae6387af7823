#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "pathweights/error.hpp"

#include <Eigen/Dense>

namespace pathweights {

using Label = std::string;

/// Set of vertex labels. Order on input is irrelevant; every operation that
/// extracts a block re-orders it to the parent matrix's label order.
using VertexSet = std::vector<Label>;

/// Relative pivot tolerance used by the factorization-based routines.
inline constexpr double kDefaultPivotTol = 1e-12;

/// Dense symmetric matrix whose rows and columns are indexed by labels.
///
/// Symmetry is exact: the constructor checks it within a tolerance and then
/// stores the average of the two triangles.
class SymMatrix {
 public:
  SymMatrix() = default;
  SymMatrix(std::vector<Label> labels, Eigen::MatrixXd values,
            double symmetry_tol = 1e-12);

  static SymMatrix identity(std::vector<Label> labels);
  static SymMatrix diagonal(std::vector<Label> labels,
                            std::span<const double> diag);

  const std::vector<Label>& labels() const noexcept { return labels_; }
  std::size_t size() const noexcept { return labels_.size(); }
  const Eigen::MatrixXd& values() const noexcept { return values_; }

  double operator()(std::size_t i, std::size_t j) const { return values_(i, j); }
  double at(const Label& u, const Label& v) const;

  bool contains(const Label& label) const;
  std::size_t index_of(const Label& label) const;

  /// Positions of `rows` in this matrix, sorted in label order. Throws
  /// IndexError for unknown labels and InvalidArgument for duplicates.
  std::vector<std::size_t> positions(const VertexSet& rows) const;

  /// Labels of `rows` in this matrix's label order.
  VertexSet ordered(const VertexSet& rows) const;

  /// All labels not in `rows`, in label order.
  VertexSet complement(const VertexSet& rows) const;

  SymMatrix submatrix(const VertexSet& rows) const;

 private:
  std::vector<Label> labels_;
  std::unordered_map<Label, std::size_t> index_;
  Eigen::MatrixXd values_;
};

bool is_positive_definite(const SymMatrix& m, double tol = kDefaultPivotTol);

/// Determinant of the principal submatrix on `rows`; the empty set gives 1.
double det(const SymMatrix& m, const VertexSet& rows);
double det(const SymMatrix& m);

SymMatrix inverse(const SymMatrix& m, double tol = kDefaultPivotTol);

/// Partial covariance M_{AA.B} = M_AA - M_AB M_BB^{-1} M_BA.
SymMatrix schur_complement(const SymMatrix& m, const VertexSet& a,
                           const VertexSet& b);

/// Positional kernels shared by the higher-level modules. Indices refer to
/// rows of the argument matrix; callers are responsible for validation.
namespace linalg {

using Index = std::vector<std::size_t>;

Eigen::MatrixXd principal(const Eigen::MatrixXd& m, std::span<const std::size_t> idx);

/// Throws InvalidMatrix on non-finite input.
void require_finite(const Eigen::MatrixXd& m);

bool is_pd(const Eigen::MatrixXd& m, double tol = kDefaultPivotTol);

/// Determinant of a symmetric positive-definite matrix from its pivoted
/// LDL^T factorization. An empty matrix has determinant 1.
double det_pd(const Eigen::MatrixXd& m);
double det_pd(const Eigen::MatrixXd& m, std::span<const std::size_t> idx);

/// Throws NotPositiveDefinite when a pivot falls below tol * max diagonal.
Eigen::MatrixXd inverse_pd(const Eigen::MatrixXd& m, double tol = kDefaultPivotTol);

Eigen::MatrixXd schur(const Eigen::MatrixXd& m, std::span<const std::size_t> a,
                      std::span<const std::size_t> b);

/// Exact symmetrization by averaging the two triangles.
void symmetrize(Eigen::MatrixXd& m);

}  // namespace linalg

}  // namespace pathweights
