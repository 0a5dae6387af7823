#include "pathweights/sym_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pathweights/error.hpp"

namespace pathweights {

SymMatrix::SymMatrix(std::vector<Label> labels, Eigen::MatrixXd values,
                     double symmetry_tol)
    : labels_(std::move(labels)), values_(std::move(values)) {
  const auto n = static_cast<Eigen::Index>(labels_.size());
  if (values_.rows() != n || values_.cols() != n) {
    std::ostringstream os;
    os << "matrix is " << values_.rows() << "x" << values_.cols() << " but "
       << labels_.size() << " labels were given";
    throw Error(ErrorCode::InvalidArgument, os.str());
  }
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!index_.emplace(labels_[i], i).second)
      throw Error(ErrorCode::InvalidArgument, "duplicate label '" + labels_[i] + "'");
  }
  linalg::require_finite(values_);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double a = values_(i, j);
      const double b = values_(j, i);
      const double scale = std::max({1.0, std::abs(a), std::abs(b)});
      if (std::abs(a - b) > symmetry_tol * scale) {
        std::ostringstream os;
        os << "matrix is not symmetric at (" << labels_[i] << ", " << labels_[j]
           << "): " << a << " vs " << b;
        throw Error(ErrorCode::InvalidMatrix, os.str());
      }
    }
  }
  linalg::symmetrize(values_);
}

SymMatrix SymMatrix::identity(std::vector<Label> labels) {
  const auto n = static_cast<Eigen::Index>(labels.size());
  return SymMatrix(std::move(labels), Eigen::MatrixXd::Identity(n, n));
}

SymMatrix SymMatrix::diagonal(std::vector<Label> labels,
                              std::span<const double> diag) {
  if (diag.size() != labels.size())
    throw Error(ErrorCode::InvalidArgument, "diagonal length does not match labels");
  const auto n = static_cast<Eigen::Index>(labels.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = diag[static_cast<std::size_t>(i)];
  return SymMatrix(std::move(labels), std::move(m));
}

double SymMatrix::at(const Label& u, const Label& v) const {
  return values_(static_cast<Eigen::Index>(index_of(u)),
                 static_cast<Eigen::Index>(index_of(v)));
}

bool SymMatrix::contains(const Label& label) const {
  return index_.contains(label);
}

std::size_t SymMatrix::index_of(const Label& label) const {
  auto it = index_.find(label);
  if (it == index_.end())
    throw Error(ErrorCode::IndexError, "unknown label '" + label + "'");
  return it->second;
}

std::vector<std::size_t> SymMatrix::positions(const VertexSet& rows) const {
  std::vector<std::size_t> idx;
  idx.reserve(rows.size());
  for (const auto& r : rows) idx.push_back(index_of(r));
  std::sort(idx.begin(), idx.end());
  if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
    throw Error(ErrorCode::InvalidArgument, "vertex set contains duplicates");
  return idx;
}

VertexSet SymMatrix::ordered(const VertexSet& rows) const {
  VertexSet out;
  for (auto i : positions(rows)) out.push_back(labels_[i]);
  return out;
}

VertexSet SymMatrix::complement(const VertexSet& rows) const {
  const auto idx = positions(rows);
  VertexSet out;
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (!std::binary_search(idx.begin(), idx.end(), i)) out.push_back(labels_[i]);
  return out;
}

SymMatrix SymMatrix::submatrix(const VertexSet& rows) const {
  const auto idx = positions(rows);
  std::vector<Label> sub_labels;
  sub_labels.reserve(idx.size());
  for (auto i : idx) sub_labels.push_back(labels_[i]);
  return SymMatrix(std::move(sub_labels), linalg::principal(values_, idx));
}

bool is_positive_definite(const SymMatrix& m, double tol) {
  return linalg::is_pd(m.values(), tol);
}

double det(const SymMatrix& m, const VertexSet& rows) {
  return linalg::det_pd(m.values(), m.positions(rows));
}

double det(const SymMatrix& m) { return linalg::det_pd(m.values()); }

SymMatrix inverse(const SymMatrix& m, double tol) {
  return SymMatrix(m.labels(), linalg::inverse_pd(m.values(), tol));
}

SymMatrix schur_complement(const SymMatrix& m, const VertexSet& a,
                           const VertexSet& b) {
  const auto ia = m.positions(a);
  const auto ib = m.positions(b);
  std::vector<std::size_t> both;
  std::set_intersection(ia.begin(), ia.end(), ib.begin(), ib.end(),
                        std::back_inserter(both));
  if (!both.empty())
    throw Error(ErrorCode::InvalidArgument,
                "Schur complement blocks overlap at '" + m.labels()[both.front()] + "'");
  std::vector<Label> sub_labels;
  for (auto i : ia) sub_labels.push_back(m.labels()[i]);
  return SymMatrix(std::move(sub_labels), linalg::schur(m.values(), ia, ib));
}

namespace linalg {

Eigen::MatrixXd principal(const Eigen::MatrixXd& m, std::span<const std::size_t> idx) {
  const auto n = static_cast<Eigen::Index>(idx.size());
  Eigen::MatrixXd out(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      out(i, j) = m(static_cast<Eigen::Index>(idx[static_cast<std::size_t>(i)]),
                    static_cast<Eigen::Index>(idx[static_cast<std::size_t>(j)]));
  return out;
}

void require_finite(const Eigen::MatrixXd& m) {
  if (!m.allFinite()) throw Error(ErrorCode::InvalidMatrix, "matrix has non-finite entries");
}

namespace {

bool pivots_ok(const Eigen::LDLT<Eigen::MatrixXd>& f, double max_diag, double tol) {
  if (f.info() != Eigen::Success) return false;
  const double floor = tol * max_diag;
  return (f.vectorD().array() > floor).all();
}

}  // namespace

bool is_pd(const Eigen::MatrixXd& m, double tol) {
  require_finite(m);
  if (m.size() == 0) return true;
  const double max_diag = m.diagonal().maxCoeff();
  if (!(max_diag > 0.0)) return false;
  Eigen::LDLT<Eigen::MatrixXd> f(m);
  return pivots_ok(f, max_diag, tol);
}

double det_pd(const Eigen::MatrixXd& m) {
  switch (m.rows()) {
    case 0: return 1.0;
    case 1: return m(0, 0);
    default: break;
  }
  Eigen::LDLT<Eigen::MatrixXd> f(m);
  return f.vectorD().prod();
}

double det_pd(const Eigen::MatrixXd& m, std::span<const std::size_t> idx) {
  if (idx.empty()) return 1.0;
  if (idx.size() == 1) {
    const auto i = static_cast<Eigen::Index>(idx[0]);
    return m(i, i);
  }
  return det_pd(principal(m, idx));
}

Eigen::MatrixXd inverse_pd(const Eigen::MatrixXd& m, double tol) {
  require_finite(m);
  const auto n = m.rows();
  if (n == 0) return m;
  const double max_diag = m.diagonal().maxCoeff();
  Eigen::LDLT<Eigen::MatrixXd> f(m);
  if (!(max_diag > 0.0) || !pivots_ok(f, max_diag, tol))
    throw Error(ErrorCode::NotPositiveDefinite, "matrix is not positive definite");
  Eigen::MatrixXd inv = f.solve(Eigen::MatrixXd::Identity(n, n));
  symmetrize(inv);
  return inv;
}

Eigen::MatrixXd schur(const Eigen::MatrixXd& m, std::span<const std::size_t> a,
                      std::span<const std::size_t> b) {
  Eigen::MatrixXd maa = principal(m, a);
  if (b.empty()) return maa;
  const auto na = static_cast<Eigen::Index>(a.size());
  const auto nb = static_cast<Eigen::Index>(b.size());
  Eigen::MatrixXd mab(na, nb);
  for (Eigen::Index i = 0; i < na; ++i)
    for (Eigen::Index j = 0; j < nb; ++j)
      mab(i, j) = m(static_cast<Eigen::Index>(a[static_cast<std::size_t>(i)]),
                    static_cast<Eigen::Index>(b[static_cast<std::size_t>(j)]));
  const Eigen::MatrixXd mbb = principal(m, b);
  Eigen::LDLT<Eigen::MatrixXd> f(mbb);
  if (!pivots_ok(f, mbb.diagonal().maxCoeff(), kDefaultPivotTol))
    throw Error(ErrorCode::NotPositiveDefinite,
                "conditioning block of Schur complement is not positive definite");
  Eigen::MatrixXd out = maa - mab * f.solve(mab.transpose());
  symmetrize(out);
  return out;
}

void symmetrize(Eigen::MatrixXd& m) {
  const auto n = m.rows();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double avg = 0.5 * (m(i, j) + m(j, i));
      m(i, j) = avg;
      m(j, i) = avg;
    }
}

}  // namespace linalg

}  // namespace pathweights
