// Independent reference computations for the tests. Nothing here calls the
// library's linear algebra: determinants and inverses use plain Gaussian
// elimination, weights use the complement-determinant form.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "pathweights/model.hpp"

namespace oracle {

using pathweights::Edge;
using pathweights::Graph;
using pathweights::Label;
using pathweights::Path;
using pathweights::SymMatrix;
using Mat = std::vector<std::vector<double>>;

inline Mat to_mat(const Eigen::MatrixXd& m) {
  Mat out(static_cast<std::size_t>(m.rows()), std::vector<double>(static_cast<std::size_t>(m.cols())));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m(i, j);
  return out;
}

inline Eigen::MatrixXd to_eigen(const Mat& m) {
  const auto n = static_cast<Eigen::Index>(m.size());
  Eigen::MatrixXd out(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      out(i, j) = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return out;
}

/// Gaussian elimination with partial pivoting; empty matrix gives 1.
inline double det(Mat a) {
  const std::size_t n = a.size();
  double d = 1.0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
    if (a[piv][c] == 0.0) return 0.0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      d = -d;
    }
    d *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const double f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return d;
}

/// Gauss-Jordan inverse with partial pivoting.
inline Mat inverse(Mat a) {
  const std::size_t n = a.size();
  Mat inv(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1.0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
    std::swap(a[piv], a[c]);
    std::swap(inv[piv], inv[c]);
    const double p = a[c][c];
    for (std::size_t k = 0; k < n; ++k) {
      a[c][k] /= p;
      inv[c][k] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      const double f = a[r][c];
      if (f == 0.0) continue;
      for (std::size_t k = 0; k < n; ++k) {
        a[r][k] -= f * a[c][k];
        inv[r][k] -= f * inv[c][k];
      }
    }
  }
  return inv;
}

inline Mat sub(const Mat& m, const std::vector<std::size_t>& idx) {
  Mat out(idx.size(), std::vector<double>(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) out[i][j] = m[idx[i]][idx[j]];
  return out;
}

inline std::vector<std::size_t> indices(const std::vector<Label>& all, const std::vector<Label>& some) {
  std::vector<std::size_t> out;
  for (const auto& s : some)
    out.push_back(static_cast<std::size_t>(std::find(all.begin(), all.end(), s) - all.begin()));
  return out;
}

inline std::vector<std::size_t> complement_indices(std::size_t n, const std::vector<std::size_t>& idx) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (std::find(idx.begin(), idx.end(), i) == idx.end()) out.push_back(i);
  return out;
}

/// M_AA - M_AB M_BB^{-1} M_BA by Gauss-Jordan.
inline Mat schur(const Mat& m, const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  Mat out = sub(m, a);
  if (b.empty()) return out;
  const Mat bb_inv = inverse(sub(m, b));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < b.size(); ++k)
        for (std::size_t l = 0; l < b.size(); ++l) s += m[a[i]][b[k]] * bb_inv[k][l] * m[b[l]][a[j]];
      out[i][j] -= s;
    }
  return out;
}

/// (-1)^{|P|+1} |K_{P-bar P-bar}| / |K| prod kappa_uv, from Gamma alone.
inline double complement_weight(const std::vector<Label>& labels, const Mat& gamma, const Path& p) {
  const Mat k = inverse(gamma);
  const auto pidx = indices(labels, p.vertices());
  const auto rest = complement_indices(labels.size(), pidx);
  double w = (p.size() % 2 == 1 ? 1.0 : -1.0) * det(sub(k, rest)) / det(k);
  for (std::size_t i = 0; i + 1 < pidx.size(); ++i) w *= k[pidx[i]][pidx[i + 1]];
  return w;
}

inline double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

/// Relative error against the larger magnitude, for comparing two routes.
inline double rel_diff(double a, double b) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return a == b ? 0.0 : std::abs(a - b) / scale;
}

inline std::vector<Label> labels(std::size_t n) {
  std::vector<Label> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("v" + std::to_string(i));
  return out;
}

struct RandomModel {
  std::uint64_t seed;
  Graph graph;
  SymMatrix sigma;
};

/// Edges chosen independently with probability `density`; the concentration
/// matrix gets random off-diagonal entries on the edges and a diagonal just
/// large enough to be positive definite, then a random diagonal rescaling.
inline RandomModel random_model(std::uint64_t seed, std::size_t p, double density) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> off(-1.0, 1.0);
  const auto names = labels(p);
  for (;;) {
    std::vector<Edge> edges;
    Mat k(p, std::vector<double>(p, 0.0));
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = i + 1; j < p; ++j)
        if (unit(rng) < density) {
          edges.emplace_back(names[i], names[j]);
          double v = off(rng);
          if (std::abs(v) < 0.05) v = v < 0 ? -0.05 : 0.05;
          k[i][j] = k[j][i] = v;
        }
    for (std::size_t i = 0; i < p; ++i) {
      double row = 0.0;
      for (std::size_t j = 0; j < p; ++j)
        if (j != i) row += std::abs(k[i][j]);
      k[i][i] = row * (0.55 + 0.6 * unit(rng)) + 0.1;
    }
    // leading minors positive <=> PD (Sylvester); keeps only well-conditioned draws
    bool pd = true;
    for (std::size_t n = 1; n <= p && pd; ++n) {
      std::vector<std::size_t> lead(n);
      for (std::size_t i = 0; i < n; ++i) lead[i] = i;
      pd = det(sub(k, lead)) > 1e-3;
    }
    if (!pd) continue;
    std::vector<double> d(p);
    for (auto& x : d) x = 0.3 + 2.5 * unit(rng);
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < p; ++j) k[i][j] *= d[i] * d[j];
    Mat s = inverse(k);
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < i; ++j) s[i][j] = s[j][i] = 0.5 * (s[i][j] + s[j][i]);
    return {seed, Graph(names, edges), SymMatrix(names, to_eigen(s))};
  }
}

/// Random labelled tree (random attachment).
inline std::vector<Edge> random_tree_edges(std::mt19937_64& rng, const std::vector<Label>& names) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < names.size(); ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    edges.emplace_back(names[pick(rng)], names[i]);
  }
  return edges;
}

/// Random chordal graph: each new vertex joins a random clique of earlier
/// vertices (the neighbourhood of a random earlier vertex, plus that vertex).
inline std::vector<Edge> random_decomposable_edges(std::mt19937_64& rng, const std::vector<Label>& names) {
  std::vector<std::set<std::size_t>> adj(names.size());
  std::vector<std::vector<std::size_t>> cliques;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < names.size(); ++i) {
    std::vector<std::size_t> sep;
    if (!cliques.empty() && unit(rng) < 0.85) {
      std::uniform_int_distribution<std::size_t> pick(0, cliques.size() - 1);
      for (auto v : cliques[pick(rng)])
        if (unit(rng) < 0.7) sep.push_back(v);
    }
    for (auto v : sep) edges.emplace_back(names[v], names[i]);
    sep.push_back(i);
    cliques.push_back(sep);
  }
  return edges;
}

/// PD matrix with an arbitrary dense pattern (for sample covariances).
inline SymMatrix random_pd(std::mt19937_64& rng, const std::vector<Label>& names) {
  const std::size_t p = names.size();
  std::normal_distribution<double> z(0.0, 1.0);
  Eigen::MatrixXd a(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(2 * p + 3));
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) a(i, j) = z(rng);
  Eigen::MatrixXd s = a * a.transpose() / static_cast<double>(a.cols());
  s = 0.5 * (s + s.transpose()).eval();
  return SymMatrix(names, s);
}

/// Every +-1 vector, checking delta_u delta_v rho_uv >= -tol on the edges.
inline bool brute_force_signable(const Graph& g, const SymMatrix& r, double tol) {
  const std::size_t n = g.vertex_count();
  const auto es = g.edges();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool good = true;
    for (const auto& e : es) {
      const auto i = g.index_of(e.u);
      const auto j = g.index_of(e.v);
      const int du = (mask >> i) & 1 ? -1 : 1;
      const int dv = (mask >> j) & 1 ? -1 : 1;
      if (du * dv * r.at(e.u, e.v) < -tol) {
        good = false;
        break;
      }
    }
    if (good) return true;
  }
  return false;
}

/// K = I - R with R_12 = R_13 = R_23 = 0.3 on the triangle {1,2,3}:
/// |K| = 0.676, sigma_13 = 0.39/0.676 = 0.5769; path weights
/// omega(<1,3>) = 0.3/0.676 = 0.4438, omega(<1,2,3>) = 0.09/0.676 = 0.1331.
inline SymMatrix triangle_sigma() {
  Mat k = {{1.0, -0.3, -0.3}, {-0.3, 1.0, -0.3}, {-0.3, -0.3, 1.0}};
  return SymMatrix({"1", "2", "3"}, to_eigen(inverse(k)));
}

inline Graph triangle_graph() {
  return Graph({"1", "2", "3"}, {{"1", "2"}, {"1", "3"}, {"2", "3"}});
}

}  // namespace oracle
