#include "pathweights/fit.hpp"

#include <array>
#include <cmath>
#include <deque>
#include <vector>

namespace pathweights {

namespace {

// Replaces the marginal of the block `c` by s_cc while keeping the
// conditional distribution of the rest given the block.
void scale_block(Eigen::MatrixXd& sigma, const Eigen::MatrixXd& s,
                 std::span<const std::size_t> c) {
  const auto n = sigma.rows();
  const auto k = static_cast<Eigen::Index>(c.size());
  Eigen::MatrixXd cols(n, k);
  for (Eigen::Index j = 0; j < k; ++j)
    cols.col(j) = sigma.col(static_cast<Eigen::Index>(c[static_cast<std::size_t>(j)]));
  const Eigen::MatrixXd current = linalg::principal(sigma, c);
  const Eigen::MatrixXd target = linalg::principal(s, c);
  const Eigen::MatrixXd regress = current.ldlt().solve(cols.transpose()).transpose();
  sigma += regress * (target - current) * regress.transpose();
  linalg::symmetrize(sigma);
}

double discrepancy(const Eigen::MatrixXd& sigma, const Eigen::MatrixXd& s,
                   const std::vector<std::array<std::size_t, 2>>& edges) {
  double worst = (sigma.diagonal() - s.diagonal()).cwiseAbs().maxCoeff();
  for (const auto& [a, b] : edges) {
    const auto i = static_cast<Eigen::Index>(a);
    const auto j = static_cast<Eigen::Index>(b);
    worst = std::max(worst, std::abs(sigma(i, j) - s(i, j)));
  }
  return worst;
}

}  // namespace

IpsFit ips_fit(const SymMatrix& s, const Graph& g, const IpsOptions& options) {
  if (s.size() != g.vertex_count())
    throw Error(ErrorCode::IndexError, "sample covariance labels do not match graph vertices");
  std::vector<std::size_t> order;
  for (const auto& v : g.vertices()) order.push_back(s.index_of(v));
  const Eigen::MatrixXd target = linalg::principal(s.values(), order);
  if (!linalg::is_pd(target, options.model.pivot_tol))
    throw Error(ErrorCode::NotPositiveDefinite, "sample covariance is not positive definite");

  std::vector<std::array<std::size_t, 2>> edges;
  for (const auto& e : g.edges()) edges.push_back({g.index_of(e.u), g.index_of(e.v)});

  const auto n = target.rows();
  Eigen::MatrixXd sigma = Eigen::MatrixXd::Zero(n, n);
  sigma.diagonal() = target.diagonal();

  double gap = discrepancy(sigma, target, edges);
  std::size_t iter = 0;
  while (gap >= options.tol) {
    if (iter == options.max_iter) throw NotConvergedError(iter, gap);
    ++iter;
    for (const auto& e : edges) scale_block(sigma, target, e);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      const std::array<std::size_t, 1> single{v};
      scale_block(sigma, target, single);
    }
    gap = discrepancy(sigma, target, edges);
  }

  Model fitted = Model::from_sigma(g, SymMatrix(g.vertices(), sigma), options.model);
  return {std::move(fitted), iter, gap};
}

bool is_valid_assignment(const Model& m, const SignAssignment& s, double tol) {
  for (const auto& e : m.graph().edges()) {
    auto du = s.delta.find(e.u);
    auto dv = s.delta.find(e.v);
    if (du == s.delta.end() || dv == s.delta.end()) return false;
    if (du->second * dv->second * m.partial_correlation(e.u, e.v) < -tol) return false;
  }
  return true;
}

std::optional<SignAssignment> mtp2_sign_search(const Model& m, double tol) {
  const Graph& g = m.graph();
  const auto& vs = g.vertices();
  std::vector<int> sign(vs.size(), 0);
  for (std::size_t root = 0; root < vs.size(); ++root) {
    if (sign[root] != 0) continue;
    sign[root] = 1;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const auto at = queue.front();
      queue.pop_front();
      for (auto next : g.adjacency(at)) {
        const double rho = m.partial_correlation(vs[at], vs[next]);
        if (std::abs(rho) <= tol) continue;
        const int want = rho > 0 ? sign[at] : -sign[at];
        if (sign[next] == 0) {
          sign[next] = want;
          queue.push_back(next);
        } else if (sign[next] != want) {
          return std::nullopt;
        }
      }
    }
  }
  SignAssignment out;
  for (std::size_t i = 0; i < vs.size(); ++i) out.delta[vs[i]] = sign[i];
  return out;
}

}  // namespace pathweights
