#include "pathweights/inflation.hpp"

#include <algorithm>

namespace pathweights {

namespace {

void require_disjoint(const SymMatrix& s, const VertexSet& a, const VertexSet& b) {
  const auto ia = s.positions(a);
  const auto ib = s.positions(b);
  std::vector<std::size_t> both;
  std::set_intersection(ia.begin(), ia.end(), ib.begin(), ib.end(),
                        std::back_inserter(both));
  if (!both.empty())
    throw Error(ErrorCode::InvalidArgument,
                "inflation factor sets overlap at '" + s.labels()[both.front()] + "'");
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

double inflation_factor(const SymMatrix& s, const VertexSet& a, const VertexSet& b) {
  require_disjoint(s, a, b);
  if (a.empty() || b.empty()) return 1.0;
  return det(s, a) / det(schur_complement(s, a, b));
}

double inflation_factor(const Model& m, const VertexSet& a, const VertexSet& b) {
  return inflation_factor(m.sigma(), a, b);
}

double inflation_factor(const Model& m, const VertexSet& a) {
  return inflation_factor(m.sigma(), a, m.sigma().complement(a));
}

InflationIdentities inflation_factor_identities(const Model& m, const VertexSet& a,
                                                const VertexSet& b) {
  const SymMatrix& s = m.sigma();
  require_disjoint(s, a, b);
  InflationIdentities out{1.0, 1.0, 1.0, 1.0, std::nullopt};
  const bool complementary = a.size() + b.size() == s.size();
  if (complementary) out.concentration = 1.0;
  if (a.empty() || b.empty()) return out;

  const double d_a = det(s, a);
  const double d_b = det(s, b);
  const double d_ab = det(s, set_union(a, b));
  const double d_a_given_b = det(schur_complement(s, a, b));
  const double d_b_given_a = det(schur_complement(s, b, a));
  out.joint = d_a * d_b / d_ab;
  out.given_b = d_a / d_a_given_b;
  out.given_a = d_b / d_b_given_a;
  out.symmetric = d_ab / (d_a_given_b * d_b_given_a);
  if (complementary) {
    const SymMatrix& k = m.kappa();
    out.concentration = det(k, a) * det(k, b) / det(k);
  }
  return out;
}

double global_collinearity(const Model& m, CollinearityScale scale,
                           const std::optional<std::vector<VertexSet>>& partition) {
  const SymMatrix& s = m.sigma();
  std::vector<VertexSet> blocks;
  if (partition) {
    blocks = *partition;
    std::vector<std::size_t> seen;
    for (const auto& block : blocks) {
      if (block.empty()) throw Error(ErrorCode::InvalidArgument, "partition has an empty block");
      const auto idx = s.positions(block);
      seen.insert(seen.end(), idx.begin(), idx.end());
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
      throw Error(ErrorCode::InvalidArgument, "partition blocks overlap");
    if (seen.size() != s.size())
      throw Error(ErrorCode::InvalidArgument, "partition does not cover every vertex");
  } else {
    for (const auto& v : s.labels()) blocks.push_back({v});
  }

  const double d = det(s);
  double product = 1.0;
  for (const auto& block : blocks) {
    if (scale == CollinearityScale::Variance)
      product *= det(s, block);
    else
      product *= det(m.conditional_covariance(block));
  }
  return scale == CollinearityScale::Variance ? product / d : d / product;
}

}  // namespace pathweights
