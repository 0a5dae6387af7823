#include "pathweights/weights.hpp"

#include <algorithm>
#include <cmath>

#include "pathweights/inflation.hpp"

namespace pathweights {

namespace {

double sign_for(std::size_t vertices) { return vertices % 2 == 1 ? 1.0 : -1.0; }

// Product over the steps of p of the entries of `m`.
double edge_product(const SymMatrix& m, const Path& p) {
  const auto& vs = p.vertices();
  double out = 1.0;
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) out *= m.at(vs[i], vs[i + 1]);
  return out;
}

double covariance_weight(const SymMatrix& sigma, const SymMatrix& kappa, const Path& p) {
  const auto idx = sigma.positions(p.vertices());
  return sign_for(p.size()) * linalg::det_pd(sigma.values(), idx) *
         edge_product(kappa, p);
}

bool covers_all(const Model& m, const VertexSet& a) {
  return m.sigma().positions(a).size() == m.vertices().size();
}

void require_within(const Model& m, const Path& p, const VertexSet& a) {
  const auto idx = m.sigma().positions(a);
  for (const auto& v : p.vertices()) {
    const auto i = m.sigma().index_of(v);
    if (!std::binary_search(idx.begin(), idx.end(), i))
      throw Error(ErrorCode::InvalidArgument,
                  "path vertex '" + v + "' is outside the conditioning set");
  }
}

}  // namespace

double path_weight(const SymMatrix& gamma, const SymMatrix& theta, const Path& p) {
  return covariance_weight(gamma, theta, p);
}

double weight(const Model& m, const Path& p, const Measure& measure) {
  m.graph().validate(p);
  const double w = covariance_weight(m.sigma(), m.kappa(), p);
  if (measure.kind == MeasureKind::Covariance) return w;
  return m.scale(measure, p.front()) * m.scale(measure, p.back()) * w;
}

double partial_weight(const Model& m, const Path& p, const VertexSet& a) {
  m.graph().validate(p);
  require_within(m, p, a);
  if (covers_all(m, a)) return covariance_weight(m.sigma(), m.kappa(), p);
  return covariance_weight(m.conditional_covariance(a), m.kappa(), p);
}

WeightBreakdown factorize(const Model& m, const Path& p, const VertexSet& a,
                          const Measure& measure) {
  m.graph().validate(p);
  require_within(m, p, a);
  const Label& x = p.front();
  const Label& y = p.back();
  const VertexSet outside = m.sigma().complement(a);
  const SymMatrix cond =
      outside.empty() ? m.sigma() : m.conditional_covariance(a);

  WeightBreakdown out;
  out.path = p;
  out.measure = measure.kind;
  out.weight = weight(m, p, measure);
  out.inflation = inflation_factor(m.sigma(), p.vertices(), outside);
  out.phi = phi(m, p);

  const double partial_cov = covariance_weight(cond, m.kappa(), p);
  switch (measure.kind) {
    case MeasureKind::Covariance:
      out.partial_weight = partial_cov;
      break;
    case MeasureKind::Correlation: {
      const double vx = cond.at(x, x);
      const double vy = cond.at(y, y);
      out.partial_weight = partial_cov / std::sqrt(vx * vy);
      const double if_x = m.sigma().at(x, x) / vx;
      const double if_y = m.sigma().at(y, y) / vy;
      out.endpoint_factor = 1.0 / std::sqrt(if_x * if_y);
      break;
    }
    case MeasureKind::InflatedCorrelation:
    case MeasureKind::Custom:
      out.partial_weight = m.scale(measure, x) * m.scale(measure, y) * partial_cov;
      break;
  }
  return out;
}

WeightBreakdown factorize(const Model& m, const Path& p, const Measure& measure) {
  return factorize(m, p, p.vertices(), measure);
}

double inflated_weight_explicit(const Model& m, const Path& p) {
  m.graph().validate(p);
  return det(m.inflated_correlation_matrix(), p.vertices()) *
         edge_product(m.partial_correlation_matrix(), p);
}

double partial_inflated_weight_explicit(const Model& m, const Path& p) {
  m.graph().validate(p);
  return edge_product(m.partial_correlation_matrix(), p) /
         det(m.scaled_concentration(), p.vertices());
}

double phi(const Model& m, const Path& p) {
  m.graph().validate(p);
  const SymMatrix& imr = m.scaled_concentration();
  return det(imr, imr.complement(p.vertices())) *
         edge_product(m.partial_correlation_matrix(), p);
}

WeightBounds weight_bounds(const Model& m, const Path& p, const Measure& measure) {
  m.graph().validate(p);
  const Label& x = p.front();
  const Label& y = p.back();
  const double dx = m.scale(measure, x);
  const double dy = m.scale(measure, y);
  const double kx = m.kappa().at(x, x);
  const double ky = m.kappa().at(y, y);
  const double bound =
      det(m.inflated_correlation_matrix()) * std::sqrt(dx * dx / kx * dy * dy / ky);
  return {-bound, bound};
}

EdgeMeasures networked_edge_measures(const Model& m, const Edge& e) {
  if (!m.graph().has_edge(e.u, e.v))
    throw Error(ErrorCode::InvalidArgument, "{" + e.u + "," + e.v + "} is not an edge");
  const VertexSet pair{e.u, e.v};
  const SymMatrix cond = m.conditional_covariance(pair);

  EdgeMeasures out;
  out.edge = e;
  out.partial_correlation = m.partial_correlation(e.u, e.v);
  out.partial_covariance = cond.at(e.u, e.v);
  out.inflation = inflation_factor(m, pair);
  const double rho = out.partial_correlation;
  out.networked_partial_covariance = out.partial_covariance * out.inflation;
  out.networked_partial_correlation = rho * out.inflation;
  out.networked_inflated_partial_correlation = rho / (1.0 - rho * rho) * out.inflation;
  return out;
}

std::vector<EdgeMeasures> networked_edge_measures(const Model& m) {
  std::vector<EdgeMeasures> out;
  for (const auto& e : m.graph().edges()) out.push_back(networked_edge_measures(m, e));
  return out;
}

}  // namespace pathweights
