#include "pathweights/decompose.hpp"

#include <algorithm>
#include <cmath>

#include "pathweights/fit.hpp"
#include "pathweights/weights.hpp"
#include "summation.hpp"

namespace pathweights {

namespace {

// Association between x and y in the matrix the weights decompose, computed
// without reference to any path.
double direct_target(const Model& m, const Label& x, const Label& y, const Measure& measure,
                     const std::optional<VertexSet>& restrict_to) {
  if (!restrict_to) {
    switch (measure.kind) {
      case MeasureKind::Covariance: return m.sigma().at(x, y);
      case MeasureKind::Correlation: return m.correlation_matrix().at(x, y);
      case MeasureKind::InflatedCorrelation: return m.inflated_correlation_matrix().at(x, y);
      case MeasureKind::Custom:
        return m.scale(measure, x) * m.scale(measure, y) * m.sigma().at(x, y);
    }
  }
  const VertexSet& a = *restrict_to;
  const VertexSet rest = m.sigma().complement(a);
  if (measure.kind == MeasureKind::InflatedCorrelation)
    return schur_complement(m.inflated_correlation_matrix(), a, rest).at(x, y);
  const SymMatrix cond = schur_complement(m.sigma(), a, rest);
  switch (measure.kind) {
    case MeasureKind::Correlation:
      return cond.at(x, y) / std::sqrt(cond.at(x, x) * cond.at(y, y));
    case MeasureKind::Custom:
      return m.scale(measure, x) * m.scale(measure, y) * cond.at(x, y);
    default:
      return cond.at(x, y);
  }
}

}  // namespace

double DecompositionReport::total_weight() const {
  detail::CompensatedSum sum;
  for (const auto& e : entries) sum += e.weight;
  return sum.value();
}

DecompositionReport decompose(const Model& m, const Label& x, const Label& y,
                              const Measure& measure,
                              const std::optional<VertexSet>& restrict_to,
                              std::size_t cap) {
  if (x == y) throw Error(ErrorCode::InvalidArgument, "decomposition endpoints must differ");
  m.graph().index_of(x);
  m.graph().index_of(y);

  DecompositionReport report;
  report.x = x;
  report.y = y;
  report.measure = measure.kind;
  report.signed_mtp2 = mtp2_sign_search(m).has_value();

  std::optional<Model> conditional;
  if (restrict_to) {
    report.restrict_to = m.sigma().ordered(*restrict_to);
    const auto& a = *report.restrict_to;
    if (std::find(a.begin(), a.end(), x) == a.end() || std::find(a.begin(), a.end(), y) == a.end())
      throw Error(ErrorCode::InvalidArgument, "restriction set must contain both endpoints");
    conditional = m.conditional(a);
  }
  const Model& base = conditional ? *conditional : m;

  const auto& [from, to] = x < y ? std::pair{x, y} : std::pair{y, x};
  PathQuery query;
  query.cap = cap;
  auto paths = enumerate_paths(base.graph(), from, to, query);

  detail::CompensatedSum total;
  detail::CompensatedSum total_abs;
  report.entries.reserve(paths.size());
  for (auto& p : paths) {
    const double w = weight(base, p, measure);
    total += w;
    total_abs += std::abs(w);
    report.entries.push_back({std::move(p), w, 0.0});
  }
  const double denom = total_abs.value();
  if (denom > 0.0)
    for (auto& e : report.entries) e.share = std::abs(e.weight) / denom;

  report.target = direct_target(m, x, y, measure, report.restrict_to);
  report.residual = total.value() - report.target;
  return report;
}

double subset_share(const DecompositionReport& r,
                    const std::function<bool(const Path&)>& pred) {
  detail::CompensatedSum selected;
  detail::CompensatedSum all;
  for (const auto& e : r.entries) {
    all += std::abs(e.weight);
    if (pred(e.path)) selected += std::abs(e.weight);
  }
  if (!(all.value() > 0.0))
    throw Error(ErrorCode::UndefinedShare, "shares are undefined when every weight is zero");
  return selected.value() / all.value();
}

std::vector<RankedPath> rank_paths(const Model& m, std::size_t vertex_count,
                                   const Measure& measure, std::size_t cap) {
  if (measure.kind != MeasureKind::InflatedCorrelation)
    throw Error(ErrorCode::InvalidArgument,
                "paths with different endpoints are only comparable under inflated correlation weights");
  if (vertex_count < 2)
    throw Error(ErrorCode::InvalidArgument, "ranked paths need at least two vertices");

  std::vector<Label> labels = m.vertices();
  std::sort(labels.begin(), labels.end());
  PathQuery query;
  query.max_vertices = vertex_count;
  query.cap = cap;

  std::vector<RankedPath> out;
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j)
      for (auto& p : enumerate_paths(m.graph(), labels[i], labels[j], query)) {
        if (p.size() != vertex_count) continue;
        const double w = weight(m, p, measure);
        out.push_back({std::move(p), w});
      }
  std::sort(out.begin(), out.end(), [](const RankedPath& a, const RankedPath& b) {
    const double wa = std::abs(a.weight);
    const double wb = std::abs(b.weight);
    if (wa != wb) return wa > wb;
    return a.path < b.path;
  });
  return out;
}

}  // namespace pathweights
