#include "pathweights/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "pathweights/weights.hpp"
#include "summation.hpp"

namespace pathweights {

const char* to_string(BetweennessMode mode) noexcept {
  return mode == BetweennessMode::AllPaths ? "all" : "shortest";
}

const CentralityRecord& CentralityTable::at(const Label& v) const {
  auto it = std::find_if(records.begin(), records.end(),
                         [&](const CentralityRecord& r) { return r.vertex == v; });
  if (it == records.end()) throw Error(ErrorCode::IndexError, "unknown vertex '" + v + "'");
  return *it;
}

namespace {

// nullopt: pair is skipped.
std::optional<std::map<Label, double>> pair_shares(const Model& m, const Label& x,
                                                   const Label& y, BetweennessMode mode,
                                                   std::size_t cap, const Measure& measure) {
  const auto dist = distance(m.graph(), x, y);
  if (!dist) return std::nullopt;
  PathQuery query;
  query.cap = cap;
  if (mode == BetweennessMode::ShortestPaths) query.max_vertices = *dist + 1;
  const auto& [from, to] = x < y ? std::pair{x, y} : std::pair{y, x};
  const auto paths = enumerate_paths(m.graph(), from, to, query);

  std::vector<double> magnitude;
  magnitude.reserve(paths.size());
  detail::CompensatedSum total;
  for (const auto& p : paths) {
    magnitude.push_back(std::abs(weight(m, p, measure)));
    total += magnitude.back();
  }
  const double denom = total.value();
  if (!(denom >= kMinPairWeight)) return std::nullopt;

  std::map<Label, detail::CompensatedSum> through;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const auto& vs = paths[i].vertices();
    for (std::size_t k = 1; k + 1 < vs.size(); ++k) through[vs[k]] += magnitude[i];
  }
  std::map<Label, double> out;
  for (const auto& [v, sum] : through) out[v] = sum.value() / denom;
  return out;
}

}  // namespace

std::map<Label, double> pair_betweenness(const Model& m, const Label& x, const Label& y,
                                         BetweennessMode mode, std::size_t cap,
                                         const Measure& measure) {
  if (x == y) throw Error(ErrorCode::InvalidArgument, "pair endpoints must differ");
  return pair_shares(m, x, y, mode, cap, measure).value_or(std::map<Label, double>{});
}

CentralityTable betweenness(const Model& m, BetweennessMode mode, std::size_t cap,
                            const Measure& measure) {
  const auto& vs = m.vertices();
  std::vector<detail::CompensatedSum> acc(vs.size());
  CentralityTable table;
  table.mode = mode;

  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      auto shares = pair_shares(m, vs[i], vs[j], mode, cap, measure);
      if (!shares) {
        table.skipped_pairs.emplace_back(vs[i], vs[j]);
        continue;
      }
      for (const auto& [v, share] : *shares) acc[m.graph().index_of(v)] += share;
    }

  for (std::size_t i = 0; i < vs.size(); ++i)
    table.records.push_back({vs[i], acc[i].value(), 0.0, m.graph().degree(vs[i])});
  if (table.records.empty()) return table;

  const auto [lo, hi] = std::minmax_element(
      table.records.begin(), table.records.end(),
      [](const auto& a, const auto& b) { return a.betweenness < b.betweenness; });
  const double b_min = lo->betweenness;
  const double range = hi->betweenness - b_min;
  table.degenerate = !(range > 0.0);
  if (!table.degenerate)
    for (auto& r : table.records) r.normalized = (r.betweenness - b_min) / range;
  return table;
}

}  // namespace pathweights
