#include "pathweights/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "pathweights/error.hpp"

namespace pathweights {

Edge::Edge(Label a, Label b) {
  if (b < a) std::swap(a, b);
  u = std::move(a);
  v = std::move(b);
}

Path::Path(std::vector<Label> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 2)
    throw Error(ErrorCode::InvalidPath, "a path needs at least two vertices");
  std::vector<Label> sorted = vertices_;
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end())
    throw Error(ErrorCode::InvalidPath, "path repeats vertex '" + *dup + "'");
}

bool Path::contains(const Label& v) const {
  return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
}

bool Path::is_interior(const Label& v) const {
  return v != front() && v != back() && contains(v);
}

std::vector<Edge> Path::edges() const {
  std::vector<Edge> out;
  out.reserve(vertices_.size() - 1);
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i)
    out.emplace_back(vertices_[i], vertices_[i + 1]);
  return out;
}

Path Path::canonical() const {
  if (back() < front()) {
    std::vector<Label> rev(vertices_.rbegin(), vertices_.rend());
    return Path(std::move(rev));
  }
  return *this;
}

std::string Path::to_string(std::string_view sep) const {
  std::string out;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i) out += sep;
    out += vertices_[i];
  }
  return out;
}

Graph::Graph(std::vector<Label> vertices, const std::vector<Edge>& edges)
    : labels_(std::move(vertices)) {
  const std::size_t n = labels_.size();
  for (std::size_t i = 0; i < n; ++i)
    if (!index_.emplace(labels_[i], i).second)
      throw Error(ErrorCode::InvalidArgument, "duplicate vertex '" + labels_[i] + "'");
  adj_.assign(n, {});
  adj_matrix_.assign(n * n, 0);
  for (const auto& e : edges) {
    if (e.u == e.v)
      throw Error(ErrorCode::InvalidArgument, "self-loop on vertex '" + e.u + "'");
    auto iu = index_.find(e.u);
    auto iv = index_.find(e.v);
    if (iu == index_.end())
      throw Error(ErrorCode::IndexError, "edge references unknown vertex '" + e.u + "'");
    if (iv == index_.end())
      throw Error(ErrorCode::IndexError, "edge references unknown vertex '" + e.v + "'");
    const std::size_t a = iu->second;
    const std::size_t b = iv->second;
    if (adj_matrix_[a * n + b])
      throw Error(ErrorCode::InvalidArgument, "duplicate edge {" + e.u + "," + e.v + "}");
    adj_matrix_[a * n + b] = adj_matrix_[b * n + a] = 1;
    adj_[a].push_back(b);
    adj_[b].push_back(a);
    ++edge_count_;
  }
  for (auto& list : adj_)
    std::sort(list.begin(), list.end(),
              [this](std::size_t a, std::size_t b) { return labels_[a] < labels_[b]; });
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t i = 0; i < labels_.size(); ++i)
    for (auto j : adj_[i])
      if (i < j) out.emplace_back(labels_[i], labels_[j]);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t Graph::index_of(const Label& v) const {
  auto it = index_.find(v);
  if (it == index_.end()) throw Error(ErrorCode::IndexError, "unknown vertex '" + v + "'");
  return it->second;
}

bool Graph::has_edge(const Label& u, const Label& v) const {
  auto iu = index_.find(u);
  auto iv = index_.find(v);
  if (iu == index_.end() || iv == index_.end()) return false;
  return adjacent(iu->second, iv->second);
}

std::vector<Label> Graph::neighbors(const Label& v) const {
  std::vector<Label> out;
  for (auto j : adj_[index_of(v)]) out.push_back(labels_[j]);
  return out;
}

std::size_t Graph::degree(const Label& v) const { return adj_[index_of(v)].size(); }

void Graph::validate(const Path& p) const {
  for (const auto& v : p.vertices())
    if (!has_vertex(v)) throw Error(ErrorCode::InvalidPath, "path vertex '" + v + "' not in graph");
  for (const auto& e : p.edges())
    if (!has_edge(e.u, e.v))
      throw Error(ErrorCode::InvalidPath, "path step {" + e.u + "," + e.v + "} is not an edge");
}

Graph induced_subgraph(const Graph& g, const VertexSet& a) {
  std::vector<char> keep(g.vertex_count(), 0);
  for (const auto& v : a) {
    const auto i = g.index_of(v);
    if (keep[i]) throw Error(ErrorCode::InvalidArgument, "vertex set repeats '" + v + "'");
    keep[i] = 1;
  }
  std::vector<Label> vertices;
  for (std::size_t i = 0; i < g.vertex_count(); ++i)
    if (keep[i]) vertices.push_back(g.vertices()[i]);
  std::vector<Edge> edges;
  for (const auto& e : g.edges())
    if (keep[g.index_of(e.u)] && keep[g.index_of(e.v)]) edges.push_back(e);
  return Graph(std::move(vertices), edges);
}

namespace {

class PathCollector {
 public:
  PathCollector(const Graph& g, std::vector<char> allowed, std::size_t target,
                std::size_t max_vertices, std::size_t cap)
      : g_(g), allowed_(std::move(allowed)), on_path_(g.vertex_count(), 0),
        target_(target), max_vertices_(max_vertices), cap_(cap) {}

  std::vector<Path> run(std::size_t source) {
    stack_.push_back(source);
    on_path_[source] = 1;
    visit(source);
    return std::move(found_);
  }

 private:
  void visit(std::size_t at) {
    for (auto next : g_.adjacency(at)) {
      if (!allowed_[next] || on_path_[next]) continue;
      if (next == target_) {
        emit();
        continue;
      }
      if (stack_.size() + 1 >= max_vertices_) continue;
      stack_.push_back(next);
      on_path_[next] = 1;
      visit(next);
      on_path_[next] = 0;
      stack_.pop_back();
    }
  }

  void emit() {
    if (found_.size() == cap_) throw PathExplosionError(cap_ + 1, cap_);
    std::vector<Label> seq;
    seq.reserve(stack_.size() + 1);
    for (auto i : stack_) seq.push_back(g_.vertices()[i]);
    seq.push_back(g_.vertices()[target_]);
    found_.emplace_back(std::move(seq));
  }

  const Graph& g_;
  std::vector<char> allowed_;
  std::vector<char> on_path_;
  std::vector<std::size_t> stack_;
  std::vector<Path> found_;
  std::size_t target_;
  std::size_t max_vertices_;
  std::size_t cap_;
};

}  // namespace

std::vector<Path> enumerate_paths(const Graph& g, const Label& x, const Label& y,
                                  const PathQuery& query) {
  if (query.cap < 1) throw Error(ErrorCode::InvalidArgument, "path cap must be at least 1");
  const auto ix = g.index_of(x);
  const auto iy = g.index_of(y);
  if (ix == iy) throw Error(ErrorCode::InvalidArgument, "path endpoints must differ");

  std::vector<char> allowed(g.vertex_count(), 1);
  if (query.restrict_to) {
    std::fill(allowed.begin(), allowed.end(), 0);
    for (const auto& v : *query.restrict_to) allowed[g.index_of(v)] = 1;
    if (!allowed[ix] || !allowed[iy])
      throw Error(ErrorCode::InvalidArgument, "restriction set must contain both endpoints");
  }
  const std::size_t max_vertices = query.max_vertices.value_or(g.vertex_count());
  if (max_vertices < 2) return {};
  PathCollector collector(g, std::move(allowed), iy, max_vertices, query.cap);
  return collector.run(ix);
}

std::vector<Edge> chords(const Graph& g, const Path& p) {
  g.validate(p);
  const auto& vs = p.vertices();
  std::vector<Edge> out;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 2; j < vs.size(); ++j)
      if (g.has_edge(vs[i], vs[j])) out.emplace_back(vs[i], vs[j]);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_chordless(const Graph& g, const Path& p) { return chords(g, p).empty(); }

std::vector<VertexSet> components(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> comp(n, -1);
  std::vector<VertexSet> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    std::vector<std::size_t> members;
    std::deque<std::size_t> queue{s};
    comp[s] = id;
    while (!queue.empty()) {
      const auto at = queue.front();
      queue.pop_front();
      members.push_back(at);
      for (auto next : g.adjacency(at))
        if (comp[next] < 0) {
          comp[next] = id;
          queue.push_back(next);
        }
    }
    std::sort(members.begin(), members.end());
    VertexSet labels;
    for (auto i : members) labels.push_back(g.vertices()[i]);
    out.push_back(std::move(labels));
  }
  return out;
}

bool is_tree(const Graph& g) {
  if (g.vertex_count() == 0) return false;
  return g.edge_count() + 1 == g.vertex_count() && components(g).size() == 1;
}

std::size_t degree(const Graph& g, const Label& v) { return g.degree(v); }

std::optional<std::size_t> distance(const Graph& g, const Label& x, const Label& y) {
  const auto ix = g.index_of(x);
  const auto iy = g.index_of(y);
  std::vector<std::size_t> dist(g.vertex_count(), SIZE_MAX);
  std::deque<std::size_t> queue{ix};
  dist[ix] = 0;
  while (!queue.empty()) {
    const auto at = queue.front();
    queue.pop_front();
    if (at == iy) return dist[at];
    for (auto next : g.adjacency(at))
      if (dist[next] == SIZE_MAX) {
        dist[next] = dist[at] + 1;
        queue.push_back(next);
      }
  }
  return std::nullopt;
}

}  // namespace pathweights
