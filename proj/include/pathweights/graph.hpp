#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "pathweights/error.hpp"
#include "pathweights/sym_matrix.hpp"

namespace pathweights {

/// Undirected edge; the constructor orders endpoints so that u < v.
struct Edge {
  Label u;
  Label v;

  Edge() = default;
  Edge(Label a, Label b);

  auto operator<=>(const Edge&) const = default;
};

/// Sequence of at least two distinct vertices. Whether consecutive vertices
/// are adjacent is a property of a host graph and is checked against one.
class Path {
 public:
  Path() = default;
  explicit Path(std::vector<Label> vertices);

  const std::vector<Label>& vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  const Label& front() const { return vertices_.front(); }
  const Label& back() const { return vertices_.back(); }
  bool contains(const Label& v) const;
  bool is_interior(const Label& v) const;

  /// Consecutive vertex pairs.
  std::vector<Edge> edges() const;

  /// Same path oriented so that the smaller endpoint label comes first.
  Path canonical() const;

  std::string to_string(std::string_view sep = " - ") const;

  auto operator<=>(const Path&) const = default;

 private:
  std::vector<Label> vertices_;
};

/// Labelled simple undirected graph without self-loops.
class Graph {
 public:
  Graph() = default;
  Graph(std::vector<Label> vertices, const std::vector<Edge>& edges);

  const std::vector<Label>& vertices() const noexcept { return labels_; }
  /// Edges sorted lexicographically.
  std::vector<Edge> edges() const;
  std::size_t vertex_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  bool has_vertex(const Label& v) const { return index_.contains(v); }
  bool has_edge(const Label& u, const Label& v) const;
  std::size_t index_of(const Label& v) const;

  /// Neighbours in ascending label order.
  std::vector<Label> neighbors(const Label& v) const;
  std::size_t degree(const Label& v) const;

  /// Throws InvalidPath unless every step of `p` is an edge of this graph.
  void validate(const Path& p) const;

  // Positional views used by the enumeration kernels.
  const std::vector<std::size_t>& adjacency(std::size_t i) const { return adj_[i]; }
  bool adjacent(std::size_t i, std::size_t j) const {
    return adj_matrix_[i * labels_.size() + j] != 0;
  }

 private:
  std::vector<Label> labels_;
  std::unordered_map<Label, std::size_t> index_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<char> adj_matrix_;
  std::size_t edge_count_ = 0;
};

inline constexpr std::size_t kDefaultPathCap = 1'000'000;

struct PathQuery {
  /// Only paths whose vertices all lie in this set (default: all vertices).
  std::optional<VertexSet> restrict_to;
  /// Maximum number of vertices on a path (default: |V|).
  std::optional<std::size_t> max_vertices;
  std::size_t cap = kDefaultPathCap;
};

Graph induced_subgraph(const Graph& g, const VertexSet& a);

/// All simple paths from x to y in lexicographic order of vertex sequence.
/// Throws PathExplosionError when more than `query.cap` paths exist.
std::vector<Path> enumerate_paths(const Graph& g, const Label& x, const Label& y,
                                  const PathQuery& query = {});

/// Edges joining two vertices of `p` that are not steps of `p`.
std::vector<Edge> chords(const Graph& g, const Path& p);
bool is_chordless(const Graph& g, const Path& p);

/// Connected components, each in vertex order, ordered by first vertex.
std::vector<VertexSet> components(const Graph& g);
bool is_tree(const Graph& g);
std::size_t degree(const Graph& g, const Label& v);

/// Breadth-first number of edges between x and y; nullopt when disconnected.
std::optional<std::size_t> distance(const Graph& g, const Label& x, const Label& y);

}  // namespace pathweights
