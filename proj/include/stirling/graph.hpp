#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace stirling {

using Vertex = int;

/// Undirected edge stored with `u < v`. Edges order by endpoint pair.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  static Edge canonical(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  bool touches(Vertex w) const { return u == w || v == w; }
  auto operator<=>(const Edge&) const = default;
};

/// Raised for malformed edge-list text. `line()` is 1-based; 0 means "no line".
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Raised when a graph violates simplicity or indexing constraints.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by shortest_path when the endpoints lie in different components.
class NoPathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Immutable simple graph on the dense vertex set 0..n-1.
///
/// Edges are canonicalized and kept sorted, so an edge's position in
/// `edges()` is also its canonical rank among the graph's edges.
class SimpleGraph {
 public:
  SimpleGraph() = default;

  /// Throws GraphError on loops, duplicates or out-of-range endpoints.
  SimpleGraph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// Neighbors of `v` in increasing order.
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adjacency_.at(v).size()); }
  bool has_edge(Vertex a, Vertex b) const;
  /// Rank of the edge {a,b} in `edges()`, if present.
  std::optional<int> edge_index(Vertex a, Vertex b) const;
  bool contains(Vertex v) const noexcept { return v >= 0 && v < n_; }

  bool operator==(const SimpleGraph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// Sequence of vertices where consecutive entries are adjacent.
struct VertexPath {
  std::vector<Vertex> vertices;

  std::size_t size() const noexcept { return vertices.size(); }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
  bool contains(Vertex v) const;
  bool operator==(const VertexPath&) const = default;
};

/// True when `path` is nonempty, in range and walks along edges of `g`.
bool is_walk(const SimpleGraph& g, const VertexPath& path);

/// True when `path` is a walk that never repeats a vertex.
bool is_simple_path(const SimpleGraph& g, const VertexPath& path);

enum class GraphFamily { Path, Star, Cycle, Complete };

/// Text format: header "n m" followed by m lines "u v".
SimpleGraph parse_edge_list(std::string_view text);
std::string to_edge_list(const SimpleGraph& g);

/// Path, star (center 0), cycle (n >= 3) or complete graph on n vertices.
SimpleGraph generate_named(GraphFamily family, int n);

/// Parses names like "K5", "P3", "T4", "C4".
SimpleGraph parse_named_graph(std::string_view name);

/// BFS shortest path from u to v; ties broken towards the lexicographically
/// smallest vertex sequence.
VertexPath shortest_path(const SimpleGraph& g, Vertex u, Vertex v);

/// Same as shortest_path but restricted to vertices where `allowed[w]` is
/// true (u and v must be allowed). Returns nullopt when no such path exists.
std::optional<VertexPath> shortest_path_within(const SimpleGraph& g, Vertex u, Vertex v,
                                               const std::vector<bool>& allowed);

bool is_connected(const SimpleGraph& g);

}  // namespace stirling
