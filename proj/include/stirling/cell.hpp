#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "stirling/graph.hpp"

namespace stirling {

using Color = int;

/// Group sizes l_1..l_r; color i (0-based) has `sizes[i]` robots.
class ColorVector {
 public:
  ColorVector() = default;
  /// Throws std::invalid_argument when empty or when some size is < 1.
  explicit ColorVector(std::vector<int> sizes);

  int color_count() const noexcept { return static_cast<int>(sizes_.size()); }
  int size(Color i) const { return sizes_.at(static_cast<std::size_t>(i)); }
  const std::vector<int>& sizes() const noexcept { return sizes_; }
  long long total() const noexcept;

  bool operator==(const ColorVector&) const = default;

 private:
  std::vector<int> sizes_;
};

/// Parses "2,1,1,1".
ColorVector parse_color_vector(std::string_view text);
std::string to_string(const ColorVector& colors);

/// (2,1,...,1) with n entries.
ColorVector two_one_vector(int n);
/// (n-1,...,n-1) with r entries.
ColorVector uniform_vector(int n, int r);

/// The data that determines a complex. `require_cover = false` drops the
/// every-vertex-occupied condition and is used for the ordinary discrete
/// configuration spaces.
struct ComplexSpec {
  SimpleGraph graph;
  ColorVector colors;
  bool require_cover = true;

  /// Throws std::invalid_argument if the graph has more than 64 vertices.
  void check_supported() const;
};

/// A vertex or a closed edge of the ambient graph. Vertices order before
/// edges; edges order by endpoint pair.
struct Element {
  enum class Kind : std::uint8_t { Vertex = 0, Edge = 1 };

  Kind kind = Kind::Vertex;
  Vertex a = 0;
  Vertex b = 0;  // unused for vertices (kept 0)

  static Element vertex(Vertex v) { return {Kind::Vertex, v, 0}; }
  static Element edge(Vertex u, Vertex v) {
    auto e = Edge::canonical(u, v);
    return {Kind::Edge, e.u, e.v};
  }
  static Element edge(Edge e) { return edge(e.u, e.v); }

  bool is_vertex() const noexcept { return kind == Kind::Vertex; }
  bool is_edge() const noexcept { return kind == Kind::Edge; }
  Edge as_edge() const { return {a, b}; }
  /// True when the two elements share a point as closed subsets of the graph.
  bool intersects(const Element& other) const;

  auto operator<=>(const Element&) const = default;
};

using Part = std::vector<Element>;

/// One set of elements per color, each set sorted. Cells compare
/// lexicographically part by part.
struct Cell {
  std::vector<Part> parts;

  int color_count() const noexcept { return static_cast<int>(parts.size()); }
  int dimension() const;
  bool is_zero_cell() const { return dimension() == 0; }
  /// Sorts every part into canonical order.
  void normalize();

  auto operator<=>(const Cell&) const = default;
};

/// Builds a 0-cell from vertex lists, one per color.
Cell make_zero_cell(const std::vector<std::vector<Vertex>>& vertices_per_color);

/// Cell counts by dimension.
struct FVector {
  std::vector<std::int64_t> counts;

  std::int64_t at(std::size_t dim) const { return dim < counts.size() ? counts[dim] : 0; }
  /// Equality up to trailing zeros.
  bool same_counts(const FVector& other) const;
  bool operator==(const FVector&) const = default;
};

std::string to_string(const FVector& f);

/// Text syntax: parts separated by '|', each "{...}" with comma-separated
/// vertices "3" and edges "(1,2)".
std::string to_string(const Element& e);
std::string to_string(const Cell& c);
/// Throws ParseError (line 0) on malformed text.
Cell parse_cell(std::string_view text);

/// Colors whose part contains `sigma`.
std::set<Color> occupancy(const Cell& c, const Element& sigma);
/// At least two colors sit on vertex `v`.
bool is_available(const Cell& c, Vertex v);

bool is_nonempty(const ComplexSpec& spec);
bool is_nontrivial(const ComplexSpec& spec);
/// Sum of group sizes minus n.
long long max_dimension(const ComplexSpec& spec);
bool is_valid_cell(const ComplexSpec& spec, const Cell& candidate);

/// |c(v)| - |c2(v)| for two 0-cells. Throws std::invalid_argument otherwise.
int d_v(const Cell& c, const Cell& c2, Vertex v);

}  // namespace stirling
