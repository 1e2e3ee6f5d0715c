#include "stirling/cell.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace stirling {

ColorVector::ColorVector(std::vector<int> sizes) : sizes_(std::move(sizes)) {
  if (sizes_.empty()) throw std::invalid_argument("color vector needs at least one color");
  for (int s : sizes_) {
    if (s < 1) throw std::invalid_argument("color vector entries must be positive");
  }
}

long long ColorVector::total() const noexcept {
  return std::accumulate(sizes_.begin(), sizes_.end(), 0LL);
}

ColorVector parse_color_vector(std::string_view text) {
  std::vector<int> sizes;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    auto token = text.substr(pos, end - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size() || value < 1) {
      throw std::invalid_argument("malformed color vector \"" + std::string(text) +
                                  "\": expected comma-separated positive integers");
    }
    sizes.push_back(value);
    pos = end + 1;
  }
  return ColorVector(std::move(sizes));
}

std::string to_string(const ColorVector& colors) {
  std::string out;
  for (std::size_t k = 0; k < colors.sizes().size(); ++k) {
    if (k) out += ',';
    out += std::to_string(colors.sizes()[k]);
  }
  return out;
}

ColorVector two_one_vector(int n) {
  if (n < 1) throw std::invalid_argument("two_one_vector needs n >= 1");
  std::vector<int> sizes(static_cast<std::size_t>(n), 1);
  sizes[0] = 2;
  return ColorVector(std::move(sizes));
}

ColorVector uniform_vector(int n, int r) {
  if (n < 2 || r < 1) throw std::invalid_argument("uniform_vector needs n >= 2 and r >= 1");
  return ColorVector(std::vector<int>(static_cast<std::size_t>(r), n - 1));
}

void ComplexSpec::check_supported() const {
  if (graph.vertex_count() > 64) {
    throw std::invalid_argument("complexes are supported on graphs with at most 64 vertices");
  }
  if (colors.color_count() > 64) {
    throw std::invalid_argument("at most 64 colors are supported");
  }
}

bool Element::intersects(const Element& other) const {
  if (is_vertex() && other.is_vertex()) return a == other.a;
  if (is_vertex()) return other.as_edge().touches(a);
  if (other.is_vertex()) return as_edge().touches(other.a);
  return as_edge().touches(other.a) || as_edge().touches(other.b);
}

int Cell::dimension() const {
  int dim = 0;
  for (const auto& part : parts)
    dim += static_cast<int>(std::count_if(part.begin(), part.end(),
                                          [](const Element& e) { return e.is_edge(); }));
  return dim;
}

void Cell::normalize() {
  for (auto& part : parts) std::sort(part.begin(), part.end());
}

Cell make_zero_cell(const std::vector<std::vector<Vertex>>& vertices_per_color) {
  Cell c;
  for (const auto& vs : vertices_per_color) {
    Part part;
    for (Vertex v : vs) part.push_back(Element::vertex(v));
    c.parts.push_back(std::move(part));
  }
  c.normalize();
  return c;
}

bool FVector::same_counts(const FVector& other) const {
  const std::size_t len = std::max(counts.size(), other.counts.size());
  for (std::size_t k = 0; k < len; ++k)
    if (at(k) != other.at(k)) return false;
  return true;
}

std::string to_string(const FVector& f) {
  std::string out = "(";
  for (std::size_t k = 0; k < f.counts.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(f.counts[k]);
  }
  return out + ")";
}

std::string to_string(const Element& e) {
  if (e.is_vertex()) return std::to_string(e.a);
  return "(" + std::to_string(e.a) + "," + std::to_string(e.b) + ")";
}

std::string to_string(const Cell& c) {
  std::string out;
  for (std::size_t i = 0; i < c.parts.size(); ++i) {
    if (i) out += '|';
    out += '{';
    for (std::size_t k = 0; k < c.parts[i].size(); ++k) {
      if (k) out += ',';
      out += to_string(c.parts[i][k]);
    }
    out += '}';
  }
  return out;
}

namespace {

class CellParser {
 public:
  explicit CellParser(std::string_view text) : text_(text) {}

  Cell parse() {
    Cell c;
    skip_space();
    c.parts.push_back(parse_part());
    skip_space();
    while (peek() == '|') {
      ++pos_;
      skip_space();
      c.parts.push_back(parse_part());
      skip_space();
    }
    if (pos_ != text_.size()) fail("unexpected trailing input");
    for (const auto& part : c.parts) {
      for (std::size_t k = 1; k < part.size(); ++k)
        if (part[k] == part[k - 1]) fail("repeated element in a part");
    }
    return c;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(0, "bad cell text \"" + std::string(text_) + "\" at offset " +
                            std::to_string(pos_) + ": " + what);
  }
  void expect(char ch) {
    skip_space();
    if (peek() != ch) fail(std::string("expected '") + ch + "'");
    ++pos_;
  }
  Vertex parse_int() {
    skip_space();
    int value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc{} || value < 0) fail("expected a vertex index");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }
  Element parse_element() {
    skip_space();
    if (peek() == '(') {
      ++pos_;
      Vertex u = parse_int();
      expect(',');
      Vertex v = parse_int();
      expect(')');
      if (u == v) fail("edge with equal endpoints");
      return Element::edge(u, v);
    }
    return Element::vertex(parse_int());
  }
  Part parse_part() {
    expect('{');
    Part part;
    skip_space();
    if (peek() != '}') {
      part.push_back(parse_element());
      skip_space();
      while (peek() == ',') {
        ++pos_;
        part.push_back(parse_element());
        skip_space();
      }
    }
    expect('}');
    std::sort(part.begin(), part.end());
    return part;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Cell parse_cell(std::string_view text) { return CellParser(text).parse(); }

std::set<Color> occupancy(const Cell& c, const Element& sigma) {
  std::set<Color> out;
  for (std::size_t i = 0; i < c.parts.size(); ++i) {
    if (std::binary_search(c.parts[i].begin(), c.parts[i].end(), sigma))
      out.insert(static_cast<Color>(i));
  }
  return out;
}

bool is_available(const Cell& c, Vertex v) { return occupancy(c, Element::vertex(v)).size() >= 2; }

bool is_nonempty(const ComplexSpec& spec) {
  const long long n = spec.graph.vertex_count();
  const auto& sizes = spec.colors.sizes();
  return spec.colors.total() >= n &&
         std::all_of(sizes.begin(), sizes.end(), [n](int l) { return l <= n; });
}

bool is_nontrivial(const ComplexSpec& spec) {
  const long long n = spec.graph.vertex_count();
  const auto& sizes = spec.colors.sizes();
  return spec.colors.total() > n &&
         std::all_of(sizes.begin(), sizes.end(), [n](int l) { return l < n; });
}

long long max_dimension(const ComplexSpec& spec) {
  return spec.colors.total() - spec.graph.vertex_count();
}

bool is_valid_cell(const ComplexSpec& spec, const Cell& candidate) {
  const auto& g = spec.graph;
  if (candidate.color_count() != spec.colors.color_count()) return false;
  std::vector<bool> covered(static_cast<std::size_t>(g.vertex_count()), false);
  for (int i = 0; i < candidate.color_count(); ++i) {
    const Part& part = candidate.parts[static_cast<std::size_t>(i)];
    if (static_cast<int>(part.size()) != spec.colors.size(i)) return false;
    for (const auto& e : part) {
      if (e.is_vertex()) {
        if (!g.contains(e.a)) return false;
        covered[e.a] = true;
      } else if (!g.has_edge(e.a, e.b)) {
        return false;
      }
    }
    for (std::size_t p = 0; p < part.size(); ++p)
      for (std::size_t q = p + 1; q < part.size(); ++q)
        if (part[p].intersects(part[q])) return false;
  }
  if (spec.require_cover)
    return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
  return true;
}

int d_v(const Cell& c, const Cell& c2, Vertex v) {
  if (!c.is_zero_cell() || !c2.is_zero_cell()) {
    throw std::invalid_argument("d_v is defined for 0-cells only");
  }
  if (c.color_count() != c2.color_count()) {
    throw std::invalid_argument("d_v needs cells with the same number of colors");
  }
  const auto x = Element::vertex(v);
  return static_cast<int>(occupancy(c, x).size()) - static_cast<int>(occupancy(c2, x).size());
}

}  // namespace stirling
