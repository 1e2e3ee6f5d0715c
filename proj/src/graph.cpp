#include "stirling/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <limits>
#include <sstream>

namespace stirling {

SimpleGraph::SimpleGraph(int vertex_count, std::vector<Edge> edges) : n_(vertex_count) {
  if (vertex_count < 0) throw GraphError("negative vertex count");
  for (auto& e : edges) {
    if (e.u == e.v) throw GraphError("loop at vertex " + std::to_string(e.u));
    if (!contains(e.u) || !contains(e.v)) {
      throw GraphError("edge endpoint out of range: " + std::to_string(e.u) + " " +
                       std::to_string(e.v));
    }
    e = Edge::canonical(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    throw GraphError("duplicate edge " + std::to_string(dup->u) + " " + std::to_string(dup->v));
  }
  edges_ = std::move(edges);
  adjacency_.assign(static_cast<std::size_t>(n_), {});
  for (const auto& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
}

bool SimpleGraph::has_edge(Vertex a, Vertex b) const { return edge_index(a, b).has_value(); }

std::optional<int> SimpleGraph::edge_index(Vertex a, Vertex b) const {
  if (a == b || !contains(a) || !contains(b)) return std::nullopt;
  const Edge key = Edge::canonical(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<int>(it - edges_.begin());
}

bool VertexPath::contains(Vertex v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

bool is_walk(const SimpleGraph& g, const VertexPath& path) {
  if (path.vertices.empty()) return false;
  for (std::size_t k = 0; k < path.size(); ++k) {
    if (!g.contains(path.vertices[k])) return false;
    if (k > 0 && !g.has_edge(path.vertices[k - 1], path.vertices[k])) return false;
  }
  return true;
}

bool is_simple_path(const SimpleGraph& g, const VertexPath& path) {
  if (!is_walk(g, path)) return false;
  std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count()), false);
  for (Vertex v : path.vertices) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t k = 0;
  while (k < line.size()) {
    while (k < line.size() && (line[k] == ' ' || line[k] == '\t' || line[k] == '\r')) ++k;
    std::size_t start = k;
    while (k < line.size() && line[k] != ' ' && line[k] != '\t' && line[k] != '\r') ++k;
    if (k > start) out.push_back(line.substr(start, k - start));
  }
  return out;
}

std::optional<long long> to_integer(std::string_view token) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

}  // namespace

SimpleGraph parse_edge_list(std::string_view text) {
  std::vector<std::pair<std::size_t, std::vector<std::string_view>>> lines;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    auto tokens = split_tokens(text.substr(pos, end - pos));
    if (!tokens.empty()) lines.emplace_back(line_no, std::move(tokens));
    pos = end + 1;
  }
  if (lines.empty()) throw ParseError(0, "empty input: expected header \"n m\"");

  auto read_pair = [](const auto& entry, const char* what) {
    const auto& [no, tokens] = entry;
    if (tokens.size() != 2) throw ParseError(no, std::string("expected two integers for ") + what);
    auto a = to_integer(tokens[0]);
    auto b = to_integer(tokens[1]);
    if (!a || !b) throw ParseError(no, std::string("malformed ") + what);
    return std::pair{*a, *b};
  };

  auto [n, m] = read_pair(lines.front(), "header");
  if (n < 0 || m < 0 || n > std::numeric_limits<int>::max()) {
    throw ParseError(lines.front().first, "header values out of range");
  }
  if (lines.size() - 1 != static_cast<std::size_t>(m)) {
    throw ParseError(lines.front().first, "header announces " + std::to_string(m) +
                                              " edges but " + std::to_string(lines.size() - 1) +
                                              " edge lines follow");
  }

  std::vector<Edge> edges;
  std::vector<std::pair<Edge, std::size_t>> seen;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const std::size_t no = lines[k].first;
    auto [u, v] = read_pair(lines[k], "edge");
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ParseError(no, "endpoint out of range (n = " + std::to_string(n) + ")");
    }
    if (u == v) throw ParseError(no, "loop at vertex " + std::to_string(u));
    Edge e = Edge::canonical(static_cast<Vertex>(u), static_cast<Vertex>(v));
    for (const auto& [prev, prev_line] : seen) {
      if (prev == e) {
        throw ParseError(no, "duplicate edge (first seen on line " + std::to_string(prev_line) +
                                 ")");
      }
    }
    seen.emplace_back(e, no);
    edges.push_back(e);
  }
  return SimpleGraph(static_cast<int>(n), std::move(edges));
}

std::string to_edge_list(const SimpleGraph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

SimpleGraph generate_named(GraphFamily family, int n) {
  if (n < 1) throw GraphError("graph families need n >= 1");
  std::vector<Edge> edges;
  switch (family) {
    case GraphFamily::Path:
      for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
      break;
    case GraphFamily::Star:
      for (int v = 1; v < n; ++v) edges.push_back({0, v});
      break;
    case GraphFamily::Cycle:
      if (n < 3) throw GraphError("cycle needs n >= 3");
      for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
      edges.push_back({0, n - 1});
      break;
    case GraphFamily::Complete:
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
      break;
  }
  return SimpleGraph(n, std::move(edges));
}

SimpleGraph parse_named_graph(std::string_view name) {
  if (name.size() < 2) throw GraphError("graph name must look like K5, P3, T4 or C4");
  GraphFamily family;
  switch (name.front()) {
    case 'P': family = GraphFamily::Path; break;
    case 'T': family = GraphFamily::Star; break;
    case 'C': family = GraphFamily::Cycle; break;
    case 'K': family = GraphFamily::Complete; break;
    default: throw GraphError("unknown graph family '" + std::string(1, name.front()) + "'");
  }
  auto n = to_integer(name.substr(1));
  if (!n || *n < 1 || *n > 64) throw GraphError("bad vertex count in graph name " + std::string(name));
  return generate_named(family, static_cast<int>(*n));
}

namespace {

// Distances to `target` over allowed vertices; -1 marks unreachable.
std::vector<int> distances_to(const SimpleGraph& g, Vertex target, const std::vector<bool>& allowed) {
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
  std::deque<Vertex> queue{target};
  dist[target] = 0;
  while (!queue.empty()) {
    Vertex a = queue.front();
    queue.pop_front();
    for (Vertex b : g.neighbors(a)) {
      if (dist[b] < 0 && allowed[b]) {
        dist[b] = dist[a] + 1;
        queue.push_back(b);
      }
    }
  }
  return dist;
}

}  // namespace

std::optional<VertexPath> shortest_path_within(const SimpleGraph& g, Vertex u, Vertex v,
                                               const std::vector<bool>& allowed) {
  if (!g.contains(u) || !g.contains(v)) throw GraphError("vertex out of range");
  if (!allowed.at(u) || !allowed.at(v)) return std::nullopt;
  const auto dist = distances_to(g, v, allowed);
  if (dist[u] < 0) return std::nullopt;
  // Greedy descent picking the smallest neighbor one step closer yields the
  // lexicographically smallest shortest path.
  VertexPath path{{u}};
  Vertex cur = u;
  while (cur != v) {
    for (Vertex b : g.neighbors(cur)) {
      if (dist[b] == dist[cur] - 1) {
        cur = b;
        break;
      }
    }
    path.vertices.push_back(cur);
  }
  return path;
}

VertexPath shortest_path(const SimpleGraph& g, Vertex u, Vertex v) {
  std::vector<bool> all(static_cast<std::size_t>(g.vertex_count()), true);
  auto path = shortest_path_within(g, u, v, all);
  if (!path) {
    throw NoPathError("no path between " + std::to_string(u) + " and " + std::to_string(v));
  }
  return *path;
}

bool is_connected(const SimpleGraph& g) {
  if (g.vertex_count() <= 1) return true;
  std::vector<bool> all(static_cast<std::size_t>(g.vertex_count()), true);
  const auto dist = distances_to(g, 0, all);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

}  // namespace stirling
