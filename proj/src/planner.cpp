#include "stirling/planner.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdint>
#include <deque>
#include <span>
#include <sstream>
#include <unordered_map>

namespace stirling {

namespace {

using Mask = std::uint64_t;
using Path = std::span<const Vertex>;

bool holds_color(Mask m, Color i) { return (m >> i) & 1u; }

[[noreturn]] void precondition(const std::string& what) {
  throw PlannerError(PlannerError::Kind::Precondition, what);
}

[[noreturn]] void hypothesis(const std::string& what) {
  throw PlannerError(PlannerError::Kind::HypothesisNotMet, what);
}

bool is_valid_zero_cell(const ComplexSpec& spec, const Cell& c) {
  return c.is_zero_cell() && is_valid_cell(spec, c);
}

std::vector<Mask> to_masks(const ComplexSpec& spec, const Cell& c) {
  std::vector<Mask> occ(static_cast<std::size_t>(spec.graph.vertex_count()), 0);
  for (std::size_t i = 0; i < c.parts.size(); ++i)
    for (const auto& e : c.parts[i]) occ[e.a] |= Mask{1} << i;
  return occ;
}

Cell to_cell(int colors, const std::vector<Mask>& occ) {
  Cell c;
  c.parts.resize(static_cast<std::size_t>(colors));
  for (Vertex v = 0; v < static_cast<Vertex>(occ.size()); ++v)
    for (Color i = 0; i < colors; ++i)
      if (holds_color(occ[v], i)) c.parts[i].push_back(Element::vertex(v));
  return c;
}

Color lowest_color(Mask m) { return std::countr_zero(m); }

/// Occupancy state plus the moves that produced it. Every move is checked;
/// a rejected move is a bug in the planner, not in the caller's input.
class Recorder {
 public:
  Recorder(const ComplexSpec& spec, const Cell& start)
      : spec_(spec), colors_(spec.colors.color_count()), occ_(to_masks(spec, start)) {}

  const ComplexSpec& spec() const { return spec_; }
  const SimpleGraph& graph() const { return spec_.graph; }
  int colors() const { return colors_; }
  Mask at(Vertex v) const { return occ_[v]; }
  const std::vector<Mask>& occupancy() const { return occ_; }
  bool holds(Vertex v, Color i) const { return holds_color(occ_[v], i); }
  int count(Vertex v) const { return std::popcount(occ_[v]); }
  bool available(Vertex v) const { return count(v) >= 2; }

  bool allows(Color i, Vertex u, Vertex v) const {
    return graph().has_edge(u, v) && holds(u, i) && !holds(v, i) && (!spec_.require_cover || available(u));
  }

  void move(Color i, Vertex u, Vertex v) {
    if (!allows(i, u, v)) {
      throw std::logic_error("planner produced an invalid move " + std::to_string(i) + " " +
                             std::to_string(u) + " " + std::to_string(v));
    }
    occ_[u] &= ~(Mask{1} << i);
    occ_[v] |= Mask{1} << i;
    moves_.push_back({i, u, v});
  }

  std::size_t mark() const { return moves_.size(); }

  /// Replays moves [begin, end) backwards, each one flipped.
  void undo(std::size_t begin, std::size_t end) {
    const std::vector<Move> segment(moves_.begin() + static_cast<std::ptrdiff_t>(begin),
                                    moves_.begin() + static_cast<std::ptrdiff_t>(end));
    for (auto it = segment.rbegin(); it != segment.rend(); ++it) move(it->color, it->to, it->from);
  }

  const std::vector<Move>& moves() const { return moves_; }
  Cell cell() const { return to_cell(colors_, occ_); }

 private:
  const ComplexSpec& spec_;
  int colors_;
  std::vector<Mask> occ_;
  std::vector<Move> moves_;
};

MovePlan finish(const Cell& start, const Recorder& rec) {
  MovePlan p;
  p.start = start;
  p.start.normalize();
  p.moves = rec.moves();
  p.end = rec.cell();
  return p;
}

// z = path.front() is available and holds k; x = path.back() lacks k.
void run_leapfrog(Recorder& rec, Path path, Color k) {
  const std::size_t s = path.size();
  std::size_t t = s - 2;
  while (!rec.holds(path[t], k)) --t;
  const Vertex relay = path[t];
  auto walk = [&] {
    for (std::size_t q = t; q + 1 < s; ++q) rec.move(k, path[q], path[q + 1]);
  };
  if (rec.available(relay)) {
    walk();
    if (t > 0) run_leapfrog(rec, path.first(t + 1), k);
    return;
  }
  const Color i = lowest_color(rec.at(path[0]) & ~(Mask{1} << k));
  run_leapfrog(rec, path.first(t + 1), i);
  walk();
}

// z = path.front() available with i; c(w) = {k} for w = path.back(); no
// other path vertex holds k.
void run_swap_third(Recorder& rec, Path path, Color i, Color k) {
  const Vertex z = path[0];
  const Vertex next = path[1];
  if (path.size() == 2) {
    rec.move(i, z, next);
    rec.move(k, next, z);
    return;
  }
  const Path rest = path.subspan(1);
  if (!rec.holds(next, i)) {
    rec.move(i, z, next);
    run_swap_third(rec, rest, i, k);
    rec.move(k, next, z);
  } else if (!rec.available(next)) {
    const Color j = lowest_color(rec.at(z) & ~(Mask{1} << i));
    rec.move(j, z, next);
    run_swap_third(rec, rest, i, k);
    rec.move(k, next, z);
    rec.move(i, z, next);
    rec.move(j, next, z);
  } else {
    run_swap_third(rec, rest, i, k);
    rec.move(k, next, z);
    rec.move(i, z, next);
  }
}

struct SwapContext {
  int depth_limit = 0;
};

void run_swap_colors(Recorder& rec, Path path, Color i, Color j, int depth, const SwapContext& ctx);

struct Donor {
  Vertex z;
  Color k;
};

std::optional<Donor> third_color_donor(const Recorder& rec, Color i, Color j) {
  for (Color k = 0; k < rec.colors(); ++k) {
    if (k == i || k == j) continue;
    for (Vertex z = 0; z < rec.graph().vertex_count(); ++z)
      if (rec.available(z) && rec.holds(z, k)) return Donor{z, k};
  }
  return std::nullopt;
}

// x and y adjacent and both unavailable, with c(x) = {i}, c(y) = {j}.
void borrow_and_swap(Recorder& rec, Vertex x, Vertex y, Color i, Color j, Donor donor) {
  auto route = shortest_path(rec.graph(), donor.z, x).vertices;
  Vertex target = x;
  if (auto hit = std::find(route.begin(), route.end(), y); hit != route.end()) {
    route.erase(hit + 1, route.end());
    target = y;
  }
  const std::size_t begin = rec.mark();
  run_leapfrog(rec, route, donor.k);
  const std::size_t end = rec.mark();
  if (target == x) {
    rec.move(i, x, y);
    rec.move(j, y, x);
  } else {
    rec.move(j, y, x);
    rec.move(i, x, y);
  }
  rec.undo(begin, end);
}

// Nearest vertex to z (within `allowed`) holding a color outside `pair`.
std::optional<VertexPath> path_to_third_color(const Recorder& rec, Vertex z, Mask pair,
                                              const std::vector<bool>& allowed) {
  const auto& g = rec.graph();
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
  std::deque<Vertex> queue{z};
  dist[z] = 0;
  std::optional<Vertex> best;
  while (!queue.empty()) {
    const Vertex a = queue.front();
    queue.pop_front();
    if (best && dist[a] > dist[*best]) break;
    if (a != z && (rec.at(a) & ~pair) != 0 && (!best || a < *best)) best = a;
    for (Vertex b : g.neighbors(a)) {
      if (dist[b] < 0 && allowed[b]) {
        dist[b] = dist[a] + 1;
        queue.push_back(b);
      }
    }
  }
  if (!best) return std::nullopt;
  return shortest_path_within(g, z, *best, allowed);
}

void base_swap(Recorder& rec, Vertex x, Vertex y, Color i, Color j, int depth, const SwapContext& ctx) {
  if (rec.available(x)) {
    rec.move(i, x, y);
    rec.move(j, y, x);
    return;
  }
  if (rec.available(y)) {
    rec.move(j, y, x);
    rec.move(i, x, y);
    return;
  }
  if (auto donor = third_color_donor(rec, i, j)) {
    borrow_and_swap(rec, x, y, i, j, *donor);
    return;
  }
  // Every available vertex holds exactly {i, j}: trade one of them for a
  // third color first.
  const auto& g = rec.graph();
  Vertex z = 0;
  while (z < g.vertex_count() && !rec.available(z)) ++z;
  if (z == g.vertex_count()) throw std::logic_error("no available vertex in a non-trivial complex");
  const Mask pair = (Mask{1} << i) | (Mask{1} << j);

  std::vector<bool> avoid_xy(static_cast<std::size_t>(g.vertex_count()), true);
  avoid_xy[x] = avoid_xy[y] = false;
  if (auto route = path_to_third_color(rec, z, pair, avoid_xy)) {
    const Vertex w = route->back();
    const Color k = lowest_color(rec.at(w));
    const std::size_t begin = rec.mark();
    run_swap_third(rec, route->vertices, i, k);
    const std::size_t end = rec.mark();
    borrow_and_swap(rec, x, y, i, j, Donor{z, k});
    rec.undo(begin, end);
    return;
  }
  std::vector<bool> everywhere(static_cast<std::size_t>(g.vertex_count()), true);
  auto route = path_to_third_color(rec, z, pair, everywhere);
  if (!route) throw std::logic_error("no third color present");
  const Vertex w = route->back();
  const Color k = lowest_color(rec.at(w));
  run_swap_third(rec, route->vertices, i, k);
  borrow_and_swap(rec, x, y, i, j, Donor{z, k});
  // The trade path runs through x or y, whose colors have changed, so the
  // recorded moves cannot simply be replayed backwards.
  run_swap_colors(rec, shortest_path(g, z, w).vertices, k, i, depth + 1, ctx);
}

void run_swap_colors(Recorder& rec, Path path, Color i, Color j, int depth, const SwapContext& ctx) {
  if (depth > ctx.depth_limit) throw std::logic_error("swap recursion exceeded its depth limit");
  const Vertex x = path.front();
  if (path.size() == 2) {
    base_swap(rec, x, path[1], i, j, depth, ctx);
    return;
  }
  const Vertex next = path[1];
  const Path rest = path.subspan(1);
  const bool has_i = rec.holds(next, i);
  const bool has_j = rec.holds(next, j);
  if (has_i && !has_j) {
    run_swap_colors(rec, rest, i, j, depth, ctx);
    base_swap(rec, x, next, i, j, depth, ctx);
  } else if (has_j && !has_i) {
    base_swap(rec, x, next, i, j, depth, ctx);
    run_swap_colors(rec, rest, i, j, depth, ctx);
  } else if (has_i && has_j) {
    rec.move(j, next, x);
    run_swap_colors(rec, rest, i, j, depth, ctx);
    rec.move(i, x, next);
  } else if (!rec.available(x)) {
    const Color k = lowest_color(rec.at(next));
    base_swap(rec, x, next, i, k, depth, ctx);
    run_swap_colors(rec, rest, i, j, depth, ctx);
    base_swap(rec, x, next, k, j, depth, ctx);
  } else {
    rec.move(i, x, next);
    run_swap_colors(rec, rest, i, j, depth, ctx);
    rec.move(j, next, x);
  }
}

SwapContext swap_context(const ComplexSpec& spec) { return {4 * spec.graph.vertex_count() + 32}; }

void swap_on_shortest_path(Recorder& rec, Vertex x, Vertex y, Color i, Color j) {
  run_swap_colors(rec, shortest_path(rec.graph(), x, y).vertices, i, j, 0, swap_context(rec.spec()));
}

std::size_t mismatch(const std::vector<Mask>& cur, const std::vector<Mask>& target) {
  std::size_t total = 0;
  for (std::size_t v = 0; v < cur.size(); ++v) total += std::popcount(cur[v] & ~target[v]);
  return total;
}

void run_same_type(Recorder& rec, const std::vector<Mask>& target) {
  const auto n = static_cast<Vertex>(target.size());
  for (std::size_t left = mismatch(rec.occupancy(), target); left > 0;) {
    auto extra = [&](Vertex v) { return rec.at(v) & ~target[v]; };
    auto missing = [&](Vertex v) { return target[v] & ~rec.at(v); };

    Vertex start = 0;
    while (extra(start) == 0) ++start;
    std::vector<Vertex> chain{start};
    std::vector<Color> carried{lowest_color(extra(start))};
    std::vector<int> position(static_cast<std::size_t>(n), -1);
    position[start] = 0;
    std::size_t first = 0;
    while (true) {
      Vertex next = 0;
      while (!holds_color(missing(next), carried.back())) ++next;
      if (position[next] >= 0) {
        first = static_cast<std::size_t>(position[next]);
        break;
      }
      position[next] = static_cast<int>(chain.size());
      chain.push_back(next);
      carried.push_back(lowest_color(extra(next)));
    }
    const std::vector<Vertex> u(chain.begin() + static_cast<std::ptrdiff_t>(first), chain.end());
    const std::vector<Color> a(carried.begin() + static_cast<std::ptrdiff_t>(first), carried.end());
    const std::size_t len = u.size();
    auto cyc = [&](std::size_t s) { return u[s % len]; };

    std::size_t t = 1;
    while (!rec.holds(cyc(t), a[0])) ++t;
    for (std::size_t s = t - 1; s >= 1; --s) swap_on_shortest_path(rec, cyc(s + 1), cyc(s), a[0], a[s]);

    const std::size_t now = mismatch(rec.occupancy(), target);
    if (now >= left) throw std::logic_error("same-type resolution made no progress");
    left = now;
  }
}

void check_zero_cell(const ComplexSpec& spec, const Cell& c, const char* name) {
  if (!is_valid_zero_cell(spec, c)) precondition(std::string(name) + " is not a valid 0-cell of the complex");
}

void check_theorem_hypotheses(const ComplexSpec& spec) {
  if (!spec.require_cover) hypothesis("constructive planning needs the coverage condition");
  if (spec.colors.color_count() < 3) hypothesis("constructive planning needs at least three colors; use bfs mode");
  if (!is_nontrivial(spec)) hypothesis("constructive planning needs a non-trivial color vector");
  if (!is_connected(spec.graph)) hypothesis("constructive planning needs a connected graph");
}

void check_color(const ComplexSpec& spec, Color i, const char* name) {
  if (i < 0 || i >= spec.colors.color_count()) precondition(std::string("color ") + name + " out of range");
}

void check_path(const ComplexSpec& spec, const VertexPath& path, Vertex from, Vertex to) {
  if (path.size() < 2 || !is_simple_path(spec.graph, path)) precondition("path must be a simple path with at least two vertices");
  if (path.front() != from || path.back() != to) precondition("path endpoints do not match");
}

}  // namespace

bool is_valid_move(const ComplexSpec& spec, const Cell& c, const Move& mv) {
  const auto& g = spec.graph;
  if (mv.color < 0 || mv.color >= c.color_count() || !g.contains(mv.from) || !g.contains(mv.to)) return false;
  if (!g.has_edge(mv.from, mv.to)) return false;
  const Part& part = c.parts[mv.color];
  if (!std::binary_search(part.begin(), part.end(), Element::vertex(mv.from))) return false;
  if (std::binary_search(part.begin(), part.end(), Element::vertex(mv.to))) return false;
  return !spec.require_cover || is_available(c, mv.from);
}

Cell apply_move(const ComplexSpec& spec, const Cell& c, const Move& mv) {
  if (!is_valid_move(spec, c, mv)) precondition("invalid move");
  Cell out = c;
  Part& part = out.parts[mv.color];
  *std::find(part.begin(), part.end(), Element::vertex(mv.from)) = Element::vertex(mv.to);
  std::sort(part.begin(), part.end());
  return out;
}

Cell snap(const ComplexSpec&, const Cell& c) {
  Cell out = c;
  for (auto& part : out.parts)
    for (auto& e : part)
      if (e.is_edge()) e = Element::vertex(e.a);
  out.normalize();
  return out;
}

MovePlan reversed(const MovePlan& p) {
  MovePlan out{p.end, {}, p.start};
  for (auto it = p.moves.rbegin(); it != p.moves.rend(); ++it) out.moves.push_back(it->flipped());
  return out;
}

MovePlan leapfrog(const ComplexSpec& spec, const Cell& c, Vertex z, const VertexPath& path, Color k) {
  check_zero_cell(spec, c, "start cell");
  check_color(spec, k, "k");
  if (path.vertices.empty()) precondition("empty path");
  check_path(spec, path, z, path.back());
  const Vertex x = path.back();
  Recorder rec(spec, c);
  if (!rec.available(z)) precondition("z must be available");
  if (!rec.holds(z, k)) precondition("z must hold color k");
  if (rec.holds(x, k)) precondition("x already holds color k");
  run_leapfrog(rec, path.vertices, k);
  return finish(c, rec);
}

MovePlan swap_third(const ComplexSpec& spec, const Cell& c, Vertex z, Vertex w, const VertexPath& path,
                    Color i, Color k) {
  check_zero_cell(spec, c, "start cell");
  check_color(spec, i, "i");
  check_color(spec, k, "k");
  check_path(spec, path, z, w);
  if (i == k) precondition("i and k must differ");
  Recorder rec(spec, c);
  if (rec.at(w) != (Mask{1} << k)) precondition("w must hold exactly color k");
  if (!rec.available(z)) precondition("z must be available");
  if (!rec.holds(z, i)) precondition("z must hold color i");
  for (std::size_t q = 0; q + 1 < path.size(); ++q)
    if (rec.holds(path.vertices[q], k)) precondition("color k appears on the path before w");
  run_swap_third(rec, path.vertices, i, k);
  return finish(c, rec);
}

MovePlan swap_colors(const ComplexSpec& spec, const Cell& c, Vertex x, Vertex y, Color i, Color j) {
  check_theorem_hypotheses(spec);
  check_zero_cell(spec, c, "start cell");
  check_color(spec, i, "i");
  check_color(spec, j, "j");
  if (!spec.graph.contains(x) || !spec.graph.contains(y) || x == y) precondition("x and y must be distinct vertices");
  if (i == j) precondition("i and j must differ");
  Recorder rec(spec, c);
  if (!rec.holds(x, i) || rec.holds(x, j)) precondition("x must hold i and not j");
  if (!rec.holds(y, j) || rec.holds(y, i)) precondition("y must hold j and not i");
  swap_on_shortest_path(rec, x, y, i, j);
  return finish(c, rec);
}

MovePlan same_type_plan(const ComplexSpec& spec, const Cell& c, const Cell& c2) {
  check_theorem_hypotheses(spec);
  check_zero_cell(spec, c, "start cell");
  check_zero_cell(spec, c2, "end cell");
  for (Vertex v = 0; v < spec.graph.vertex_count(); ++v) {
    if (d_v(c, c2, v) != 0) {
      throw PlannerError(PlannerError::Kind::TypeMismatch,
                         "cells differ in robot count at vertex " + std::to_string(v));
    }
  }
  Recorder rec(spec, c);
  run_same_type(rec, to_masks(spec, c2));
  return finish(c, rec);
}

MovePlan plan(const ComplexSpec& spec, const Cell& c, const Cell& c2) {
  check_theorem_hypotheses(spec);
  check_zero_cell(spec, c, "start cell");
  check_zero_cell(spec, c2, "end cell");
  const auto& g = spec.graph;
  Recorder front(spec, c);
  Recorder back(spec, c2);
  auto d = [&](Vertex v) { return front.count(v) - back.count(v); };
  while (true) {
    Vertex x = 0;
    while (x < g.vertex_count() && d(x) <= 0) ++x;
    if (x == g.vertex_count()) break;
    Vertex y = 0;
    while (d(y) >= 0) ++y;
    if (front.count(x) > front.count(y)) {
      const Color k = lowest_color(front.at(x) & ~front.at(y));
      run_leapfrog(front, shortest_path(g, x, y).vertices, k);
    } else {
      const Color k = lowest_color(back.at(y) & ~back.at(x));
      run_leapfrog(back, shortest_path(g, y, x).vertices, k);
    }
  }
  Recorder middle(spec, front.cell());
  run_same_type(middle, back.occupancy());

  MovePlan out = finish(c, front);
  out.moves.insert(out.moves.end(), middle.moves().begin(), middle.moves().end());
  const auto& tail = back.moves();
  for (auto it = tail.rbegin(); it != tail.rend(); ++it) out.moves.push_back(it->flipped());
  out.end = c2;
  out.end.normalize();
  return out;
}

namespace {

struct MaskVectorHash {
  std::size_t operator()(const std::vector<Mask>& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (Mask m : v) h = (h ^ std::hash<Mask>{}(m)) * 0x100000001b3ull;
    return h;
  }
};

}  // namespace

std::optional<MovePlan> plan_bfs(const ComplexSpec& spec, const Cell& c, const Cell& c2) {
  check_zero_cell(spec, c, "start cell");
  check_zero_cell(spec, c2, "end cell");
  const auto& g = spec.graph;
  const int r = spec.colors.color_count();
  const auto source = to_masks(spec, c);
  const auto goal = to_masks(spec, c2);

  struct Visit {
    std::size_t parent;
    Move via;
  };
  std::vector<std::vector<Mask>> states{source};
  std::vector<Visit> visits{{0, {}}};
  std::unordered_map<std::vector<Mask>, std::size_t, MaskVectorHash> seen{{source, 0}};
  std::optional<std::size_t> found;
  if (source == goal) found = 0;
  for (std::size_t head = 0; head < states.size() && !found; ++head) {
    for (Color i = 0; i < r && !found; ++i) {
      for (Vertex u = 0; u < g.vertex_count() && !found; ++u) {
        const auto& occ = states[head];
        if (!holds_color(occ[u], i)) continue;
        if (spec.require_cover && std::popcount(occ[u]) < 2) continue;
        for (Vertex v : g.neighbors(u)) {
          if (holds_color(states[head][v], i)) continue;
          auto next = states[head];
          next[u] &= ~(Mask{1} << i);
          next[v] |= Mask{1} << i;
          auto [it, inserted] = seen.try_emplace(next, states.size());
          if (!inserted) continue;
          states.push_back(std::move(next));
          visits.push_back({head, {i, u, v}});
          if (states.back() == goal) {
            found = states.size() - 1;
            break;
          }
        }
      }
    }
  }
  if (!found) return std::nullopt;
  MovePlan p;
  p.start = c;
  p.start.normalize();
  p.end = c2;
  p.end.normalize();
  for (std::size_t at = *found; at != 0; at = visits[at].parent) p.moves.push_back(visits[at].via);
  std::reverse(p.moves.begin(), p.moves.end());
  return p;
}

VerifyResult verify_plan(const ComplexSpec& spec, const MovePlan& p) {
  Cell cur = p.start;
  cur.normalize();
  if (!is_valid_zero_cell(spec, cur)) return {false, 0, "start is not a valid 0-cell"};
  for (std::size_t k = 0; k < p.moves.size(); ++k) {
    if (!is_valid_move(spec, cur, p.moves[k])) return {false, k, "invalid move"};
    cur = apply_move(spec, cur, p.moves[k]);
  }
  Cell end = p.end;
  end.normalize();
  if (cur != end) return {false, p.moves.size(), "final cell differs from the declared end"};
  return {};
}

std::string serialize_plan(const MovePlan& p) {
  std::ostringstream out;
  out << "start " << to_string(p.start) << '\n' << "end " << to_string(p.end) << '\n';
  for (const auto& mv : p.moves) out << mv.color << ' ' << mv.from << ' ' << mv.to << '\n';
  return out.str();
}

MovePlan parse_plan(std::string_view text) {
  MovePlan p;
  bool have_start = false;
  bool have_end = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  auto parse_header_cell = [&](std::string_view rest) {
    try {
      return parse_cell(rest);
    } catch (const ParseError& e) {
      throw ParseError(line_no, e.what());
    }
  };
  while (pos <= text.size()) {
    std::size_t stop = text.find('\n', pos);
    if (stop == std::string_view::npos) stop = text.size();
    std::string_view line = text.substr(pos, stop - pos);
    pos = stop + 1;
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.remove_suffix(1);
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    if (line.empty()) continue;
    if (line.starts_with("start ")) {
      if (have_start) throw ParseError(line_no, "second start line");
      p.start = parse_header_cell(line.substr(6));
      have_start = true;
      continue;
    }
    if (line.starts_with("end ")) {
      if (have_end) throw ParseError(line_no, "second end line");
      p.end = parse_header_cell(line.substr(4));
      have_end = true;
      continue;
    }
    if (!have_start || !have_end) throw ParseError(line_no, "moves must follow the start and end lines");
    std::istringstream fields{std::string(line)};
    long long i = 0, u = 0, v = 0;
    std::string extra;
    if (!(fields >> i >> u >> v) || (fields >> extra) || i < 0 || u < 0 || v < 0 || i > 1'000'000 ||
        u > 1'000'000 || v > 1'000'000) {
      throw ParseError(line_no, "expected a move \"color from to\"");
    }
    p.moves.push_back({static_cast<Color>(i), static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  if (!have_start) throw ParseError(0, "missing start line");
  if (!have_end) throw ParseError(0, "missing end line");
  return p;
}

}  // namespace stirling
