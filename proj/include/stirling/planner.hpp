#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "stirling/cell.hpp"

namespace stirling {

/// One robot of color `color` crossing the edge from `from` to `to`.
struct Move {
  Color color = 0;
  Vertex from = 0;
  Vertex to = 0;

  Move flipped() const { return {color, to, from}; }
  auto operator<=>(const Move&) const = default;
};

struct MovePlan {
  Cell start;
  std::vector<Move> moves;
  Cell end;
};

class PlannerError : public std::runtime_error {
 public:
  enum class Kind { Precondition, HypothesisNotMet, TypeMismatch };

  PlannerError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// i in c(u), i not in c(v), {u,v} an edge, and with coverage on, u keeps
/// another robot.
bool is_valid_move(const ComplexSpec& spec, const Cell& c, const Move& mv);
/// Throws PlannerError(Precondition) when the move is invalid.
Cell apply_move(const ComplexSpec& spec, const Cell& c, const Move& mv);

/// Replaces every edge element by its smaller endpoint.
Cell snap(const ComplexSpec& spec, const Cell& c);

/// Moves reversed and flipped; start and end exchanged.
MovePlan reversed(const MovePlan& p);

/// Adds a k-colored robot to x = path.back(), draining one robot from
/// z = path.front(). Requires z available, k in c(z), k not in c(x), and a
/// simple path.
MovePlan leapfrog(const ComplexSpec& spec, const Cell& c, Vertex z, const VertexPath& path, Color k);

/// Exchanges the i-robot on z with the k-robot on w, where c(w) = {k} and
/// k is absent from every other vertex of the path z..w.
MovePlan swap_third(const ComplexSpec& spec, const Cell& c, Vertex z, Vertex w, const VertexPath& path,
                    Color i, Color k);

/// Exchanges the i-robot on x with the j-robot on y. Needs a connected
/// graph, a non-trivial vector and at least three colors.
MovePlan swap_colors(const ComplexSpec& spec, const Cell& c, Vertex x, Vertex y, Color i, Color j);

/// Plan between two 0-cells with equal occupancy counts at every vertex.
/// Throws PlannerError(TypeMismatch) otherwise.
MovePlan same_type_plan(const ComplexSpec& spec, const Cell& c, const Cell& c2);

/// Constructive plan between any two 0-cells. Throws
/// PlannerError(HypothesisNotMet) for a disconnected graph, a trivial
/// vector, fewer than three colors or coverage switched off.
MovePlan plan(const ComplexSpec& spec, const Cell& c, const Cell& c2);

/// Shortest plan by breadth-first search over 0-cells; nullopt when c2 is
/// unreachable from c.
std::optional<MovePlan> plan_bfs(const ComplexSpec& spec, const Cell& c, const Cell& c2);

struct VerifyResult {
  bool ok = true;
  std::size_t failing_index = 0;  // move index; moves.size() for an end mismatch
  std::string reason;
};

VerifyResult verify_plan(const ComplexSpec& spec, const MovePlan& p);

/// "start <cell>", "end <cell>", then one "i u v" line per move.
std::string serialize_plan(const MovePlan& p);
/// Throws ParseError with a 1-based line number.
MovePlan parse_plan(std::string_view text);

}  // namespace stirling
