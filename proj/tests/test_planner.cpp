#include <doctest.h>

#include "planner_oracles.hpp"
#include "stirling/skeleton.hpp"

using namespace stirling;
using oracle::make_spec;

namespace {

std::vector<ComplexSpec> theorem_fixtures() {
  return {make_spec("P3", {2, 2, 1}), make_spec("T4", {3, 3, 3}), make_spec("C4", {2, 2, 1, 1}),
          make_spec("K4", {2, 1, 1, 1})};
}

// Smaller vectors and sparser graphs reach the rarely used proof branches.
std::vector<ComplexSpec> stress_fixtures() {
  std::vector<ComplexSpec> out{
      make_spec("P4", {2, 1, 1, 1}), make_spec("P4", {2, 2, 1}),   make_spec("P5", {2, 1, 1, 1, 1}),
      make_spec("T5", {2, 1, 1, 1, 1}), make_spec("C5", {2, 1, 1, 1, 1}), make_spec("P5", {1, 3, 2}),
      make_spec("P4", {1, 1, 1, 2}), make_spec("T4", {1, 2, 1, 1}), make_spec("P3", {1, 2, 1}),
      make_spec("P5", {2, 2, 1, 1}),
  };
  for (auto& g : oracle::connected_labeled_graphs(4)) {
    out.push_back(ComplexSpec{g, ColorVector({2, 1, 1, 1})});
    out.push_back(ComplexSpec{g, ColorVector({1, 1, 3})});
  }
  return out;
}

}  // namespace

TEST_CASE("move validity") {
  const auto spec = make_spec("P3", {2, 2, 1});
  const Cell c = parse_cell("{0,1}|{0,2}|{0}");
  CHECK(is_valid_move(spec, c, {2, 0, 1}));       // 0 holds three colors
  CHECK_FALSE(is_valid_move(spec, c, {1, 2, 1}));  // 2 would be left empty
  CHECK_FALSE(is_valid_move(spec, c, {0, 0, 1}));  // 1 already holds color 0
  CHECK_FALSE(is_valid_move(spec, c, {2, 1, 2}));  // color 2 is not on 1
  CHECK_FALSE(is_valid_move(spec, c, {2, 0, 2}));  // not an edge
  CHECK_FALSE(is_valid_move(spec, c, {3, 0, 1}));  // no such color
  auto relaxed = spec;
  relaxed.require_cover = false;
  CHECK(is_valid_move(relaxed, c, {1, 2, 1}));

  CHECK(to_string(apply_move(spec, c, {2, 0, 1})) == "{0,1}|{0,2}|{1}");
  CHECK_THROWS_AS(apply_move(spec, c, {1, 2, 1}), PlannerError);
}

TEST_CASE("moves are reversible") {
  for (const auto& spec : theorem_fixtures()) {
    for (const auto& c : enumerate_cells(spec, 0)) {
      for (Color i = 0; i < spec.colors.color_count(); ++i)
        for (const auto& e : spec.graph.edges())
          for (Move mv : {Move{i, e.u, e.v}, Move{i, e.v, e.u}}) {
            if (!is_valid_move(spec, c, mv)) continue;
            const Cell next = apply_move(spec, c, mv);
            CHECK(is_valid_cell(spec, next));
            REQUIRE(is_valid_move(spec, next, mv.flipped()));
            CHECK(apply_move(spec, next, mv.flipped()) == c);
          }
    }
  }
}

TEST_CASE("snap") {
  const auto spec = make_spec("P3", {2, 2, 1});
  const Cell zero = parse_cell("{0,1}|{0,2}|{0}");
  CHECK(snap(spec, zero) == zero);
  CHECK(to_string(snap(spec, parse_cell("{0,1}|{0,2}|{(0,1)}"))) == "{0,1}|{0,2}|{0}");
  CHECK(to_string(snap(spec, parse_cell("{0,1}|{2,(0,1)}|{(0,1)}"))) == "{0,1}|{0,2}|{0}");
  for (const auto& s : {spec, make_spec("C4", {2, 2, 1, 1}), make_spec("K4", {3, 2, 1})}) {
    for (const auto& c : enumerate_cells(s)) {
      const Cell snapped = snap(s, c);
      CHECK(snapped.is_zero_cell());
      CHECK(is_valid_cell(s, snapped));
    }
  }
}

TEST_CASE("leapfrog on the 5-path") {
  // Colors red 0, green 1, blue 2; blue leaves 0 and is added to 3 through a green relay.
  const auto spec = make_spec("P5", {1, 3, 2});
  const Cell c = make_zero_cell({{4}, {0, 1, 3}, {0, 2}});
  const auto p = leapfrog(spec, c, 0, shortest_path(spec.graph, 0, 3), 2);
  CHECK(verify_plan(spec, p).ok);
  const auto after = oracle::profile(p.end, 5);
  CHECK(after[3] == std::vector<Color>{1, 2});
  CHECK(after[4] == std::vector<Color>{0});
  CHECK(after[0].size() == 1);
  CHECK(p.moves.size() == 3);
}

TEST_CASE("leapfrog base case is one move") {
  const auto spec = make_spec("P3", {2, 2, 1});
  const Cell c = parse_cell("{0,1}|{0,2}|{0}");
  const auto p = leapfrog(spec, c, 0, VertexPath{{0, 1}}, 2);
  CHECK(p.moves == std::vector<Move>{{2, 0, 1}});
}

TEST_CASE("leapfrog preconditions") {
  const auto spec = make_spec("P3", {2, 2, 1});
  const Cell c = parse_cell("{0,1}|{0,2}|{0}");
  CHECK_THROWS_AS(leapfrog(spec, c, 1, VertexPath{{1, 2}}, 0), PlannerError);   // 1 unavailable
  CHECK_THROWS_AS(leapfrog(spec, c, 0, VertexPath{{0, 1}}, 0), PlannerError);   // 1 holds color 0
  CHECK_THROWS_AS(leapfrog(spec, c, 0, VertexPath{{0, 2}}, 2), PlannerError);   // not a path
  CHECK_THROWS_AS(leapfrog(spec, c, 0, VertexPath{{0, 1, 0, 1}}, 2), PlannerError);
  CHECK_THROWS_AS(leapfrog(spec, parse_cell("{0,1}|{0,2}|{(0,1)}"), 0, VertexPath{{0, 1}}, 2), PlannerError);
}

TEST_CASE("leapfrog postconditions on random instances") {
  std::mt19937 rng(11);
  auto fixtures = theorem_fixtures();
  for (const auto& s : stress_fixtures()) fixtures.push_back(s);
  int checked = 0;
  for (const auto& spec : fixtures) {
    const auto zero = enumerate_cells(spec, 0);
    for (int trial = 0; trial < 120; ++trial) {
      auto lc = oracle::random_leapfrog_case(spec, zero, rng);
      if (!lc) continue;
      const auto p = leapfrog(spec, lc->cell, lc->z, lc->path, lc->k);
      CHECK(oracle::leapfrog_holds(spec, *lc, p));
      CHECK(verify_plan(spec, p).ok);
      ++checked;
    }
  }
  CHECK(checked > 1000);
}

TEST_CASE("swap_third base and recursive cases") {
  const auto spec = make_spec("P4", {2, 1, 1, 1});
  // Adjacent: z=0 holds {0,1}, w=1 holds {2}.
  const Cell adj = make_zero_cell({{0, 2}, {0}, {1}, {3}});
  const auto p = swap_third(spec, adj, 0, 1, VertexPath{{0, 1}}, 0, 2);
  CHECK(p.moves.size() == 2);
  CHECK(to_string(p.end) == "{1,2}|{0}|{0}|{3}");
  // Next vertex holds only i: the relay branch.
  const Cell relay = make_zero_cell({{0, 1}, {0}, {2}, {3}});
  const auto q = swap_third(spec, relay, 0, 2, VertexPath{{0, 1, 2}}, 0, 2);
  CHECK(verify_plan(spec, q).ok);
  CHECK(to_string(q.end) == "{1,2}|{0}|{0}|{3}");
  CHECK_THROWS_AS(swap_third(spec, relay, 0, 3, VertexPath{{0, 1, 2, 3}}, 0, 2), PlannerError);  // c(3) != {2}
}

TEST_CASE("swap_third postconditions on random instances") {
  std::mt19937 rng(12);
  auto fixtures = theorem_fixtures();
  for (const auto& s : stress_fixtures()) fixtures.push_back(s);
  int checked = 0;
  for (const auto& spec : fixtures) {
    const auto zero = enumerate_cells(spec, 0);
    for (int trial = 0; trial < 200; ++trial) {
      auto sc = oracle::random_swap_third_case(spec, zero, rng);
      if (!sc) continue;
      const auto p = swap_third(spec, sc->cell, sc->z, sc->w, sc->path, sc->i, sc->k);
      CHECK(oracle::swap_third_holds(spec, *sc, p));
      ++checked;
    }
  }
  CHECK(checked > 500);
}

TEST_CASE("swap_colors on the 5-path") {
  const auto spec = make_spec("P5", {1, 3, 2});
  const Cell c = make_zero_cell({{4}, {0, 1, 3}, {0, 2}});
  const Cell target = make_zero_cell({{3}, {0, 1, 4}, {0, 2}});
  const auto p = swap_colors(spec, c, 4, 3, 0, 1);
  CHECK(verify_plan(spec, p).ok);
  CHECK(p.end == target);
}

TEST_CASE("swap_colors adjacent with x available is two moves") {
  const auto spec = make_spec("P3", {2, 2, 1});
  const Cell c = parse_cell("{0,1}|{1,2}|{0}");
  const auto p = swap_colors(spec, c, 0, 1, 2, 1);
  CHECK(p.moves.size() == 2);
  CHECK(to_string(p.end) == "{0,1}|{0,2}|{1}");
}

TEST_CASE("swap_colors exhaustively on small fixtures") {
  auto fixtures = theorem_fixtures();
  for (const auto& s : stress_fixtures()) fixtures.push_back(s);
  std::size_t checked = 0;
  for (const auto& spec : fixtures) {
    const int n = spec.graph.vertex_count();
    for (const auto& c : enumerate_cells(spec, 0)) {
      for (const auto& sc : oracle::all_swap_cases(spec, c)) {
        const auto p = swap_colors(spec, c, sc.x, sc.y, sc.i, sc.j);
        REQUIRE(oracle::replays_to(spec, p, p.end));
        CHECK(oracle::profile(p.end, n) == oracle::swapped_profile(c, n, sc));
        const auto back = swap_colors(spec, p.end, sc.x, sc.y, sc.j, sc.i);
        CHECK(back.end == p.start);
        ++checked;
      }
    }
  }
  MESSAGE("swap instances checked: " << checked);
}

TEST_CASE("swap_colors preconditions") {
  const auto spec = make_spec("P3", {2, 2, 1});
  const Cell c = parse_cell("{0,1}|{1,2}|{0}");
  CHECK_THROWS_AS(swap_colors(spec, c, 0, 1, 0, 1), PlannerError);  // 1 holds color 0
  CHECK_THROWS_AS(swap_colors(spec, c, 0, 0, 2, 1), PlannerError);
  try {
    swap_colors(make_spec("T4", {3, 2}), parse_cell("{0,1,2}|{0,3}"), 1, 3, 0, 1);
    FAIL("two colors accepted");
  } catch (const PlannerError& e) {
    CHECK(e.kind() == PlannerError::Kind::HypothesisNotMet);
  }
}

TEST_CASE("same-type plans") {
  std::mt19937 rng(5);
  for (const auto& spec : theorem_fixtures()) {
    const auto zero = enumerate_cells(spec, 0);
    const int n = spec.graph.vertex_count();
    auto type_of = [&](const Cell& c) {
      std::vector<std::size_t> t;
      for (const auto& colors : oracle::profile(c, n)) t.push_back(colors.size());
      return t;
    };
    for (int trial = 0; trial < 150; ++trial) {
      const Cell& a = oracle::pick(zero, rng);
      std::vector<Cell> same;
      for (const auto& b : zero)
        if (type_of(b) == type_of(a)) same.push_back(b);
      const Cell& b = oracle::pick(same, rng);
      const auto p = same_type_plan(spec, a, b);
      CHECK(p.end == b);
      CHECK(verify_plan(spec, p).ok);
    }
    CHECK(same_type_plan(spec, zero.front(), zero.front()).moves.empty());
  }
  const auto spec = make_spec("P3", {2, 2, 1});
  try {
    same_type_plan(spec, parse_cell("{0,1}|{1,2}|{0}"), parse_cell("{0,1}|{1,2}|{1}"));
    FAIL("different types accepted");
  } catch (const PlannerError& e) {
    CHECK(e.kind() == PlannerError::Kind::TypeMismatch);
  }
}

TEST_CASE("same-type plan with five colors on a tree") {
  // A tree with a branch vertex of degree 4 and five colors of mixed sizes.
  const SimpleGraph x_graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {4, 5}});
  const ComplexSpec spec{x_graph, ColorVector({2, 2, 1, 1, 1})};
  const Cell c = make_zero_cell({{0, 5}, {1, 4}, {2}, {3}, {0}});
  const Cell c2 = make_zero_cell({{1, 4}, {0, 5}, {0}, {2}, {3}});
  REQUIRE(is_valid_cell(spec, c));
  REQUIRE(is_valid_cell(spec, c2));
  const auto p = same_type_plan(spec, c, c2);
  CHECK(p.end == c2);
  CHECK(verify_plan(spec, p).ok);
}

TEST_CASE("plan connects every pair on the small path fixture") {
  const auto spec = make_spec("P3", {2, 2, 1});
  const auto zero = enumerate_cells(spec, 0);
  for (const auto& a : zero)
    for (const auto& b : zero) {
      const auto p = plan(spec, a, b);
      CHECK(p.end == b);
      CHECK(verify_plan(spec, p).ok);
      CHECK(oracle::replays_to(spec, p, b));
    }
}

TEST_CASE("plan on every pair of the stress fixtures") {
  for (const auto& spec : stress_fixtures()) {
    if (spec.colors.color_count() < 3 || !is_nontrivial(spec)) continue;
    const auto zero = enumerate_cells(spec, 0);
    if (zero.size() > 200) continue;
    for (const auto& a : zero)
      for (const auto& b : zero) {
        const auto p = plan(spec, a, b);
        CHECK(verify_plan(spec, p).ok);
      }
  }
}

TEST_CASE("plan on random pairs and agreement with bfs") {
  std::mt19937 rng(3);
  for (const auto& spec : theorem_fixtures()) {
    const auto zero = enumerate_cells(spec, 0);
    for (int trial = 0; trial < 60; ++trial) {
      const Cell& a = oracle::pick(zero, rng);
      const Cell& b = oracle::pick(zero, rng);
      const auto p = plan(spec, a, b);
      CHECK(verify_plan(spec, p).ok);
      const auto q = plan_bfs(spec, a, b);
      REQUIRE(q.has_value());
      CHECK(verify_plan(spec, *q).ok);
      CHECK(q->moves.size() <= p.moves.size());
    }
    CHECK(plan(spec, zero.front(), zero.front()).moves.empty());
  }
}

TEST_CASE("plan accepts snapped higher cells") {
  const auto spec = make_spec("P3", {2, 2, 1});
  const Cell a = snap(spec, parse_cell("{0,1}|{2,(0,1)}|{(0,1)}"));
  const Cell b = snap(spec, parse_cell("{0,(1,2)}|{1,2}|{0}"));
  const auto p = plan(spec, a, b);
  CHECK(verify_plan(spec, p).ok);
}

TEST_CASE("plan hypotheses") {
  auto kind_of = [](auto&& f) {
    try {
      f();
    } catch (const PlannerError& e) {
      return static_cast<int>(e.kind());
    }
    return -1;
  };
  const auto hypothesis = static_cast<int>(PlannerError::Kind::HypothesisNotMet);
  const auto y32 = make_spec("T4", {3, 2});
  const auto zero = enumerate_cells(y32, 0);
  CHECK(kind_of([&] { plan(y32, zero[0], zero[1]); }) == hypothesis);
  const auto trivial = make_spec("C4", {2, 1, 1});
  const auto tz = enumerate_cells(trivial, 0);
  CHECK(kind_of([&] { plan(trivial, tz[0], tz[1]); }) == hypothesis);
  const ComplexSpec split{parse_edge_list("4 2\n0 1\n2 3"), ColorVector({2, 2, 1})};
  const auto sz = enumerate_cells(split, 0);
  CHECK(kind_of([&] { plan(split, sz[0], sz[1]); }) == hypothesis);
  const auto p3 = make_spec("P3", {2, 2, 1});
  const auto precondition = static_cast<int>(PlannerError::Kind::Precondition);
  CHECK(kind_of([&] { plan(p3, parse_cell("{0,1}|{2,(0,1)}|{(0,1)}"), parse_cell("{0,1}|{1,2}|{0}")); }) ==
        precondition);
}

TEST_CASE("bfs reachability follows the component labels") {
  const auto spec = make_spec("T4", {3, 2});
  const auto sk = build_one_skeleton(spec);
  const auto comps = connected_components(sk);
  for (std::size_t a = 0; a < sk.nodes.size(); ++a)
    for (std::size_t b = 0; b < sk.nodes.size(); ++b) {
      const auto p = plan_bfs(spec, sk.nodes[a], sk.nodes[b]);
      CHECK(p.has_value() == (comps.labels[a] == comps.labels[b]));
      if (p) CHECK(verify_plan(spec, *p).ok);
    }
  CHECK(plan_bfs(spec, sk.nodes[0], sk.nodes[0])->moves.empty());
}

TEST_CASE("bfs without coverage") {
  const auto spec = make_spec("T4", {1, 1}, false);
  const auto zero = enumerate_cells(spec, 0);
  for (const auto& a : zero)
    for (const auto& b : zero) {
      const auto p = plan_bfs(spec, a, b);
      REQUIRE(p.has_value());
      CHECK(verify_plan(spec, *p).ok);
    }
}

TEST_CASE("verify_plan") {
  const auto spec = make_spec("P3", {2, 2, 1});
  const auto zero = enumerate_cells(spec, 0);
  auto p = plan(spec, zero.front(), zero.back());
  REQUIRE(p.moves.size() >= 2);
  CHECK(verify_plan(spec, p).ok);
  CHECK(verify_plan(spec, reversed(p)).ok);

  const Cell before_second = apply_move(spec, p.start, p.moves[0]);
  auto bad_color = p;
  for (Color c = 0; c < 3; ++c) {
    bad_color.moves[1].color = c;
    if (!is_valid_move(spec, before_second, bad_color.moves[1])) break;
  }
  auto r = verify_plan(spec, bad_color);
  CHECK_FALSE(r.ok);
  CHECK(r.failing_index == 1);

  auto bad_start = p;
  bad_start.start = parse_cell("{0,1}|{0,1}|{0}");
  r = verify_plan(spec, bad_start);
  CHECK_FALSE(r.ok);
  CHECK(r.failing_index == 0);

  auto bad_end = p;
  bad_end.end = zero[1] == p.end ? zero[2] : zero[1];
  r = verify_plan(spec, bad_end);
  CHECK_FALSE(r.ok);
  CHECK(r.failing_index == p.moves.size());
}

TEST_CASE("plan serialization") {
  const auto spec = make_spec("C4", {2, 2, 1, 1});
  const auto zero = enumerate_cells(spec, 0);
  const auto p = plan(spec, zero[3], zero[17]);
  const auto text = serialize_plan(p);
  const auto q = parse_plan(text);
  CHECK(q.start == p.start);
  CHECK(q.end == p.end);
  CHECK(q.moves == p.moves);
  CHECK(verify_plan(spec, q).ok);

  auto line_of = [](const char* t) {
    try {
      parse_plan(t);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{999};
  };
  CHECK(line_of("start {0}\nend {0}\n1 2\n") == 3);
  CHECK(line_of("start {0}\nend {0}\n1 2 x\n") == 3);
  CHECK(line_of("start {0\nend {0}\n") == 1);
  CHECK(line_of("1 0 1\n") == 1);
  CHECK(line_of("start {0}\n") == 0);
}
