#include <doctest.h>

#include "oracles.hpp"
#include "stirling/counting.hpp"

using namespace stirling;

TEST_CASE("checked arithmetic") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(60, 30) == 118264581564861424LL);
  CHECK(checked_pow(3, 4) == 81);
  CHECK(checked_pow(7, 0) == 1);
  CHECK_THROWS_AS(checked_pow(10, 19), std::overflow_error);
  CHECK_THROWS_AS(checked_mul(INT64_MAX, 2), std::overflow_error);
  CHECK_THROWS_AS(checked_add(INT64_MAX, 1), std::overflow_error);
  CHECK_THROWS_AS(checked_sub(INT64_MIN, 1), std::overflow_error);
}

TEST_CASE("two-one closed forms") {
  using P = std::pair<std::int64_t, std::int64_t>;
  CHECK(count_formula_two_one(parse_named_graph("P4")) == P{108, 144});
  CHECK(count_formula_two_one(parse_named_graph("K5")) == P{840, 3120});
  CHECK(count_formula_two_one(parse_named_graph("P3")) == P{15, 16});
  CHECK_THROWS_AS(count_formula_two_one(SimpleGraph(1, {})), std::invalid_argument);
  CHECK_THROWS_AS(count_formula_two_one(parse_named_graph("K20")), std::overflow_error);

  CHECK(wedge_count(parse_named_graph("P3")) == 2);
  CHECK(wedge_count(parse_named_graph("K4")) == 181);
  CHECK(wedge_count(parse_named_graph("K5")) == 2281);
  CHECK_THROWS_AS(wedge_count(parse_edge_list("3 1\n0 1")), GraphError);
}

TEST_CASE("two-one closed forms agree with enumeration on every small connected graph") {
  std::vector<SimpleGraph> graphs;
  for (int n = 2; n <= 4; ++n)
    for (auto& g : oracle::connected_labeled_graphs(n)) graphs.push_back(g);
  graphs.push_back(parse_named_graph("K5"));
  for (const auto& g : graphs) {
    CAPTURE(to_edge_list(g));
    const auto f = f_vector(ComplexSpec{g, two_one_vector(g.vertex_count())});
    auto [f0, f1] = count_formula_two_one(g);
    CHECK(f.at(0) == f0);
    CHECK(f.at(1) == f1);
    for (std::size_t d = 2; d < f.counts.size(); ++d) CHECK(f.counts[d] == 0);
  }
}

TEST_CASE("uniform closed form") {
  const auto t4 = parse_named_graph("T4");
  const auto k5 = parse_named_graph("K5");
  CHECK(count_formula_uniform(t4, 2) == FVector{{12, 12, 0}});
  CHECK(count_formula_uniform(k5, 3) == FVector{{120, 690, 1260, 690}});
  CHECK(count_formula_uniform(k5, 5) == FVector{{3120, 31150, 124200, 246800, 243600, 94890}});
  CHECK_THROWS_AS(count_formula_uniform(k5, 1), std::invalid_argument);
}

TEST_CASE("edge-tuple oracle") {
  CHECK(count_via_edge_tuples(oracle::y_prime(), 4, 2) == 1428);
  CHECK(count_via_edge_tuples(parse_named_graph("T4"), 2, 2) == 0);
  for (const char* name : {"P3", "C4", "K5"}) {
    const auto g = parse_named_graph(name);
    const std::int64_t n = g.vertex_count();
    CHECK(count_via_edge_tuples(g, 2, 0) == n * n - n);
  }
  CHECK_THROWS_AS(count_via_edge_tuples(parse_named_graph("P3"), 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(count_via_edge_tuples(parse_named_graph("P3"), 3, 4), std::invalid_argument);
  CHECK_THROWS_AS(count_via_edge_tuples(parse_named_graph("P3"), 3, -1), std::invalid_argument);
}

TEST_CASE("enumeration, closed form and edge tuples agree") {
  for (const char* name : {"P3", "P4", "T4", "C4", "K4", "K5"}) {
    const auto g = parse_named_graph(name);
    for (int r = 2; r <= 4; ++r) {
      CAPTURE(name);
      CAPTURE(r);
      const auto closed = count_formula_uniform(g, r);
      const auto f = f_vector(ComplexSpec{g, uniform_vector(g.vertex_count(), r)});
      CHECK(f.same_counts(closed));
      for (int i = 0; i <= r; ++i) CHECK(count_via_edge_tuples(g, r, i) == closed.at(i));
    }
  }
}

TEST_CASE("uniform closed form on every small labeled graph") {
  for (int n = 2; n <= 4; ++n) {
    for (const auto& g : oracle::all_labeled_graphs(n)) {
      for (int r = 2; r <= 3; ++r) {
        const auto closed = count_formula_uniform(g, r);
        CHECK(f_vector(ComplexSpec{g, uniform_vector(n, r)}).same_counts(closed));
        for (int i = 0; i <= r; ++i) CHECK(count_via_edge_tuples(g, r, i) == closed.at(i));
      }
    }
  }
}

TEST_CASE("T4 with five colors of size 3 by hand") {
  // A 1-cell puts one color on {(0,a), b, c} for the three leaves a, b, c
  // (5 colors x 3 edges); the other four colors each miss one vertex and
  // must jointly cover 0 and a: 4^4 - 2 = 254 choices.
  const auto g = parse_named_graph("T4");
  CHECK(f_vector(ComplexSpec{g, uniform_vector(4, 5)}).at(1) == 5 * 3 * 254);
  CHECK(count_formula_uniform(g, 5).at(1) == 3810);
  CHECK(count_via_edge_tuples(g, 5, 1) == 3810);
  // Every 0-cell: five 3-subsets of four vertices that together cover all
  // four, 4^5 minus the tuples all missing one common vertex.
  CHECK(count_formula_uniform(g, 5).at(0) == 1024 - 4);
}
