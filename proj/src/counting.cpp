#include "stirling/counting.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace stirling {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("64-bit overflow in addition");
  return out;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_sub_overflow(a, b, &out)) throw std::overflow_error("64-bit overflow in subtraction");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("64-bit overflow in multiplication");
  return out;
}

std::int64_t checked_pow(std::int64_t base, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  std::int64_t out = 1;
  for (int k = 0; k < exponent; ++k) out = checked_mul(out, base);
  return out;
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t out = 1;
  // out * (n-k+j) is always divisible by j at step j.
  for (int j = 1; j <= k; ++j) out = checked_mul(out, n - k + j) / j;
  return out;
}

namespace {

std::int64_t factorial(int n) {
  std::int64_t out = 1;
  for (int k = 2; k <= n; ++k) out = checked_mul(out, k);
  return out;
}

std::int64_t exact_div(std::int64_t num, std::int64_t den) {
  if (num % den != 0) {
    throw std::logic_error("closed form not integral: " + std::to_string(num) + " / " + std::to_string(den));
  }
  return num / den;
}

}  // namespace

std::pair<std::int64_t, std::int64_t> count_formula_two_one(const SimpleGraph& g) {
  const std::int64_t n = g.vertex_count();
  const std::int64_t m = g.edge_count();
  if (n < 2) throw std::invalid_argument("the (2,1,...,1) formulas need n >= 2");
  const std::int64_t f0 = exact_div(checked_mul(factorial(static_cast<int>(n)), n * n + n - 2), 4);
  const std::int64_t f1 =
      exact_div(checked_mul(checked_mul(m, factorial(static_cast<int>(n - 1))), n * n + n - 4), 2);
  return {f0, f1};
}

std::int64_t wedge_count(const SimpleGraph& g) {
  if (!is_connected(g)) throw GraphError("wedge_count needs a connected graph");
  auto [f0, f1] = count_formula_two_one(g);
  return checked_add(checked_sub(f1, f0), 1);
}

FVector count_formula_uniform(const SimpleGraph& g, int r) {
  if (r < 2) throw std::invalid_argument("count_formula_uniform needs r >= 2");
  const std::int64_t n = g.vertex_count();
  const std::int64_t m = g.edge_count();
  if (n < 2) throw std::invalid_argument("count_formula_uniform needs n >= 2");
  auto degree_power_sum = [&](int i) {
    std::int64_t sum = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) sum = checked_add(sum, checked_pow(g.degree(v), i));
    return sum;
  };
  FVector f{std::vector<std::int64_t>(static_cast<std::size_t>(r) + 1, 0)};
  for (int i = 0; i < r; ++i) {
    const std::int64_t tuples = checked_mul(checked_pow(m, i), checked_pow(n, r - i));
    f.counts[i] = checked_mul(binomial(r, i), checked_sub(tuples, degree_power_sum(i)));
  }
  f.counts[r] = checked_sub(checked_add(checked_pow(m, r), m), degree_power_sum(r));
  return f;
}

namespace {

// A tuple is discarded when some vertex v equals every vertex slot and lies
// on every edge slot.
bool concentrated(const std::vector<Vertex>& vertex_slots, const std::vector<Edge>& edge_slots) {
  auto pinned_at = [&](Vertex v) {
    for (Vertex w : vertex_slots)
      if (w != v) return false;
    for (const auto& e : edge_slots)
      if (!e.touches(v)) return false;
    return true;
  };
  if (!vertex_slots.empty()) return pinned_at(vertex_slots.front());
  return pinned_at(edge_slots.front().u) || pinned_at(edge_slots.front().v);
}

}  // namespace

std::int64_t count_via_edge_tuples(const SimpleGraph& g, int r, int i) {
  if (r < 2 || i < 0 || i > r) throw std::invalid_argument("count_via_edge_tuples needs r >= 2 and 0 <= i <= r");
  if (r > 20) throw std::invalid_argument("count_via_edge_tuples supports r <= 20");
  const int n = g.vertex_count();
  const int m = g.edge_count();
  if (n < 1) return 0;
  if (i > 0 && m == 0) return 0;

  std::int64_t valid = 0;
  std::vector<int> digit(static_cast<std::size_t>(r));
  std::vector<Vertex> vertex_slots;
  std::vector<Edge> edge_slots;
  for (unsigned slots = 0; slots < (1u << r); ++slots) {
    if (std::popcount(slots) != i) continue;
    std::fill(digit.begin(), digit.end(), 0);
    while (true) {
      vertex_slots.clear();
      edge_slots.clear();
      for (int p = 0; p < r; ++p) {
        if (slots >> p & 1u) edge_slots.push_back(g.edges()[digit[p]]);
        else vertex_slots.push_back(digit[p]);
      }
      if (!concentrated(vertex_slots, edge_slots)) ++valid;
      int p = 0;
      for (; p < r; ++p) {
        const int radix = (slots >> p & 1u) ? m : n;
        if (++digit[p] < radix) break;
        digit[p] = 0;
      }
      if (p == r) break;
    }
  }
  return valid;
}

}  // namespace stirling
