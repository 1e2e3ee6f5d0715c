#pragma once

#include <cstdint>
#include <utility>

#include "stirling/cell.hpp"

namespace stirling {

/// Checked 64-bit helpers; throw std::overflow_error on wraparound.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_pow(std::int64_t base, int exponent);
std::int64_t binomial(int n, int k);

/// (f0, f1) for the vector (2,1,...,1) with n entries. Requires n >= 2.
std::pair<std::int64_t, std::int64_t> count_formula_two_one(const SimpleGraph& g);

/// f1 - f0 + 1 for the (2,1,...,1) complex. Throws GraphError when g is
/// disconnected.
std::int64_t wedge_count(const SimpleGraph& g);

/// Closed-form f-vector (length r+1) for the vector (n-1,...,n-1) with r
/// entries. Requires r >= 2 and n >= 2.
FVector count_formula_uniform(const SimpleGraph& g, int r);

/// Number of i-cells of the uniform (n-1)^r complex, counted by walking
/// every r-tuple with i edge slots and r-i vertex slots and discarding the
/// ones concentrated at a single vertex.
std::int64_t count_via_edge_tuples(const SimpleGraph& g, int r, int i);

}  // namespace stirling
