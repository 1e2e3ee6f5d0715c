#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "stirling/cell.hpp"

namespace stirling {

/// Worker count taken from STIRLING_WORKERS (defaults to 1).
unsigned default_worker_count();

/// All parts of size `size` whose elements are pairwise disjoint, in
/// canonical lexicographic order.
std::vector<Part> candidate_parts(const SimpleGraph& g, int size);

/// Streams every cell of the complex exactly once in canonical order.
/// With `dim_filter`, only cells of that dimension are produced.
void for_each_cell(const ComplexSpec& spec, std::optional<int> dim_filter,
                   const std::function<void(const Cell&)>& visit);

/// Materialized version of for_each_cell. The per-color product is split
/// across `workers` threads; the result order does not depend on it.
std::vector<Cell> enumerate_cells(const ComplexSpec& spec, std::optional<int> dim_filter = {},
                                  unsigned workers = 1);

/// Cell counts by dimension. Covered complexes get max_dimension()+1
/// entries, uncovered ones end at their highest occupied dimension, and an
/// empty complex yields a single zero.
FVector f_vector(const ComplexSpec& spec, unsigned workers = 1);

}  // namespace stirling
