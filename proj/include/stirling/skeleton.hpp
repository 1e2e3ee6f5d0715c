#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "stirling/cell.hpp"

namespace stirling {

/// Raised by skeleton operations on a complex with no cells.
class EmptyComplexError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CellHash {
  std::size_t operator()(const Cell& c) const noexcept;
};

/// Nodes are the 0-cells in canonical order; one arc per 1-cell, so
/// parallel arcs are possible.
struct SkeletonGraph {
  std::vector<Cell> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
};

/// The two 0-cells obtained by replacing the single edge of a 1-cell with
/// each of its endpoints, in canonical order. Throws std::invalid_argument
/// unless dim(c) == 1.
std::pair<Cell, Cell> boundary_endpoints(const ComplexSpec& spec, const Cell& c);

/// Throws EmptyComplexError when there are no 0-cells.
SkeletonGraph build_one_skeleton(const ComplexSpec& spec, unsigned workers = 1);

struct ComponentLabels {
  int count = 0;
  std::vector<int> labels;          // per node; ids numbered by first node
  std::vector<std::size_t> sizes;   // nodes per component id
};

ComponentLabels connected_components(const SkeletonGraph& skeleton);
ComponentLabels connected_components(const ComplexSpec& spec, unsigned workers = 1);

std::int64_t euler_characteristic(const FVector& f);

/// "n m" header plus one "a b" line per arc (node indices).
std::string skeleton_edge_list(const SkeletonGraph& skeleton);
/// One "index<TAB>cell" line per node.
std::string skeleton_node_listing(const SkeletonGraph& skeleton);

}  // namespace stirling
