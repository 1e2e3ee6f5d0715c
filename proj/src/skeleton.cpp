#include "stirling/skeleton.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "stirling/enumerate.hpp"

namespace stirling {

std::size_t CellHash::operator()(const Cell& c) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2); };
  for (const auto& part : c.parts) {
    mix(part.size());
    for (const auto& e : part) {
      mix(static_cast<std::size_t>(e.kind));
      mix(static_cast<std::size_t>(e.a));
      mix(static_cast<std::size_t>(e.b));
    }
  }
  return h;
}

std::pair<Cell, Cell> boundary_endpoints(const ComplexSpec& spec, const Cell& c) {
  if (c.dimension() != 1) throw std::invalid_argument("boundary_endpoints needs a 1-cell");
  if (c.color_count() != spec.colors.color_count()) {
    throw std::invalid_argument("cell has the wrong number of parts for this complex");
  }
  for (std::size_t i = 0; i < c.parts.size(); ++i) {
    const Part& part = c.parts[i];
    auto it = std::find_if(part.begin(), part.end(), [](const Element& e) { return e.is_edge(); });
    if (it == part.end()) continue;
    const Edge e = it->as_edge();
    Cell left = c;
    Cell right = c;
    left.parts[i][static_cast<std::size_t>(it - part.begin())] = Element::vertex(e.u);
    right.parts[i][static_cast<std::size_t>(it - part.begin())] = Element::vertex(e.v);
    std::sort(left.parts[i].begin(), left.parts[i].end());
    std::sort(right.parts[i].begin(), right.parts[i].end());
    if (right < left) std::swap(left, right);
    return {std::move(left), std::move(right)};
  }
  throw std::logic_error("1-cell without an edge element");
}

SkeletonGraph build_one_skeleton(const ComplexSpec& spec, unsigned workers) {
  SkeletonGraph sk;
  sk.nodes = enumerate_cells(spec, 0, workers);
  if (sk.nodes.empty()) throw EmptyComplexError("the complex has no cells");
  std::unordered_map<Cell, std::size_t, CellHash> index;
  index.reserve(sk.nodes.size());
  for (std::size_t k = 0; k < sk.nodes.size(); ++k) index.emplace(sk.nodes[k], k);

  const auto one_cells = enumerate_cells(spec, 1, workers);
  sk.arcs.resize(one_cells.size());
  auto resolve = [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      auto [a, b] = boundary_endpoints(spec, one_cells[k]);
      sk.arcs[k] = {index.at(a), index.at(b)};
    }
  };
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(one_cells.size() / 256 + 1)));
  if (workers == 1) {
    resolve(0, one_cells.size());
  } else {
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(workers);
    const std::size_t chunk = (one_cells.size() + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        try {
          resolve(std::min(one_cells.size(), w * chunk), std::min(one_cells.size(), (w + 1) * chunk));
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  return sk;
}

namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

ComponentLabels connected_components(const SkeletonGraph& skeleton) {
  if (skeleton.nodes.empty()) throw EmptyComplexError("the complex has no cells");
  DisjointSets sets(skeleton.nodes.size());
  for (const auto& [a, b] : skeleton.arcs) sets.unite(a, b);
  ComponentLabels out;
  out.labels.assign(skeleton.nodes.size(), -1);
  std::unordered_map<std::size_t, int> id_of_root;
  for (std::size_t k = 0; k < skeleton.nodes.size(); ++k) {
    auto [it, inserted] = id_of_root.try_emplace(sets.find(k), out.count);
    if (inserted) {
      ++out.count;
      out.sizes.push_back(0);
    }
    out.labels[k] = it->second;
    ++out.sizes[static_cast<std::size_t>(it->second)];
  }
  return out;
}

ComponentLabels connected_components(const ComplexSpec& spec, unsigned workers) {
  return connected_components(build_one_skeleton(spec, workers));
}

std::int64_t euler_characteristic(const FVector& f) {
  std::int64_t chi = 0;
  for (std::size_t i = 0; i < f.counts.size(); ++i) chi += (i % 2 == 0 ? 1 : -1) * f.counts[i];
  return chi;
}

std::string skeleton_edge_list(const SkeletonGraph& skeleton) {
  std::ostringstream out;
  out << skeleton.nodes.size() << ' ' << skeleton.arcs.size() << '\n';
  for (const auto& [a, b] : skeleton.arcs) out << a << ' ' << b << '\n';
  return out.str();
}

std::string skeleton_node_listing(const SkeletonGraph& skeleton) {
  std::ostringstream out;
  for (std::size_t k = 0; k < skeleton.nodes.size(); ++k) out << k << '\t' << to_string(skeleton.nodes[k]) << '\n';
  return out.str();
}

}  // namespace stirling
