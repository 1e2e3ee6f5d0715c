#include "stirling/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>

namespace stirling {

unsigned default_worker_count() {
  if (const char* env = std::getenv("STIRLING_WORKERS")) {
    try {
      long value = std::stol(env);
      if (value >= 1) return static_cast<unsigned>(std::min<long>(value, 256));
    } catch (const std::exception&) {
    }
  }
  return 1;
}

namespace {

using Mask = std::uint64_t;

struct CandidatePart {
  Part part;
  Mask covers = 0;  // vertices occupied by vertex elements
  int dim = 0;
};

struct ElementInfo {
  Element element;
  Mask touches = 0;
};

std::vector<ElementInfo> element_table(const SimpleGraph& g) {
  std::vector<ElementInfo> table;
  for (Vertex v = 0; v < g.vertex_count(); ++v) table.push_back({Element::vertex(v), Mask{1} << v});
  for (const auto& e : g.edges())
    table.push_back({Element::edge(e), (Mask{1} << e.u) | (Mask{1} << e.v)});
  return table;
}

void extend_parts(const std::vector<ElementInfo>& table, std::size_t next, int remaining,
                  Mask touched, CandidatePart& current, std::vector<CandidatePart>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (std::size_t k = next; k < table.size(); ++k) {
    if (table.size() - k < static_cast<std::size_t>(remaining)) break;
    const auto& info = table[k];
    if (touched & info.touches) continue;
    current.part.push_back(info.element);
    const bool is_vertex = info.element.is_vertex();
    if (is_vertex) current.covers |= info.touches;
    else ++current.dim;
    extend_parts(table, k + 1, remaining - 1, touched | info.touches, current, out);
    if (is_vertex) current.covers &= ~info.touches;
    else --current.dim;
    current.part.pop_back();
  }
}

std::vector<CandidatePart> build_candidates(const SimpleGraph& g, int size) {
  std::vector<CandidatePart> out;
  CandidatePart current;
  extend_parts(element_table(g), 0, size, 0, current, out);
  return out;
}

/// Depth-first walk of the per-color product. Calls `leaf(choice, dim)`
/// where `choice[i]` indexes the candidate list of color i.
class ProductWalker {
 public:
  ProductWalker(const ComplexSpec& spec, std::optional<int> dim_filter) : spec_(spec), dim_filter_(dim_filter) {
    spec.check_supported();
    const int r = spec.colors.color_count();
    const int n = spec.graph.vertex_count();
    full_ = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
    std::map<int, std::size_t> by_size;
    for (int i = 0; i < r; ++i) {
      const int size = spec.colors.size(i);
      auto [it, inserted] = by_size.try_emplace(size, pools_.size());
      if (inserted) pools_.push_back(build_candidates(spec.graph, size));
      pool_of_.push_back(it->second);
    }
    capacity_after_.assign(static_cast<std::size_t>(r) + 1, 0);
    for (int i = r - 1; i >= 0; --i)
      capacity_after_[i] = capacity_after_[i + 1] + spec.colors.size(i);
    dim_bound_ = spec.require_cover ? max_dimension(spec) : -1;
  }

  const std::vector<CandidatePart>& candidates(int color) const { return pools_[pool_of_[color]]; }

  template <typename Leaf>
  void walk(std::size_t first_begin, std::size_t first_end, Leaf&& leaf) const {
    const int r = spec_.colors.color_count();
    std::vector<std::size_t> choice(static_cast<std::size_t>(r), 0);
    const auto& first = candidates(0);
    first_end = std::min(first_end, first.size());
    for (std::size_t k = first_begin; k < first_end; ++k) {
      choice[0] = k;
      descend(1, first[k].covers, first[k].dim, choice, leaf);
    }
  }

  std::size_t first_color_candidates() const { return candidates(0).size(); }

 private:
  template <typename Leaf>
  void descend(int color, Mask covered, int dim, std::vector<std::size_t>& choice, Leaf& leaf) const {
    if (dim_filter_ && dim > *dim_filter_) return;
    if (spec_.require_cover) {
      const auto uncovered = std::popcount(full_ & ~covered);
      if (uncovered > capacity_after_[color]) return;
    }
    if (color == spec_.colors.color_count()) {
      if (spec_.require_cover && covered != full_) return;
      if (dim_filter_ && dim != *dim_filter_) return;
      if (spec_.require_cover && dim > dim_bound_) {
        throw std::logic_error("enumerated a cell above the dimension bound");
      }
      leaf(choice, dim);
      return;
    }
    const auto& pool = candidates(color);
    for (std::size_t k = 0; k < pool.size(); ++k) {
      choice[color] = k;
      descend(color + 1, covered | pool[k].covers, dim + pool[k].dim, choice, leaf);
    }
  }

  const ComplexSpec& spec_;
  std::optional<int> dim_filter_;
  std::vector<std::vector<CandidatePart>> pools_;
  std::vector<std::size_t> pool_of_;
  std::vector<long long> capacity_after_;
  Mask full_ = 0;
  long long dim_bound_ = 0;
};

Cell assemble(const ProductWalker& walker, const std::vector<std::size_t>& choice) {
  Cell c;
  c.parts.reserve(choice.size());
  for (std::size_t i = 0; i < choice.size(); ++i)
    c.parts.push_back(walker.candidates(static_cast<int>(i))[choice[i]].part);
  return c;
}

/// Runs `job(begin, end, slot)` over contiguous slices of the first color's
/// candidates, one slice per worker.
template <typename Job>
void fan_out(std::size_t total, unsigned workers, Job&& job) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(total, 1))));
  if (workers == 1) {
    job(0, total, 0u);
    return;
  }
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(workers);
  const std::size_t chunk = (total + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        job(std::min(total, w * chunk), std::min(total, (w + 1) * chunk), w);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

bool trivially_empty(const ComplexSpec& spec) {
  return spec.require_cover && !is_nonempty(spec);
}

}  // namespace

std::vector<Part> candidate_parts(const SimpleGraph& g, int size) {
  std::vector<Part> out;
  for (auto& c : build_candidates(g, size)) out.push_back(std::move(c.part));
  return out;
}

void for_each_cell(const ComplexSpec& spec, std::optional<int> dim_filter,
                   const std::function<void(const Cell&)>& visit) {
  if (trivially_empty(spec)) return;
  ProductWalker walker(spec, dim_filter);
  walker.walk(0, walker.first_color_candidates(),
              [&](const std::vector<std::size_t>& choice, int) { visit(assemble(walker, choice)); });
}

std::vector<Cell> enumerate_cells(const ComplexSpec& spec, std::optional<int> dim_filter,
                                  unsigned workers) {
  if (trivially_empty(spec)) return {};
  ProductWalker walker(spec, dim_filter);
  std::vector<std::vector<Cell>> slices(std::max(1u, workers));
  fan_out(walker.first_color_candidates(), workers, [&](std::size_t begin, std::size_t end, unsigned slot) {
    walker.walk(begin, end, [&](const std::vector<std::size_t>& choice, int) {
      slices[slot].push_back(assemble(walker, choice));
    });
  });
  std::vector<Cell> out;
  for (auto& slice : slices) std::move(slice.begin(), slice.end(), std::back_inserter(out));
  return out;
}

FVector f_vector(const ComplexSpec& spec, unsigned workers) {
  if (trivially_empty(spec)) return FVector{{0}};
  ProductWalker walker(spec, std::nullopt);
  const std::size_t length = spec.require_cover ? static_cast<std::size_t>(max_dimension(spec)) + 1
                                                : static_cast<std::size_t>(spec.colors.total()) + 1;
  std::vector<std::vector<std::int64_t>> partial(std::max(1u, workers),
                                                 std::vector<std::int64_t>(length, 0));
  fan_out(walker.first_color_candidates(), workers, [&](std::size_t begin, std::size_t end, unsigned slot) {
    auto& counts = partial[slot];
    walker.walk(begin, end, [&](const std::vector<std::size_t>&, int dim) { ++counts[dim]; });
  });
  FVector f{std::vector<std::int64_t>(length, 0)};
  for (const auto& counts : partial)
    for (std::size_t d = 0; d < length; ++d) f.counts[d] += counts[d];
  if (!spec.require_cover) {
    while (f.counts.size() > 1 && f.counts.back() == 0) f.counts.pop_back();
  }
  return f;
}

}  // namespace stirling
