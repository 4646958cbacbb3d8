#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "geometry.hpp"

namespace pdc {

// Unweighted bipartite graph given as adjacency lists over the left side.
struct BipartiteGraph {
  int left_size = 0;
  int right_size = 0;
  std::vector<std::vector<int>> adjacency;  // adjacency[l] = admissible right indices
};

// Result of a matching computation. pair_of_left[l] is the right partner of
// left vertex l, or -1 when unmatched. Costs are filled only by the engines
// that compute them.
struct Matching {
  std::vector<int> pair_of_left;
  std::optional<double> bottleneck_cost;
  std::optional<double> total_cost;

  int cardinality() const {
    int c = 0;
    for (int r : pair_of_left)
      if (r >= 0) ++c;
    return c;
  }
};

// Deterministic nonnegative cost between a left index and a right index.
using CostOracle = std::function<double(int, int)>;

// Maximum-cardinality matching via Hopcroft-Karp. Left vertices are scanned in
// increasing index order, which fixes the matching among optima.
Matching max_cardinality_matching(const BipartiteGraph& g);

// Perfect matching minimizing the maximum edge cost. The optimum is always one
// of the pairwise costs, so the search bisects the sorted deduplicated cost
// multiset and never iterates on a continuous radius.
Matching bottleneck_perfect_matching(std::size_t left_size, std::size_t right_size,
                                     const CostOracle& cost);
Matching bottleneck_perfect_matching(const std::vector<AugPoint>& left,
                                     const std::vector<AugPoint>& right,
                                     const CostOracle& cost);

// Perfect matching minimizing the total edge cost (exact, Hungarian-class).
Matching min_cost_perfect_matching(std::size_t left_size, std::size_t right_size,
                                   const CostOracle& cost);
Matching min_cost_perfect_matching(const std::vector<AugPoint>& left,
                                   const std::vector<AugPoint>& right,
                                   const CostOracle& cost);

// Directed graph with unit arc capacities. The arc list must be acyclic;
// source has no in-arcs and sink no out-arcs.
struct FlowNetwork {
  int node_count = 0;
  int source = 0;
  int sink = 0;
  std::vector<std::pair<int, int>> arcs;
};

struct FlowResult {
  int value = 0;
  std::vector<char> arc_used;  // parallel to FlowNetwork::arcs
};

// Maximum s-t flow under unit capacities (Dinic). Throws on dangling node ids.
FlowResult max_flow_unit(const FlowNetwork& net);

// Materializes costs up to this side length; larger instances stay lazy.
inline constexpr std::size_t kCostCacheLimit = 4096;

// Evaluation wrapper that caches the full cost matrix at desk scale.
class CostCache {
 public:
  CostCache(std::size_t left_size, std::size_t right_size, const CostOracle& cost);
  double operator()(std::size_t l, std::size_t r) const {
    if (!table_.empty()) return table_[l * right_ + r];
    return cost_(static_cast<int>(l), static_cast<int>(r));
  }
  std::size_t left_size() const { return left_; }
  std::size_t right_size() const { return right_; }

 private:
  std::size_t left_;
  std::size_t right_;
  const CostOracle& cost_;
  std::vector<double> table_;
};

}  // namespace pdc
