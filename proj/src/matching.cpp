#include "matching.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>

namespace pdc {

namespace {

void check_graph(const BipartiteGraph& g) {
  if (g.left_size < 0 || g.right_size < 0) {
    throw std::invalid_argument("bipartite graph: negative side size");
  }
  if (g.adjacency.size() != static_cast<std::size_t>(g.left_size)) {
    throw std::invalid_argument("bipartite graph: adjacency size != left_size");
  }
  for (const auto& row : g.adjacency) {
    for (int r : row) {
      if (r < 0 || r >= g.right_size) {
        throw std::invalid_argument("bipartite graph: right index out of range");
      }
    }
  }
}

constexpr int kInf = std::numeric_limits<int>::max();

// Hopcroft-Karp state; all arrays are sized once per invocation so the engine
// stays reentrant.
struct HopcroftKarp {
  const BipartiteGraph& g;
  std::vector<int> match_left;   // left -> right or -1
  std::vector<int> match_right;  // right -> left or -1
  std::vector<int> dist;

  explicit HopcroftKarp(const BipartiteGraph& g_)
      : g(g_), match_left(g_.left_size, -1), match_right(g_.right_size, -1),
        dist(g_.left_size, kInf) {}

  bool bfs() {
    std::queue<int> q;
    bool reachable_free = false;
    for (int l = 0; l < g.left_size; ++l) {
      if (match_left[l] < 0) {
        dist[l] = 0;
        q.push(l);
      } else {
        dist[l] = kInf;
      }
    }
    while (!q.empty()) {
      int l = q.front();
      q.pop();
      for (int r : g.adjacency[l]) {
        int l2 = match_right[r];
        if (l2 < 0) {
          reachable_free = true;
        } else if (dist[l2] == kInf) {
          dist[l2] = dist[l] + 1;
          q.push(l2);
        }
      }
    }
    return reachable_free;
  }

  bool dfs(int l) {
    for (int r : g.adjacency[l]) {
      int l2 = match_right[r];
      if (l2 < 0 || (dist[l2] == dist[l] + 1 && dfs(l2))) {
        match_left[l] = r;
        match_right[r] = l;
        return true;
      }
    }
    dist[l] = kInf;
    return false;
  }

  int solve() {
    int size = 0;
    while (bfs()) {
      for (int l = 0; l < g.left_size; ++l) {
        if (match_left[l] < 0 && dfs(l)) ++size;
      }
    }
    return size;
  }
};

}  // namespace

Matching max_cardinality_matching(const BipartiteGraph& g) {
  check_graph(g);
  HopcroftKarp hk(g);
  hk.solve();
  Matching m;
  m.pair_of_left = std::move(hk.match_left);
  return m;
}

CostCache::CostCache(std::size_t left_size, std::size_t right_size, const CostOracle& cost)
    : left_(left_size), right_(right_size), cost_(cost) {
  if (left_ <= kCostCacheLimit && right_ <= kCostCacheLimit) {
    table_.resize(left_ * right_);
    for (std::size_t l = 0; l < left_; ++l) {
      for (std::size_t r = 0; r < right_; ++r) {
        table_[l * right_ + r] = cost_(static_cast<int>(l), static_cast<int>(r));
      }
    }
  }
}

namespace {

BipartiteGraph admissible_graph(const CostCache& cost, double threshold) {
  BipartiteGraph g;
  g.left_size = static_cast<int>(cost.left_size());
  g.right_size = static_cast<int>(cost.right_size());
  g.adjacency.resize(cost.left_size());
  for (std::size_t l = 0; l < cost.left_size(); ++l) {
    for (std::size_t r = 0; r < cost.right_size(); ++r) {
      if (cost(l, r) <= threshold) g.adjacency[l].push_back(static_cast<int>(r));
    }
  }
  return g;
}

}  // namespace

Matching bottleneck_perfect_matching(std::size_t left_size, std::size_t right_size,
                                     const CostOracle& cost) {
  if (left_size != right_size) {
    throw std::invalid_argument("bottleneck_perfect_matching: size mismatch (" +
                                std::to_string(left_size) + " vs " +
                                std::to_string(right_size) + ")");
  }
  const std::size_t n = left_size;
  Matching result;
  if (n == 0) {
    result.bottleneck_cost = 0.0;
    return result;
  }
  CostCache cache(n, n, cost);
  std::vector<double> candidates;
  candidates.reserve(n * n);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t r = 0; r < n; ++r) candidates.push_back(cache(l, r));
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  // Feasibility is monotone in the threshold: find the first feasible index.
  std::size_t lo = 0, hi = candidates.size() - 1;
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    Matching m = max_cardinality_matching(admissible_graph(cache, candidates[mid]));
    if (m.cardinality() == static_cast<int>(n)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  Matching m = max_cardinality_matching(admissible_graph(cache, candidates[lo]));
  if (m.cardinality() != static_cast<int>(n)) {
    throw std::logic_error("bottleneck_perfect_matching: no perfect matching at max cost");
  }
  double bottleneck = 0.0;
  for (std::size_t l = 0; l < n; ++l) {
    bottleneck = std::max(bottleneck, cache(l, static_cast<std::size_t>(m.pair_of_left[l])));
  }
  m.bottleneck_cost = bottleneck;
  return m;
}

Matching bottleneck_perfect_matching(const std::vector<AugPoint>& left,
                                     const std::vector<AugPoint>& right,
                                     const CostOracle& cost) {
  return bottleneck_perfect_matching(left.size(), right.size(), cost);
}

Matching min_cost_perfect_matching(std::size_t left_size, std::size_t right_size,
                                   const CostOracle& cost) {
  if (left_size != right_size) {
    throw std::invalid_argument("min_cost_perfect_matching: size mismatch (" +
                                std::to_string(left_size) + " vs " +
                                std::to_string(right_size) + ")");
  }
  const std::size_t n = left_size;
  Matching result;
  if (n == 0) {
    result.total_cost = 0.0;
    return result;
  }
  CostCache cache(n, n, cost);

  // Shortest augmenting path formulation with potentials (Jonker-Volgenant
  // flavor), 1-indexed with a dummy row/column 0.
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<int> way(n + 1, 0), p(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = static_cast<int>(i);
    int j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<char> used(n + 1, false);
    do {
      used[j0] = true;
      int i0 = p[j0], j1 = -1;
      double delta = inf;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        double cur = cache(static_cast<std::size_t>(i0 - 1), j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = static_cast<int>(j);
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  result.pair_of_left.assign(n, -1);
  for (std::size_t j = 1; j <= n; ++j) {
    if (p[j] > 0) result.pair_of_left[static_cast<std::size_t>(p[j] - 1)] = static_cast<int>(j - 1);
  }
  // Kahan summation over the matched edges.
  double total = 0.0, comp = 0.0;
  for (std::size_t l = 0; l < n; ++l) {
    double c = cache(l, static_cast<std::size_t>(result.pair_of_left[l]));
    double y = c - comp;
    double t = total + y;
    comp = (t - total) - y;
    total = t;
  }
  result.total_cost = total;
  return result;
}

Matching min_cost_perfect_matching(const std::vector<AugPoint>& left,
                                   const std::vector<AugPoint>& right,
                                   const CostOracle& cost) {
  return min_cost_perfect_matching(left.size(), right.size(), cost);
}

FlowResult max_flow_unit(const FlowNetwork& net) {
  if (net.node_count <= 0) throw std::invalid_argument("max_flow_unit: empty network");
  auto check_node = [&](int v, const char* what) {
    if (v < 0 || v >= net.node_count) {
      throw std::invalid_argument(std::string("max_flow_unit: dangling node id in ") + what);
    }
  };
  check_node(net.source, "source");
  check_node(net.sink, "sink");
  if (net.source == net.sink) throw std::invalid_argument("max_flow_unit: source == sink");

  // Residual representation: forward arcs carry capacity 1, reverse arcs 0.
  struct Edge {
    int to;
    int cap;
    int rev;
  };
  std::vector<std::vector<Edge>> adj(static_cast<std::size_t>(net.node_count));
  std::vector<std::pair<int, int>> arc_pos;  // (node, edge slot) of each input arc
  arc_pos.reserve(net.arcs.size());
  for (const auto& [from, to] : net.arcs) {
    check_node(from, "arc");
    check_node(to, "arc");
    arc_pos.emplace_back(from, static_cast<int>(adj[static_cast<std::size_t>(from)].size()));
    adj[static_cast<std::size_t>(from)].push_back(
        {to, 1, static_cast<int>(adj[static_cast<std::size_t>(to)].size())});
    adj[static_cast<std::size_t>(to)].push_back(
        {from, 0, static_cast<int>(adj[static_cast<std::size_t>(from)].size()) - 1});
  }

  std::vector<int> level(static_cast<std::size_t>(net.node_count));
  std::vector<std::size_t> iter(static_cast<std::size_t>(net.node_count));

  auto bfs = [&]() {
    std::fill(level.begin(), level.end(), -1);
    std::queue<int> q;
    level[static_cast<std::size_t>(net.source)] = 0;
    q.push(net.source);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (const Edge& e : adj[static_cast<std::size_t>(v)]) {
        if (e.cap > 0 && level[static_cast<std::size_t>(e.to)] < 0) {
          level[static_cast<std::size_t>(e.to)] = level[static_cast<std::size_t>(v)] + 1;
          q.push(e.to);
        }
      }
    }
    return level[static_cast<std::size_t>(net.sink)] >= 0;
  };

  std::function<int(int)> dfs = [&](int v) -> int {
    if (v == net.sink) return 1;
    for (std::size_t& i = iter[static_cast<std::size_t>(v)];
         i < adj[static_cast<std::size_t>(v)].size(); ++i) {
      Edge& e = adj[static_cast<std::size_t>(v)][i];
      if (e.cap > 0 && level[static_cast<std::size_t>(v)] < level[static_cast<std::size_t>(e.to)]) {
        if (dfs(e.to)) {
          e.cap -= 1;
          adj[static_cast<std::size_t>(e.to)][static_cast<std::size_t>(e.rev)].cap += 1;
          return 1;
        }
      }
    }
    return 0;
  };

  FlowResult out;
  while (bfs()) {
    std::fill(iter.begin(), iter.end(), 0);
    while (dfs(net.source)) ++out.value;
  }
  out.arc_used.assign(net.arcs.size(), 0);
  for (std::size_t a = 0; a < net.arcs.size(); ++a) {
    const auto& [node, slot] = arc_pos[a];
    out.arc_used[a] =
        adj[static_cast<std::size_t>(node)][static_cast<std::size_t>(slot)].cap == 0 ? 1 : 0;
  }
  return out;
}

}  // namespace pdc
