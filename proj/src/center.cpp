#include "center.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

namespace pdc {

Objective Objective::wasserstein(double p) {
  if (!std::isfinite(p) || p < 1.0) {
    throw std::invalid_argument("Objective::wasserstein: p must be finite and >= 1");
  }
  return Objective(false, p);
}

Diagram center_diagram_of(const CenterSolution& sol) {
  Diagram d;
  for (const AugPoint& c : sol.centers) {
    if (!c.on_diagonal) d.points.push_back(c.pt);
  }
  return d;
}

namespace detail {

std::vector<AugPoint> to_aug(const std::vector<Point>& pts, int color) {
  std::vector<AugPoint> out;
  out.reserve(pts.size());
  for (const Point& p : pts) out.push_back(AugPoint{p, color, false});
  return out;
}

namespace {

void check_two_sets(const std::vector<AugPoint>& a, const std::vector<AugPoint>& b,
                    const char* what) {
  if (a.size() != b.size()) {
    throw std::invalid_argument(std::string(what) + ": size mismatch");
  }
  if (a.empty()) {
    throw std::invalid_argument(std::string(what) + ": empty input");
  }
}

std::vector<AugPoint> union_of(const std::vector<AugPoint>& a, const std::vector<AugPoint>& b) {
  std::vector<AugPoint> u = a;
  u.insert(u.end(), b.begin(), b.end());
  return u;
}

std::vector<double> sorted_unique(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool lex_less(const Point& a, const Point& b) {
  return a.x < b.x || (a.x == b.x && a.y < b.y);
}

double kahan_pow_sum(const std::vector<double>& costs, double p) {
  double total = 0.0, comp = 0.0;
  for (double c : costs) {
    double y = std::pow(c, p) - comp;
    double t = total + y;
    comp = (t - total) - y;
    total = t;
  }
  return total;
}

}  // namespace

CenterSolution center2_no_replacement_impl(const std::vector<AugPoint>& a,
                                           const std::vector<AugPoint>& b, const CostModel& cm) {
  check_two_sets(a, b, "center2_no_replacement");
  const int n = static_cast<int>(a.size());
  const std::vector<AugPoint> centers = union_of(a, b);
  const int k = static_cast<int>(centers.size());  // 2n

  std::vector<double> to_a(static_cast<std::size_t>(k) * n);
  std::vector<double> to_b(static_cast<std::size_t>(k) * n);
  std::vector<double> cand;
  cand.reserve(static_cast<std::size_t>(k) * k);
  for (int c = 0; c < k; ++c) {
    for (int q = 0; q < k; ++q) cand.push_back(cm(centers[c], centers[q]));
    for (int i = 0; i < n; ++i) to_a[static_cast<std::size_t>(c) * n + i] = cm(centers[c], a[i]);
    for (int j = 0; j < n; ++j) to_b[static_cast<std::size_t>(c) * n + j] = cm(centers[c], b[j]);
  }
  cand = sorted_unique(std::move(cand));

  // Four layers: P1, two copies of P1 u P2 joined by a single arc that limits
  // each center to one use, then P2. Unit capacities throughout.
  const int id_s = 0;
  const int id_l1 = 1;            // n nodes
  const int id_l2 = id_l1 + n;    // k nodes (center in)
  const int id_l3 = id_l2 + k;    // k nodes (center out)
  const int id_l4 = id_l3 + k;    // n nodes
  const int id_t = id_l4 + n;

  auto build = [&](double r) {
    FlowNetwork net;
    net.node_count = id_t + 1;
    net.source = id_s;
    net.sink = id_t;
    for (int i = 0; i < n; ++i) net.arcs.emplace_back(id_s, id_l1 + i);
    for (int i = 0; i < n; ++i) {
      for (int c = 0; c < k; ++c) {
        if (to_a[static_cast<std::size_t>(c) * n + i] <= r) {
          net.arcs.emplace_back(id_l1 + i, id_l2 + c);
        }
      }
    }
    for (int c = 0; c < k; ++c) net.arcs.emplace_back(id_l2 + c, id_l3 + c);
    for (int c = 0; c < k; ++c) {
      for (int j = 0; j < n; ++j) {
        if (to_b[static_cast<std::size_t>(c) * n + j] <= r) {
          net.arcs.emplace_back(id_l3 + c, id_l4 + j);
        }
      }
    }
    for (int j = 0; j < n; ++j) net.arcs.emplace_back(id_l4 + j, id_t);
    return net;
  };

  std::size_t lo = 0, hi = cand.size() - 1;
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    if (max_flow_unit(build(cand[mid])).value == n) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }

  const FlowNetwork net = build(cand[lo]);
  const FlowResult flow = max_flow_unit(net);
  if (flow.value != n) {
    throw std::logic_error("center2_no_replacement: infeasible at maximum radius");
  }
  std::vector<int> center_in(static_cast<std::size_t>(k), -1);
  std::vector<int> center_out(static_cast<std::size_t>(k), -1);
  for (std::size_t e = 0; e < net.arcs.size(); ++e) {
    if (!flow.arc_used[e]) continue;
    const auto& [from, to] = net.arcs[e];
    if (from >= id_l1 && from < id_l2 && to >= id_l2 && to < id_l3) {
      center_in[static_cast<std::size_t>(to - id_l2)] = from - id_l1;
    } else if (from >= id_l3 && from < id_l4 && to >= id_l4 && to < id_t) {
      center_out[static_cast<std::size_t>(from - id_l3)] = to - id_l4;
    }
  }

  struct Entry {
    int i, j, c;
  };
  std::vector<Entry> entries;
  for (int c = 0; c < k; ++c) {
    if (center_in[static_cast<std::size_t>(c)] >= 0) {
      entries.push_back({center_in[static_cast<std::size_t>(c)],
                         center_out[static_cast<std::size_t>(c)], c});
    }
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) { return x.i < y.i; });

  CenterSolution sol;
  sol.mode = SelectionMode::NoReplacement;
  double value = 0.0;
  for (const Entry& e : entries) {
    sol.centers.push_back(centers[static_cast<std::size_t>(e.c)]);
    sol.clusters.push_back({e.i, e.j});
    value = std::max(value, std::max(to_a[static_cast<std::size_t>(e.c) * n + e.i],
                                     to_b[static_cast<std::size_t>(e.c) * n + e.j]));
  }
  sol.objective_value = value;
  return sol;
}

CenterSolution center2_with_replacement_impl(const std::vector<AugPoint>& a,
                                             const std::vector<AugPoint>& b,
                                             const CostModel& cm) {
  check_two_sets(a, b, "center2_with_replacement");
  const int n = static_cast<int>(a.size());
  const std::vector<AugPoint> witnesses = union_of(a, b);
  const int k = static_cast<int>(witnesses.size());

  std::vector<double> to_a(static_cast<std::size_t>(k) * n);
  std::vector<double> to_b(static_cast<std::size_t>(k) * n);
  std::vector<double> cand;
  cand.reserve(static_cast<std::size_t>(k) * k);
  for (int w = 0; w < k; ++w) {
    for (int q = 0; q < k; ++q) cand.push_back(cm(witnesses[w], witnesses[q]));
    for (int i = 0; i < n; ++i) to_a[static_cast<std::size_t>(w) * n + i] = cm(witnesses[w], a[i]);
    for (int j = 0; j < n; ++j) to_b[static_cast<std::size_t>(w) * n + j] = cm(witnesses[w], b[j]);
  }
  cand = sorted_unique(std::move(cand));

  auto admissible = [&](double r) {
    BipartiteGraph g;
    g.left_size = n;
    g.right_size = n;
    g.adjacency.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int w = 0; w < k; ++w) {
          if (to_a[static_cast<std::size_t>(w) * n + i] <= r &&
              to_b[static_cast<std::size_t>(w) * n + j] <= r) {
            g.adjacency[static_cast<std::size_t>(i)].push_back(j);
            break;
          }
        }
      }
    }
    return g;
  };

  std::size_t lo = 0, hi = cand.size() - 1;
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    if (max_cardinality_matching(admissible(cand[mid])).cardinality() == n) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  const Matching m = max_cardinality_matching(admissible(cand[lo]));
  if (m.cardinality() != n) {
    throw std::logic_error("center2_with_replacement: infeasible at maximum radius");
  }

  CenterSolution sol;
  sol.mode = SelectionMode::WithReplacement;
  double value = 0.0;
  for (int i = 0; i < n; ++i) {
    const int j = m.pair_of_left[static_cast<std::size_t>(i)];
    int best_w = -1;
    double best_cost = std::numeric_limits<double>::infinity();
    for (int w = 0; w < k; ++w) {
      const double cost = std::max(to_a[static_cast<std::size_t>(w) * n + i],
                                   to_b[static_cast<std::size_t>(w) * n + j]);
      if (cost < best_cost ||
          (cost == best_cost && best_w >= 0 &&
           lex_less(witnesses[static_cast<std::size_t>(w)].pt,
                    witnesses[static_cast<std::size_t>(best_w)].pt))) {
        best_cost = cost;
        best_w = w;
      }
    }
    sol.centers.push_back(witnesses[static_cast<std::size_t>(best_w)]);
    sol.clusters.push_back({i, j});
    value = std::max(value, best_cost);
  }
  sol.objective_value = value;
  return sol;
}

CenterSolution center2_continuous_impl(const std::vector<AugPoint>& a,
                                       const std::vector<AugPoint>& b, const CostModel& cm) {
  check_two_sets(a, b, "center2_continuous");
  const int n = static_cast<int>(a.size());
  const CostOracle cost = [&](int i, int j) {
    return cm(a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(j)]);
  };
  const Matching m = bottleneck_perfect_matching(a, b, cost);

  CenterSolution sol;
  sol.mode = SelectionMode::Continuous;
  double value = 0.0;
  for (int i = 0; i < n; ++i) {
    const int j = m.pair_of_left[static_cast<std::size_t>(i)];
    const AugPoint& u = a[static_cast<std::size_t>(i)];
    const AugPoint& v = b[static_cast<std::size_t>(j)];
    AugPoint mid;
    mid.pt = Point{(u.pt.x + v.pt.x) / 2.0, (u.pt.y + v.pt.y) / 2.0};
    mid.on_diagonal = u.on_diagonal && v.on_diagonal;
    sol.centers.push_back(mid);
    sol.clusters.push_back({i, j});
    value = std::max(value, std::max(cm(mid, u), cm(mid, v)));
  }
  sol.objective_value = value;
  return sol;
}

CenterSolution approx_center_impl(const std::vector<std::vector<AugPoint>>& sets,
                                  SelectionMode mode, const CostModel& cm,
                                  const Objective& objective) {
  const std::size_t m = sets.size();
  if (m < 2) throw std::invalid_argument("approx_center: need m >= 2 sets");
  const std::size_t n = sets[0].size();
  for (const auto& s : sets) {
    if (s.size() != n) throw std::invalid_argument("approx_center: size mismatch");
  }

  CenterSolution sol;
  sol.mode = mode;
  sol.objective = objective;
  sol.clusters.assign(n, {});
  for (std::size_t j = 0; j < n; ++j) {
    sol.centers.push_back(sets[0][j]);
    sol.clusters[j].push_back(static_cast<int>(j));
  }

  for (std::size_t i = 1; i < m; ++i) {
    const CostOracle cost = [&](int l, int r) {
      const double c = cm(sets[0][static_cast<std::size_t>(l)], sets[i][static_cast<std::size_t>(r)]);
      return objective.is_bottleneck() ? c : std::pow(c, objective.exponent());
    };
    const Matching match = objective.is_bottleneck()
                               ? bottleneck_perfect_matching(n, n, cost)
                               : min_cost_perfect_matching(n, n, cost);
    for (std::size_t j = 0; j < n; ++j) {
      sol.clusters[j].push_back(match.pair_of_left[j]);
    }
  }

  double value = 0.0;
  if (objective.is_bottleneck()) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < m; ++i) {
        const AugPoint& member = sets[i][static_cast<std::size_t>(sol.clusters[j][i])];
        value = std::max(value, cm(sol.centers[j], member));
      }
    }
  } else {
    const double p = objective.exponent();
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<double> costs(n);
      for (std::size_t j = 0; j < n; ++j) {
        costs[j] = cm(sol.centers[j], sets[i][static_cast<std::size_t>(sol.clusters[j][i])]);
      }
      value = std::max(value, std::pow(kahan_pow_sum(costs, p), 1.0 / p));
    }
  }
  sol.objective_value = value;
  return sol;
}

namespace {

// Exact smallest enclosing circle of a small point list: the optimum is
// determined by two or three of the points, so all pairs and triples are
// candidate circles.
struct Circle {
  Point c;
  double r = 0.0;
};

Circle smallest_enclosing_circle(const std::vector<Point>& pts) {
  if (pts.empty()) return {Point{0.0, 0.0}, 0.0};
  auto covers = [&](const Circle& circ) {
    const double slack = 1e-12 * (1.0 + circ.r);
    for (const Point& p : pts) {
      if (std::hypot(p.x - circ.c.x, p.y - circ.c.y) > circ.r + slack) return false;
    }
    return true;
  };
  Circle best{pts[0], std::numeric_limits<double>::infinity()};
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Circle single{pts[i], 0.0};
    if (covers(single)) return single;
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      Circle c;
      c.c = Point{(pts[i].x + pts[j].x) / 2.0, (pts[i].y + pts[j].y) / 2.0};
      c.r = std::hypot(pts[i].x - c.c.x, pts[i].y - c.c.y);
      if (c.r < best.r && covers(c)) best = c;
    }
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      for (std::size_t l = j + 1; l < pts.size(); ++l) {
        const Point &A = pts[i], &B = pts[j], &C = pts[l];
        const double d = 2.0 * (A.x * (B.y - C.y) + B.x * (C.y - A.y) + C.x * (A.y - B.y));
        if (std::abs(d) < 1e-30) continue;  // collinear
        const double a2 = A.x * A.x + A.y * A.y;
        const double b2 = B.x * B.x + B.y * B.y;
        const double c2 = C.x * C.x + C.y * C.y;
        Circle c;
        c.c.x = (a2 * (B.y - C.y) + b2 * (C.y - A.y) + c2 * (A.y - B.y)) / d;
        c.c.y = (a2 * (C.x - B.x) + b2 * (A.x - C.x) + c2 * (B.x - A.x)) / d;
        c.r = std::hypot(A.x - c.c.x, A.y - c.c.y);
        if (c.r < best.r && covers(c)) best = c;
      }
    }
  }
  return best;
}

}  // namespace

ContinuousCenter best_continuous_center(const std::vector<AugPoint>& members,
                                        const CostModel& cm) {
  if (members.empty()) {
    throw std::invalid_argument("best_continuous_center: empty cluster");
  }
  const bool all_diag = cm.diagonal_rule &&
                        std::all_of(members.begin(), members.end(),
                                    [](const AugPoint& p) { return p.on_diagonal; });
  if (all_diag) {
    double lo = members[0].pt.x, hi = members[0].pt.x;
    for (const AugPoint& p : members) {
      lo = std::min(lo, p.pt.x);
      hi = std::max(hi, p.pt.x);
    }
    const double t = (lo + hi) / 2.0;
    return {AugPoint{Point{t, t}, 0, true}, 0.0};
  }

  auto eval = [&](const AugPoint& c) {
    double v = 0.0;
    for (const AugPoint& p : members) v = std::max(v, cm(c, p));
    return v;
  };

  ContinuousCenter best;
  switch (cm.metric.kind()) {
    case Metric::Kind::LInf: {
      double min_x = members[0].pt.x, max_x = min_x;
      double min_y = members[0].pt.y, max_y = min_y;
      for (const AugPoint& p : members) {
        min_x = std::min(min_x, p.pt.x);
        max_x = std::max(max_x, p.pt.x);
        min_y = std::min(min_y, p.pt.y);
        max_y = std::max(max_y, p.pt.y);
      }
      AugPoint mid;
      mid.pt = Point{(min_x + max_x) / 2.0, (min_y + max_y) / 2.0};
      mid.on_diagonal = cm.diagonal_rule && mid.pt.x == mid.pt.y;
      best = {mid, eval(mid)};
      if (cm.diagonal_rule) {
        // A diagonal center covers diagonal members for free; only the real
        // members constrain its position.
        double lo = std::numeric_limits<double>::infinity();
        double hi = -std::numeric_limits<double>::infinity();
        for (const AugPoint& p : members) {
          if (p.on_diagonal) continue;
          lo = std::min(lo, std::min(p.pt.x, p.pt.y));
          hi = std::max(hi, std::max(p.pt.x, p.pt.y));
        }
        const double t = (lo + hi) / 2.0;
        AugPoint diag{Point{t, t}, 0, true};
        const double cost = eval(diag);
        if (cost < best.cost) best = {diag, cost};
      }
      break;
    }
    case Metric::Kind::L2: {
      if (cm.diagonal_rule) {
        throw std::invalid_argument("continuous diagram centers use the Linf metric");
      }
      std::vector<Point> pts;
      pts.reserve(members.size());
      for (const AugPoint& p : members) pts.push_back(p.pt);
      const Circle c = smallest_enclosing_circle(pts);
      AugPoint center{c.c, 0, false};
      best = {center, eval(center)};
      break;
    }
    case Metric::Kind::Lp:
      throw std::invalid_argument("continuous centers support the L2 and Linf metrics");
  }
  return best;
}

double brute_force_workload_impl(std::size_t n, std::size_t m) {
  double fact = 1.0;
  for (std::size_t i = 2; i <= n; ++i) fact *= static_cast<double>(i);
  double total = 1.0;
  for (std::size_t i = 1; i < m; ++i) {
    total *= fact;
    if (total > 1e18) return total;
  }
  return total;
}

CenterSolution brute_force_center_impl(const std::vector<std::vector<AugPoint>>& sets,
                                       SelectionMode mode, const CostModel& cm,
                                       const Objective& objective) {
  const std::size_t m = sets.size();
  if (m < 2) throw std::invalid_argument("brute_force_center: need m >= 2 sets");
  const std::size_t n = sets[0].size();
  for (const auto& s : sets) {
    if (s.size() != n) throw std::invalid_argument("brute_force_center: size mismatch");
  }
  if (n == 0) throw std::invalid_argument("brute_force_center: empty input");
  if (brute_force_workload_impl(n, m) > 1e7) {
    throw std::length_error("brute_force_center: instance too large");
  }

  // Flatten all points: they are both cluster members and candidate centers.
  std::vector<AugPoint> cand;
  std::vector<std::size_t> offset(m);
  for (std::size_t i = 0; i < m; ++i) {
    offset[i] = cand.size();
    cand.insert(cand.end(), sets[i].begin(), sets[i].end());
  }
  const std::size_t total = cand.size();
  std::vector<double> table(total * total);
  for (std::size_t c = 0; c < total; ++c) {
    for (std::size_t q = 0; q < total; ++q) table[c * total + q] = cm(cand[c], cand[q]);
  }

  const bool bottleneck = objective.is_bottleneck();
  const double p = bottleneck ? 1.0 : objective.exponent();

  std::vector<std::vector<int>> perm(m - 1);
  for (auto& pm : perm) {
    pm.resize(n);
    std::iota(pm.begin(), pm.end(), 0);
  }
  auto advance = [&]() {
    for (std::size_t k = perm.size(); k-- > 0;) {
      if (std::next_permutation(perm[k].begin(), perm[k].end())) return true;
    }
    return false;
  };

  std::vector<std::size_t> member_gid(n * m);
  auto cluster_cost = [&](std::size_t j, std::size_t c) {
    double v = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      v = std::max(v, table[c * total + member_gid[j * m + i]]);
    }
    return v;
  };

  double best_value = std::numeric_limits<double>::infinity();
  std::vector<std::vector<int>> best_perm;
  std::vector<AugPoint> best_centers;

  do {
    for (std::size_t j = 0; j < n; ++j) {
      member_gid[j * m] = offset[0] + j;
      for (std::size_t i = 1; i < m; ++i) {
        member_gid[j * m + i] = offset[i] + static_cast<std::size_t>(perm[i - 1][j]);
      }
    }

    std::vector<AugPoint> centers(n);
    double value = 0.0;
    bool usable = true;

    if (mode == SelectionMode::Continuous) {
      std::vector<AugPoint> members(m);
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < m; ++i) members[i] = cand[member_gid[j * m + i]];
        const ContinuousCenter cc = best_continuous_center(members, cm);
        centers[j] = cc.center;
        value = std::max(value, cc.cost);
      }
    } else if (mode == SelectionMode::WithReplacement) {
      for (std::size_t j = 0; j < n; ++j) {
        std::size_t best_c = 0;
        double best_cost = std::numeric_limits<double>::infinity();
        for (std::size_t c = 0; c < total; ++c) {
          const double cost = cluster_cost(j, c);
          if (cost < best_cost ||
              (cost == best_cost && lex_less(cand[c].pt, cand[best_c].pt))) {
            best_cost = cost;
            best_c = c;
          }
        }
        centers[j] = cand[best_c];
        value = std::max(value, best_cost);
      }
    } else {
      // Lower bound: every cluster takes its unconstrained best center. Only
      // clusterings that could still win pay for the assignment solve.
      double lb = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        double cluster_best = std::numeric_limits<double>::infinity();
        for (std::size_t c = 0; c < total; ++c) {
          cluster_best = std::min(cluster_best, cluster_cost(j, c));
        }
        lb = std::max(lb, cluster_best);
      }
      if (bottleneck && lb >= best_value) {
        usable = false;
      } else {
        std::vector<double> costs;
        costs.reserve(n * total);
        for (std::size_t j = 0; j < n; ++j) {
          for (std::size_t c = 0; c < total; ++c) costs.push_back(cluster_cost(j, c));
        }
        std::vector<double> levels = sorted_unique(costs);
        auto assignment_at = [&](double r) {
          BipartiteGraph g;
          g.left_size = static_cast<int>(n);
          g.right_size = static_cast<int>(total);
          g.adjacency.resize(n);
          for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t c = 0; c < total; ++c) {
              if (costs[j * total + c] <= r) g.adjacency[j].push_back(static_cast<int>(c));
            }
          }
          return max_cardinality_matching(g);
        };
        std::size_t lo = 0, hi = levels.size() - 1;
        while (lo < hi) {
          std::size_t mid = lo + (hi - lo) / 2;
          if (assignment_at(levels[mid]).cardinality() == static_cast<int>(n)) {
            hi = mid;
          } else {
            lo = mid + 1;
          }
        }
        const Matching match = assignment_at(levels[lo]);
        if (match.cardinality() != static_cast<int>(n)) {
          usable = false;  // cannot happen: every cluster admits every center at max cost
        } else {
          for (std::size_t j = 0; j < n; ++j) {
            const std::size_t c = static_cast<std::size_t>(match.pair_of_left[j]);
            centers[j] = cand[c];
            value = std::max(value, costs[j * total + c]);
          }
        }
      }
    }

    if (usable && !bottleneck) {
      // Recompute the Wasserstein objective of the chosen centers.
      double wvalue = 0.0;
      for (std::size_t i = 0; i < m; ++i) {
        std::vector<double> edge(n);
        for (std::size_t j = 0; j < n; ++j) {
          edge[j] = cm(centers[j], cand[member_gid[j * m + i]]);
        }
        wvalue = std::max(wvalue, std::pow(kahan_pow_sum(edge, p), 1.0 / p));
      }
      value = wvalue;
    }

    if (usable && value < best_value) {
      best_value = value;
      best_perm = perm;
      best_centers = centers;
    }
  } while (advance());

  CenterSolution sol;
  sol.mode = mode;
  sol.objective = objective;
  sol.centers = std::move(best_centers);
  sol.clusters.assign(n, {});
  for (std::size_t j = 0; j < n; ++j) {
    sol.clusters[j].push_back(static_cast<int>(j));
    for (std::size_t i = 1; i < m; ++i) sol.clusters[j].push_back(best_perm[i - 1][j]);
  }
  sol.objective_value = best_value;
  return sol;
}

}  // namespace detail

double brute_force_workload(std::size_t n, std::size_t m) {
  return detail::brute_force_workload_impl(n, m);
}

namespace {

std::vector<std::vector<AugPoint>> to_aug_sets(const std::vector<std::vector<Point>>& sets) {
  std::vector<std::vector<AugPoint>> out;
  out.reserve(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    out.push_back(detail::to_aug(sets[i], static_cast<int>(i) + 1));
  }
  return out;
}

}  // namespace

CenterSolution center2_no_replacement(const std::vector<Point>& p1, const std::vector<Point>& p2,
                                      const Metric& metric) {
  return detail::center2_no_replacement_impl(detail::to_aug(p1, 1), detail::to_aug(p2, 2),
                                             CostModel{metric, false});
}

CenterSolution center2_with_replacement(const std::vector<Point>& p1, const std::vector<Point>& p2,
                                        const Metric& metric) {
  return detail::center2_with_replacement_impl(detail::to_aug(p1, 1), detail::to_aug(p2, 2),
                                               CostModel{metric, false});
}

CenterSolution center2_continuous(const std::vector<Point>& p1, const std::vector<Point>& p2,
                                  const Metric& metric) {
  return detail::center2_continuous_impl(detail::to_aug(p1, 1), detail::to_aug(p2, 2),
                                         CostModel{metric, false});
}

CenterSolution approx_center(const std::vector<std::vector<Point>>& sets, SelectionMode mode,
                             const Metric& metric, const Objective& objective) {
  return detail::approx_center_impl(to_aug_sets(sets), mode, CostModel{metric, false}, objective);
}

CenterSolution brute_force_center(const std::vector<std::vector<Point>>& sets, SelectionMode mode,
                                  const Metric& metric, const Objective& objective) {
  return detail::brute_force_center_impl(to_aug_sets(sets), mode, CostModel{metric, false},
                                         objective);
}

CenterSolution center_diagrams(const std::vector<Diagram>& diagrams, SelectionMode mode,
                               const Objective& objective, CenterAlgo algo) {
  const std::size_t m = diagrams.size();
  if (m < 2) throw std::invalid_argument("center_diagrams: need m >= 2 diagrams");
  for (const Diagram& d : diagrams) require_valid(d, "center_diagrams");
  if (algo == CenterAlgo::Exact2) {
    if (m != 2) throw std::invalid_argument("center_diagrams: algo exact2 requires m = 2");
    if (!objective.is_bottleneck()) {
      throw std::invalid_argument(
          "center_diagrams: exact2 supports the bottleneck objective only");
    }
  }

  std::vector<std::vector<AugPoint>> asets;
  asets.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    asets.push_back(augment(diagrams, static_cast<int>(i) + 1).points);
  }
  const CostModel cm{Metric::linf(), true};

  CenterSolution sol;
  switch (algo) {
    case CenterAlgo::Exact2:
      switch (mode) {
        case SelectionMode::NoReplacement:
          sol = detail::center2_no_replacement_impl(asets[0], asets[1], cm);
          break;
        case SelectionMode::WithReplacement:
          sol = detail::center2_with_replacement_impl(asets[0], asets[1], cm);
          break;
        case SelectionMode::Continuous:
          sol = detail::center2_continuous_impl(asets[0], asets[1], cm);
          break;
      }
      break;
    case CenterAlgo::Approx:
      sol = detail::approx_center_impl(asets, mode, cm, objective);
      break;
    case CenterAlgo::Brute:
      sol = detail::brute_force_center_impl(asets, mode, cm, objective);
      break;
  }
  sol.mode = mode;
  sol.objective = objective;

  // Augmented index -> original index within its diagram; projections map to
  // the implicit diagonal.
  for (auto& row : sol.clusters) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      const std::size_t own = diagrams[i].size();
      row[i] = static_cast<std::size_t>(row[i]) < own ? row[i] : -1;
    }
  }

  const Diagram q = center_diagram_of(sol);
  double value = 0.0;
  for (const Diagram& d : diagrams) {
    value = std::max(value, objective.is_bottleneck()
                                ? bottleneck_distance(q, d)
                                : wasserstein_distance(q, d, objective.exponent()));
  }
  sol.objective_value = value;
  return sol;
}

namespace {

// Multiset membership bookkeeping shared by the eval/verify paths.
std::map<Point, long> point_counts(const std::vector<std::vector<Point>>& sets) {
  std::map<Point, long> counts;
  for (const auto& s : sets)
    for (const Point& p : s) ++counts[p];
  return counts;
}

void check_mode_membership(const std::vector<Point>& centers,
                           const std::vector<std::vector<Point>>& sets, SelectionMode mode,
                           std::vector<std::string>& violations) {
  if (mode == SelectionMode::Continuous) return;
  std::map<Point, long> counts = point_counts(sets);
  for (std::size_t j = 0; j < centers.size(); ++j) {
    auto it = counts.find(centers[j]);
    if (it == counts.end()) {
      violations.push_back("center " + std::to_string(j) + ": not an input point");
      continue;
    }
    if (mode == SelectionMode::NoReplacement && --it->second < 0) {
      violations.push_back("center " + std::to_string(j) +
                           ": input multiplicity exhausted (no-replacement)");
    }
  }
}

double matching_distance(const std::vector<AugPoint>& q, const std::vector<AugPoint>& s,
                         const CostModel& cm, const Objective& objective) {
  const CostOracle cost = [&](int l, int r) {
    const double c = cm(q[static_cast<std::size_t>(l)], s[static_cast<std::size_t>(r)]);
    return objective.is_bottleneck() ? c : std::pow(c, objective.exponent());
  };
  if (objective.is_bottleneck()) {
    return bottleneck_perfect_matching(q.size(), s.size(), cost).bottleneck_cost.value();
  }
  const Matching m = min_cost_perfect_matching(q.size(), s.size(), cost);
  return std::pow(m.total_cost.value(), 1.0 / objective.exponent());
}

}  // namespace

EvalReport eval_center(const CenterSolution& sol, const std::vector<std::vector<Point>>& sets,
                       SelectionMode mode, const Metric& metric, const Objective& objective) {
  EvalReport report;
  const std::size_t m = sets.size();
  const std::size_t n = m == 0 ? 0 : sets[0].size();
  for (const auto& s : sets) {
    if (s.size() != n) report.violations.push_back("input sets differ in size");
  }
  if (sol.centers.size() != n) {
    report.violations.push_back("center count != n");
  }
  if (sol.clusters.size() != n) {
    report.violations.push_back("cluster count != n");
  } else {
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<char> seen(n, 0);
      bool ok = true;
      for (const auto& row : sol.clusters) {
        if (row.size() != m) {
          report.violations.push_back("cluster row size != m");
          ok = false;
          break;
        }
        const int idx = row[i];
        if (idx < 0 || static_cast<std::size_t>(idx) >= n || seen[static_cast<std::size_t>(idx)]) {
          ok = false;
          break;
        }
        seen[static_cast<std::size_t>(idx)] = 1;
      }
      if (!ok) {
        report.violations.push_back("color " + std::to_string(i + 1) +
                                    ": cluster membership is not a bijection");
      }
    }
  }
  std::vector<Point> center_pts;
  for (const AugPoint& c : sol.centers) center_pts.push_back(c.pt);
  check_mode_membership(center_pts, sets, mode, report.violations);

  if (sol.centers.size() == n && n > 0) {
    const CostModel cm{metric, false};
    std::vector<AugPoint> q = sol.centers;
    double value = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      const std::vector<AugPoint> s = detail::to_aug(sets[i], static_cast<int>(i) + 1);
      value = std::max(value, matching_distance(q, s, cm, objective));
    }
    report.value = value;
  }
  return report;
}

EvalReport eval_center_diagrams(const CenterSolution& sol, const std::vector<Diagram>& diagrams,
                                SelectionMode mode, const Objective& objective) {
  EvalReport report;
  const std::size_t m = diagrams.size();
  for (const Diagram& d : diagrams) {
    for (const auto& v : validate_diagram(d)) {
      report.violations.push_back("input diagram point " + std::to_string(v.index) + ": " + v.rule);
    }
  }
  for (const auto& row : sol.clusters) {
    if (row.size() != m) {
      report.violations.push_back("cluster row size != m");
      break;
    }
  }
  // Every original point must appear in exactly one cluster.
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<long> uses(diagrams[i].size(), 0);
    bool in_range = true;
    for (const auto& row : sol.clusters) {
      if (row.size() != m) continue;
      const int idx = row[i];
      if (idx < 0) continue;  // diagonal stand-in
      if (static_cast<std::size_t>(idx) >= uses.size()) {
        in_range = false;
        continue;
      }
      ++uses[static_cast<std::size_t>(idx)];
    }
    if (!in_range || std::any_of(uses.begin(), uses.end(), [](long u) { return u != 1; })) {
      report.violations.push_back("diagram " + std::to_string(i + 1) +
                                  ": cluster membership does not cover each point exactly once");
    }
  }

  const Diagram q = center_diagram_of(sol);
  std::vector<std::vector<Point>> real_points;
  for (const Diagram& d : diagrams) real_points.push_back(d.points);
  check_mode_membership(q.points, real_points, mode, report.violations);

  double value = 0.0;
  for (const Diagram& d : diagrams) {
    value = std::max(value, objective.is_bottleneck()
                                ? bottleneck_distance(q, d)
                                : wasserstein_distance(q, d, objective.exponent()));
  }
  report.value = value;
  return report;
}

EvalReport verify_center_diagram(const Diagram& center, const std::vector<Diagram>& inputs,
                                 SelectionMode mode, const Objective& objective) {
  EvalReport report;
  for (const auto& v : validate_diagram(center)) {
    report.violations.push_back("center point " + std::to_string(v.index) + ": " + v.rule);
  }
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    for (const auto& v : validate_diagram(inputs[i])) {
      report.violations.push_back("input " + std::to_string(i + 1) + " point " +
                                  std::to_string(v.index) + ": " + v.rule);
    }
  }
  if (!report.violations.empty()) return report;

  std::vector<std::vector<Point>> real_points;
  for (const Diagram& d : inputs) real_points.push_back(d.points);
  check_mode_membership(center.points, real_points, mode, report.violations);

  double value = 0.0;
  for (const Diagram& d : inputs) {
    value = std::max(value, objective.is_bottleneck()
                                ? bottleneck_distance(center, d)
                                : wasserstein_distance(center, d, objective.exponent()));
  }
  report.value = value;
  return report;
}

}  // namespace pdc
