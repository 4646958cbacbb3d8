#pragma once

#include <string>
#include <vector>

#include "distances.hpp"
#include "geometry.hpp"
#include "matching.hpp"

namespace pdc {

// Where center points may come from: the input multiset without reuse, the
// input set with reuse, or anywhere in the plane.
enum class SelectionMode { NoReplacement, WithReplacement, Continuous };

enum class CenterAlgo { Exact2, Approx, Brute };

// Objective aggregated over one center/input-set matching: the maximum edge
// cost, or the p-norm of the edge costs.
class Objective {
 public:
  static Objective bottleneck() { return Objective(true, 0.0); }
  static Objective wasserstein(double p);

  bool is_bottleneck() const { return bottleneck_; }
  double exponent() const { return p_; }

 private:
  Objective(bool b, double p) : bottleneck_(b), p_(p) {}
  bool bottleneck_;
  double p_;
};

// Cost between matching points: the ground metric, optionally with the
// diagonal-zero rule used for diagram computations.
struct CostModel {
  Metric metric = Metric::linf();
  bool diagonal_rule = false;

  double operator()(const AugPoint& a, const AugPoint& b) const {
    if (diagonal_rule && a.on_diagonal && b.on_diagonal) return 0.0;
    return dist_point(a.pt, b.pt, metric);
  }
};

// A center multiset with its clustering. clusters[j][i] is the index of the
// color-(i+1) member of cluster j within input set i; for diagram problems a
// -1 entry marks a diagonal projection standing in for the implicit diagonal.
// centers[j].on_diagonal marks centers that represent the diagonal and are
// dropped from the reported center diagram.
struct CenterSolution {
  std::vector<AugPoint> centers;
  std::vector<std::vector<int>> clusters;
  SelectionMode mode = SelectionMode::NoReplacement;
  Objective objective = Objective::bottleneck();
  double objective_value = 0.0;
};

// The feature points of the center diagram: all off-diagonal centers.
Diagram center_diagram_of(const CenterSolution& sol);

// ---- exact m = 2 ----------------------------------------------------------

CenterSolution center2_no_replacement(const std::vector<Point>& p1,
                                      const std::vector<Point>& p2, const Metric& metric);
CenterSolution center2_with_replacement(const std::vector<Point>& p1,
                                        const std::vector<Point>& p2, const Metric& metric);
CenterSolution center2_continuous(const std::vector<Point>& p1, const std::vector<Point>& p2,
                                  const Metric& metric);

// ---- factor-2 approximation for m >= 2 ------------------------------------

CenterSolution approx_center(const std::vector<std::vector<Point>>& sets, SelectionMode mode,
                             const Metric& metric, const Objective& objective);

// ---- exhaustive oracle -----------------------------------------------------

// Enumerates every clustering; only feasible at desk scale. Exact for the
// bottleneck objective; for Wasserstein objectives the per-cluster center rule
// (minimize the maximum member distance) makes the result an upper bound.
CenterSolution brute_force_center(const std::vector<std::vector<Point>>& sets,
                                  SelectionMode mode, const Metric& metric,
                                  const Objective& objective);

// Number of clusterings (n!)^(m-1) the oracle would enumerate; the oracle
// rejects instances where this exceeds 1e7.
double brute_force_workload(std::size_t n, std::size_t m);

// ---- diagram-level wrapper --------------------------------------------------

// Builds the equal-size augmented sets, runs the requested point-set algorithm
// under the diagonal-zero Linf cost, strips diagonal centers from the reported
// diagram and recomputes the objective as the exact maximum diagram distance.
CenterSolution center_diagrams(const std::vector<Diagram>& diagrams, SelectionMode mode,
                               const Objective& objective, CenterAlgo algo);

// ---- verification -----------------------------------------------------------

struct EvalReport {
  double value = 0.0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

// Recomputes the objective of a solution from scratch (optimal matchings
// between the center multiset and every input set) and checks the structural
// and mode constraints. Violations are data, not exceptions.
EvalReport eval_center(const CenterSolution& sol, const std::vector<std::vector<Point>>& sets,
                       SelectionMode mode, const Metric& metric, const Objective& objective);
EvalReport eval_center_diagrams(const CenterSolution& sol, const std::vector<Diagram>& diagrams,
                                SelectionMode mode, const Objective& objective);

// File-level verification: no clustering available, only the center diagram.
EvalReport verify_center_diagram(const Diagram& center, const std::vector<Diagram>& inputs,
                                 SelectionMode mode, const Objective& objective);

// ---- internals shared with the diagram wrapper (exposed for tests) ---------

namespace detail {

std::vector<AugPoint> to_aug(const std::vector<Point>& pts, int color);

CenterSolution center2_no_replacement_impl(const std::vector<AugPoint>& a,
                                           const std::vector<AugPoint>& b, const CostModel& cm);
CenterSolution center2_with_replacement_impl(const std::vector<AugPoint>& a,
                                             const std::vector<AugPoint>& b, const CostModel& cm);
CenterSolution center2_continuous_impl(const std::vector<AugPoint>& a,
                                       const std::vector<AugPoint>& b, const CostModel& cm);
CenterSolution approx_center_impl(const std::vector<std::vector<AugPoint>>& sets,
                                  SelectionMode mode, const CostModel& cm,
                                  const Objective& objective);
CenterSolution brute_force_center_impl(const std::vector<std::vector<AugPoint>>& sets,
                                       SelectionMode mode, const CostModel& cm,
                                       const Objective& objective);

// Exact continuous 1-center of a small member list: coordinatewise midrange
// under Linf, smallest enclosing circle under L2. With the diagonal rule the
// best diagonal-bound center competes as well.
struct ContinuousCenter {
  AugPoint center;
  double cost = 0.0;
};
ContinuousCenter best_continuous_center(const std::vector<AugPoint>& members,
                                        const CostModel& cm);

}  // namespace detail

}  // namespace pdc
