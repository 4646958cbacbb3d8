#include "distances.hpp"

#include <cmath>
#include <stdexcept>

namespace pdc {

AugmentedSet augment(const std::vector<Diagram>& diagrams, int color_i) {
  const int m = static_cast<int>(diagrams.size());
  if (color_i < 1 || color_i > m) {
    throw std::out_of_range("augment: color index out of range");
  }
  AugmentedSet out;
  out.color = color_i;
  const Diagram& own = diagrams[static_cast<std::size_t>(color_i - 1)];
  for (std::size_t j = 0; j < own.points.size(); ++j) {
    out.points.push_back(AugPoint{own.points[j], color_i, false});
    out.source_color.push_back(color_i);
    out.source_index.push_back(j);
  }
  for (int k = 1; k <= m; ++k) {
    if (k == color_i) continue;
    const Diagram& other = diagrams[static_cast<std::size_t>(k - 1)];
    for (std::size_t j = 0; j < other.points.size(); ++j) {
      out.points.push_back(AugPoint{project_to_diagonal(other.points[j]), color_i, true});
      out.source_color.push_back(k);
      out.source_index.push_back(j);
    }
  }
  return out;
}

namespace {

CostOracle aug_cost(const std::vector<AugPoint>& left, const std::vector<AugPoint>& right) {
  return [&left, &right](int l, int r) {
    return pair_cost(left[static_cast<std::size_t>(l)], right[static_cast<std::size_t>(r)]);
  };
}

}  // namespace

double bottleneck_distance(const Diagram& a, const Diagram& b) {
  require_valid(a, "bottleneck_distance");
  require_valid(b, "bottleneck_distance");
  const std::vector<Diagram> pair{a, b};
  const AugmentedSet left = augment(pair, 1);
  const AugmentedSet right = augment(pair, 2);
  const CostOracle cost = aug_cost(left.points, right.points);
  const Matching m = bottleneck_perfect_matching(left.points, right.points, cost);
  return m.bottleneck_cost.value();
}

double wasserstein_distance(const Diagram& a, const Diagram& b, double p) {
  if (!std::isfinite(p) || p < 1.0) {
    throw std::invalid_argument("wasserstein_distance: p must be finite and >= 1");
  }
  require_valid(a, "wasserstein_distance");
  require_valid(b, "wasserstein_distance");
  const std::vector<Diagram> pair{a, b};
  const AugmentedSet left = augment(pair, 1);
  const AugmentedSet right = augment(pair, 2);
  const CostOracle cost = [&](int l, int r) {
    return std::pow(pair_cost(left.points[static_cast<std::size_t>(l)],
                              right.points[static_cast<std::size_t>(r)]),
                    p);
  };
  const Matching m = min_cost_perfect_matching(left.points, right.points, cost);
  // min_cost_perfect_matching already compensates the sum of the p-th powers.
  return std::pow(m.total_cost.value(), 1.0 / p);
}

}  // namespace pdc
