#pragma once

#include <vector>

#include "geometry.hpp"
#include "matching.hpp"

namespace pdc {

// Equal-size matching set for color i built from m diagrams: the color-i
// points first, then the diagonal projections of every other color, all
// recolored to i. source_color/source_index track where each entry came from.
struct AugmentedSet {
  int color = 1;
  std::vector<AugPoint> points;
  std::vector<int> source_color;        // 1-based color of the originating point
  std::vector<std::size_t> source_index;  // index within the originating diagram
};

// Edge cost used for all diagram computations: zero between two diagonal
// points regardless of color or origin, Linf otherwise.
inline double pair_cost(const AugPoint& a, const AugPoint& b) {
  if (a.on_diagonal && b.on_diagonal) return 0.0;
  return dist_point(a.pt, b.pt, Metric::linf());
}

AugmentedSet augment(const std::vector<Diagram>& diagrams, int color_i);

double bottleneck_distance(const Diagram& a, const Diagram& b);

// p-Wasserstein distance; p must be finite and >= 1 (use bottleneck_distance
// for the p = infinity limit).
double wasserstein_distance(const Diagram& a, const Diagram& b, double p);

}  // namespace pdc
