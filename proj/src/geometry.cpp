#include "geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace pdc {

Metric Metric::lp(double p) {
  if (!std::isfinite(p) || p < 1.0) {
    throw std::invalid_argument("Metric::lp: exponent must be finite and >= 1");
  }
  return Metric(Kind::Lp, p);
}

double dist_point(const Point& a, const Point& b, const Metric& metric) {
  const double dx = std::abs(a.x - b.x);
  const double dy = std::abs(a.y - b.y);
  switch (metric.kind()) {
    case Metric::Kind::L2:
      return std::hypot(dx, dy);
    case Metric::Kind::LInf:
      return std::max(dx, dy);
    case Metric::Kind::Lp: {
      const double p = metric.exponent();
      if (dx == 0.0 && dy == 0.0) return 0.0;
      // Factor out the larger term so the powers stay well scaled.
      const double m = std::max(dx, dy);
      const double r = std::min(dx, dy) / m;
      return m * std::pow(1.0 + std::pow(r, p), 1.0 / p);
    }
  }
  return 0.0;
}

Point project_to_diagonal(const Point& p) {
  const double t = (p.x + p.y) / 2.0;
  return Point{t, t};
}

std::vector<DiagramViolation> validate_diagram(const Diagram& d) {
  std::vector<DiagramViolation> out;
  for (std::size_t i = 0; i < d.points.size(); ++i) {
    const Point& p = d.points[i];
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      out.push_back({i, "coordinates must be finite"});
    } else if (p.y < p.x) {
      out.push_back({i, "death < birth"});
    }
  }
  return out;
}

void require_valid(const Diagram& d, const char* what) {
  const auto violations = validate_diagram(d);
  if (!violations.empty()) {
    throw std::invalid_argument(std::string(what) + ": invalid diagram, point " +
                                std::to_string(violations.front().index) + ": " +
                                violations.front().rule);
  }
}

}  // namespace pdc
