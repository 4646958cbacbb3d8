#pragma once

#include <cmath>
#include <string>
#include <vector>

namespace pdc {

// Planar point. Inside a diagram, x is the birth time and y the death time.
struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point& a, const Point& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator<(const Point& a, const Point& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  }
};

// Ground metric between planar points: L2, Linf, or a general Lp with p >= 1.
class Metric {
 public:
  enum class Kind { L2, LInf, Lp };

  static Metric l2() { return Metric(Kind::L2, 2.0); }
  static Metric linf() { return Metric(Kind::LInf, 0.0); }
  static Metric lp(double p);

  Kind kind() const { return kind_; }
  double exponent() const { return p_; }

 private:
  Metric(Kind k, double p) : kind_(k), p_(p) {}
  Kind kind_;
  double p_;
};

// A persistence diagram: finite multiset of feature points with y >= x,
// stored in input order. The diagonal Y=X is implicit and never stored.
struct Diagram {
  std::vector<Point> points;

  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }
};

// A point participating in a matching computation, tagged with the color
// (input set index, 1-based) it currently belongs to and whether it is a
// diagonal projection. on_diagonal points always satisfy pt.y == pt.x
// exactly; they are constructed, never parsed.
struct AugPoint {
  Point pt;
  int color = 1;
  bool on_diagonal = false;
};

double dist_point(const Point& a, const Point& b, const Metric& metric);

// Foot of the perpendicular from p onto the line Y=X.
Point project_to_diagonal(const Point& p);

// One violation per offending point; empty means the diagram is valid.
struct DiagramViolation {
  std::size_t index;
  std::string rule;
};

std::vector<DiagramViolation> validate_diagram(const Diagram& d);

// Throws std::invalid_argument naming the first violation.
void require_valid(const Diagram& d, const char* what);

}  // namespace pdc
