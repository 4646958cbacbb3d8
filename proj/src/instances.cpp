#include "instances.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace pdc {

const char* gen_kind_name(GenKind kind) {
  switch (kind) {
    case GenKind::Random: return "random";
    case GenKind::Tight: return "tight";
    case GenKind::Gap: return "gap";
    case GenKind::ElementGadget: return "element_gadget";
    case GenKind::TripleGadget: return "triple_gadget";
    case GenKind::WassersteinGadget: return "wasserstein_gadget";
  }
  return "unknown";
}

bool parse_gen_kind(const std::string& name, GenKind& out) {
  for (GenKind k : {GenKind::Random, GenKind::Tight, GenKind::Gap, GenKind::ElementGadget,
                    GenKind::TripleGadget, GenKind::WassersteinGadget}) {
    if (name == gen_kind_name(k)) {
      out = k;
      return true;
    }
  }
  return false;
}

std::vector<Diagram> gen_random(const GenSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("gen_random: n must be >= 1");
  if (spec.m < 2) throw std::invalid_argument("gen_random: m must be >= 2");
  if (!(spec.bbox_max > spec.bbox_min) || !std::isfinite(spec.bbox_min) ||
      !std::isfinite(spec.bbox_max)) {
    throw std::invalid_argument("gen_random: invalid bbox");
  }
  SplitMix64 rng(spec.seed);
  const double span = spec.bbox_max - spec.bbox_min;
  std::vector<Diagram> out(spec.m);
  for (Diagram& d : out) {
    d.points.reserve(spec.n);
    for (std::uint32_t i = 0; i < spec.n; ++i) {
      double x = spec.bbox_min + rng.next_unit() * span;
      double y = spec.bbox_min + rng.next_unit() * span;
      if (y < x) std::swap(x, y);
      d.points.push_back(Point{x, y});
    }
  }
  return out;
}

std::vector<std::vector<Point>> gen_tight() {
  return {{Point{0.0, 0.0}}, {Point{1.0, 0.0}}, {Point{0.0, 1.0}}};
}

std::vector<std::vector<Point>> gen_gap() {
  // The midpoint 0 is the only point that covers either cluster at radius 1;
  // with distinct centers one cluster pays 2. Certified by the oracle tests.
  return {{Point{0.0, 0.0}, Point{1.0, 0.0}},
          {Point{1.0, 0.0}, Point{1.0, 0.0}},
          {Point{-1.0, 0.0}, Point{-1.0, 0.0}}};
}

std::vector<std::vector<Point>> gen_element_gadget(std::uint32_t d) {
  if (d < 2) throw std::invalid_argument("gen_element_gadget: need at least 2 grid points");
  std::vector<std::vector<Point>> sets(3);
  for (std::uint32_t i = 0; i < d; ++i) {
    sets[0].push_back(Point{static_cast<double>(i), 0.0});
  }
  for (std::uint32_t e = 0; e + 1 < d; ++e) {
    const double base = static_cast<double>(e);
    const Point lo{base + 1.0 / 3.0, 0.0};
    const Point hi{base + 2.0 / 3.0, 0.0};
    // Alternate which color sits near the left endpoint so that a disk of
    // radius 1/3 centered at a grid point never sees three distinct colors.
    if (e % 2 == 0) {
      sets[1].push_back(lo);
      sets[2].push_back(hi);
    } else {
      sets[2].push_back(lo);
      sets[1].push_back(hi);
    }
  }
  return sets;
}

std::vector<std::vector<Point>> gen_triple_gadget(bool pull) {
  std::vector<std::vector<Point>> sets(3);
  const Point t{0.0, 0.0};
  sets[0].push_back(t);
  sets[1].push_back(t);
  sets[2].push_back(t);
  if (!pull) return sets;

  // Three approach paths. Each carries the element grid point of its own
  // color, the 1/3- and 2/3-position points of the edge into the triple, and
  // an absorber pair one third beyond the grid point. The absorbers leave the
  // grid points coverable only from outside, which propagates the pull into
  // the triple: at radius 1/3 all three triple points end up in distinct
  // clusters, and no radius below 1/3 is feasible.
  auto at = [](double x, double y) { return Point{x, y}; };
  // +x branch, element color 1: edge points are colors 3 (near) and 2 (far).
  sets[0].push_back(at(1, 0));
  sets[2].push_back(at(1.0 / 3.0, 0));
  sets[1].push_back(at(2.0 / 3.0, 0));
  sets[1].push_back(at(4.0 / 3.0, 0));
  sets[2].push_back(at(4.0 / 3.0, 0));
  // +y branch, element color 2: edge points are colors 3 (near) and 1 (far).
  sets[1].push_back(at(0, 1));
  sets[2].push_back(at(0, 1.0 / 3.0));
  sets[0].push_back(at(0, 2.0 / 3.0));
  sets[0].push_back(at(0, 4.0 / 3.0));
  sets[2].push_back(at(0, 4.0 / 3.0));
  // -x branch, element color 3: edge points are colors 2 (near) and 1 (far).
  sets[2].push_back(at(-1, 0));
  sets[1].push_back(at(-1.0 / 3.0, 0));
  sets[0].push_back(at(-2.0 / 3.0, 0));
  sets[0].push_back(at(-4.0 / 3.0, 0));
  sets[1].push_back(at(-4.0 / 3.0, 0));
  return sets;
}

std::vector<std::vector<Point>> gen_wasserstein_gadget() {
  return {{Point{0.0, 0.0}}, {Point{0.5, 0.0}}, {Point{0.5, 0.0}}};
}

std::vector<Diagram> shift_from_diagonal(const std::vector<std::vector<Point>>& sets) {
  std::size_t total = 0;
  for (const auto& s : sets) total += s.size();
  if (total == 0) throw std::invalid_argument("shift_from_diagonal: empty input");

  std::vector<Point> all;
  all.reserve(total);
  for (const auto& s : sets) all.insert(all.end(), s.begin(), s.end());

  double diam = 0.0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      diam = std::max(diam, dist_point(all[i], all[j], Metric::linf()));
    }
  }
  double min_delta = all[0].y - all[0].x;
  for (const Point& p : all) min_delta = std::min(min_delta, p.y - p.x);

  // Linf distance to the diagonal is (y - x) / 2; push it to at least 2*diam,
  // with a margin so even a lone point moves.
  const double t = std::max(4.0 * diam - min_delta, 0.0) + 1.0;

  std::vector<Diagram> out(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    out[i].points.reserve(sets[i].size());
    for (const Point& p : sets[i]) out[i].points.push_back(Point{p.x, p.y + t});
  }
  return out;
}

std::vector<Diagram> generate_diagrams(const GenSpec& spec) {
  switch (spec.kind) {
    case GenKind::Random: return gen_random(spec);
    case GenKind::Tight: return shift_from_diagonal(gen_tight());
    case GenKind::Gap: return shift_from_diagonal(gen_gap());
    case GenKind::ElementGadget: return shift_from_diagonal(gen_element_gadget(spec.path_points));
    case GenKind::TripleGadget: return shift_from_diagonal(gen_triple_gadget(spec.pull));
    case GenKind::WassersteinGadget: return shift_from_diagonal(gen_wasserstein_gadget());
  }
  throw std::invalid_argument("generate_diagrams: unknown kind");
}

}  // namespace pdc
