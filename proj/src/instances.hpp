#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "geometry.hpp"

namespace pdc {

// SplitMix64: the fixture generator. state' = state + 0x9E3779B97F4A7C15;
// output mixes state' with xorshift-multiply rounds (0xBF58476D1CE4E5B9,
// 0x94D049BB133111EB). Platform-independent, so identical specs reproduce
// identical fixtures everywhere.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) from the top 53 bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

enum class GenKind { Random, Tight, Gap, ElementGadget, TripleGadget, WassersteinGadget };

struct GenSpec {
  GenKind kind = GenKind::Random;
  std::uint32_t n = 1;
  std::uint32_t m = 2;
  std::uint64_t seed = 0;
  double bbox_min = 0.0;
  double bbox_max = 10.0;
  std::uint32_t path_points = 2;  // element gadget: number of color-1 grid points
  bool pull = false;              // triple gadget variant
};

const char* gen_kind_name(GenKind kind);
bool parse_gen_kind(const std::string& name, GenKind& out);

// n points per diagram, coordinates uniform in the bbox, reflected across the
// diagonal so that death >= birth.
std::vector<Diagram> gen_random(const GenSpec& spec);

// Single-cluster instance where the factor-2 bound of the pairwise-matching
// approximation is attained exactly.
std::vector<std::vector<Point>> gen_tight();

// Collinear instance whose no-replacement optimum is exactly twice the
// with-replacement optimum; the with-replacement solution must reuse a point.
std::vector<std::vector<Point>> gen_gap();

// Path of d color-1 grid points with color-2/color-3 points at the 1/3 and 2/3
// positions of each unit edge, alternating orientation between edges: 3D+1
// points over a path of D = d-1 edges.
std::vector<std::vector<Point>> gen_element_gadget(std::uint32_t d);

// pull=false: three coincident points of distinct colors at a grid point.
// pull=true: the triple plus its three incident approach paths, each ending in
// a two-color absorber pair, which forces all three triple points into
// distinct radius-1/3 clusters.
std::vector<std::vector<Point>> gen_triple_gadget(bool pull);

// One half grid edge with a two-color pair at the midpoint: the lone cluster
// is an axis-parallel interval of length 1/2 with continuous radius 1/4.
std::vector<std::vector<Point>> gen_wasserstein_gadget();

// Rigid translation away from the diagonal: afterwards every point sits at
// Linf distance at least twice the union diameter from Y=X, so the diagonal
// never participates in optimal matchings.
std::vector<Diagram> shift_from_diagonal(const std::vector<std::vector<Point>>& sets);

// CLI entry: random diagrams directly, every other kind shifted to diagrams.
std::vector<Diagram> generate_diagrams(const GenSpec& spec);

}  // namespace pdc
