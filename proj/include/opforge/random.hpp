#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "opforge/cubes.hpp"
#include "opforge/diagrams.hpp"
#include "opforge/diskforest.hpp"
#include "opforge/linkmonoid.hpp"
#include "opforge/overlap.hpp"
#include "opforge/perm.hpp"

namespace opforge {

/// Seeded generator with its own bounded sampling, so a seed gives the same
/// stream on every standard library (std distributions are not portable).
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  int range(int lo, int hi);
  bool coin() { return below(2) == 1; }
  template <typename T>
  const T& pick(const std::vector<T>& xs) {
    return xs[static_cast<std::size_t>(below(xs.size()))];
  }

private:
  std::mt19937_64 engine_;
};

Permutation random_permutation(Rng& rng, std::size_t n);

/// Interval [i/grid, k/grid] inside [lo, hi] with i < k on the grid 1/grid.
/// lo and hi must be grid points with lo < hi.
AffineMap1 random_interval(Rng& rng, const Rational& lo, const Rational& hi, int grid);

/// n cubes of dimension `dim` with disjoint interiors, in random order.
CubesElement random_cubes(Rng& rng, std::size_t dim, std::size_t n);

/// n intervals that may overlap, with a random order.
OverlapElement random_overlap(Rng& rng, std::size_t n);

/// Standard forest for `color` grown by `extra` random insertions: a fresh
/// leaf under any disk, or a fresh disk wrapped around some siblings.
DiskForest random_forest(Rng& rng, int color, std::size_t extra);

/// Input colors for a random diagram with the given output color. Multi-holed
/// mufflers need at least as many holes as there are strands.
std::vector<int> random_inputs(Rng& rng, int output, std::size_t n, int max_color, bool action_ready);

/// Random diagram satisfying the continuity constraint, with the given
/// signature and times on the grid 1/8. Forests come from one of two
/// families (full-set containers, or free disks beside the strands) that
/// composition can always graft into. With `action_ready` every muffler has
/// action semantics: color at most 2 and two-holed holes in strand order.
InfectionDiagram random_diagram(Rng& rng, int output, const std::vector<int>& inputs,
                                bool action_ready = false);

/// Word of the given color with up to `max_letters` letters from the
/// alphabet; color-2 words also get a twist in [-2, 2] when `twists` is set.
LinkWord random_word(Rng& rng, const Alphabet& alphabet, int color, std::size_t max_letters,
                     bool twists = true);

}  // namespace opforge
