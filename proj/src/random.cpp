#include "opforge/random.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace opforge {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) {
    throw OperadError("Rng::below needs a positive bound");
  }
  // Rejection sampling keeps the result unbiased.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x = engine_();
  while (x >= limit) {
    x = engine_();
  }
  return x % n;
}

int Rng::range(int lo, int hi) {
  return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

Permutation random_permutation(Rng& rng, std::size_t n) {
  std::vector<int> images(n);
  for (std::size_t i = 0; i < n; ++i) {
    images[i] = static_cast<int>(i) + 1;
  }
  for (std::size_t i = n; i > 1; --i) {
    std::swap(images[i - 1], images[static_cast<std::size_t>(rng.below(i))]);
  }
  return Permutation(std::move(images));
}

AffineMap1 random_interval(Rng& rng, const Rational& lo, const Rational& hi, int grid) {
  const Rational steps_r = (hi - lo) * grid;
  const int steps = static_cast<int>(numerator(steps_r) / denominator(steps_r));
  int a = rng.range(0, steps - 1);
  int b = rng.range(a + 1, steps);
  return AffineMap1::from_image(lo + Rational(a, grid), lo + Rational(b, grid));
}

CubesElement random_cubes(Rng& rng, std::size_t dim, std::size_t n) {
  // Split every axis into g slots; distinct cells of the product grid are
  // interior-disjoint, and each cube is a random box inside its cell.
  const int g = static_cast<int>(n) + rng.range(0, 2);
  const int fine = 4;
  std::size_t cells = 1;
  for (std::size_t d = 0; d < dim; ++d) {
    cells *= static_cast<std::size_t>(std::max(g, 1));
  }
  std::vector<std::size_t> chosen;
  while (chosen.size() < n) {
    const std::size_t c = static_cast<std::size_t>(rng.below(cells));
    if (std::find(chosen.begin(), chosen.end(), c) == chosen.end()) {
      chosen.push_back(c);
    }
  }
  std::vector<LittleCube> cubes;
  for (std::size_t c : chosen) {
    LittleCube cube;
    std::size_t code = c;
    for (std::size_t d = 0; d < dim; ++d) {
      const int slot = static_cast<int>(code % static_cast<std::size_t>(g));
      code /= static_cast<std::size_t>(g);
      cube.axes.push_back(
          random_interval(rng, Rational(slot, g), Rational(slot + 1, g), g * fine));
    }
    cubes.push_back(std::move(cube));
  }
  return CubesElement(dim, std::move(cubes));
}

OverlapElement random_overlap(Rng& rng, std::size_t n) {
  std::vector<AffineMap1> intervals;
  for (std::size_t i = 0; i < n; ++i) {
    intervals.push_back(random_interval(rng, Rational(0), Rational(1), 8));
  }
  return OverlapElement(std::move(intervals), random_permutation(rng, n));
}

DiskForest random_forest(Rng& rng, int color, std::size_t extra) {
  DiskForest forest = DiskForest::standard(color);
  for (std::size_t step = 0; step < extra; ++step) {
    const std::string name = "d" + std::to_string(forest.size());
    if (forest.size() == 1 || rng.coin()) {
      forest.add_node(static_cast<NodeId>(rng.below(forest.size())), name);
      continue;
    }
    const NodeId v = 1 + static_cast<NodeId>(rng.below(forest.size() - 1));
    std::vector<NodeId> targets;
    for (NodeId sibling : forest.children(*forest.parent(v))) {
      if (sibling == v || rng.below(3) == 0) {
        targets.push_back(sibling);
      }
    }
    forest.wrap(targets, name);
  }
  return forest;
}

std::vector<int> random_inputs(Rng& rng, int output, std::size_t n, int max_color,
                               bool action_ready) {
  std::vector<int> colors;
  std::vector<int> choices{1};
  if (output > 1) {
    for (int m = output; m <= (action_ready ? 2 : max_color); ++m) {
      choices.push_back(m);
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    colors.push_back(rng.pick(choices));
  }
  return colors;
}

namespace {

struct Layout {
  DiskForest forest;
  std::vector<NodeId> full;                  // full-set containers and the root
  std::vector<std::vector<NodeId>> columns;  // per strand: its containers and itself
  std::vector<std::vector<NodeId>> chains;   // free disks, one nested chain each
};

Layout random_layout(Rng& rng, int output, int extra_holes) {
  Layout layout{DiskForest::standard(output), {DiskForest::kRoot}, {}, {}};
  DiskForest& f = layout.forest;
  if (output == 1) {
    return layout;
  }
  const auto strands = f.marked(output);
  const bool free_family = extra_holes > 0 || rng.coin();
  int counter = 0;
  const auto fresh = [&] { return "d" + std::to_string(++counter); };
  if (!free_family) {
    for (int c = rng.range(0, 2); c > 0; --c) {
      layout.full.push_back(f.wrap(strands, fresh()));
    }
  }
  for (NodeId s : strands) {
    layout.columns.push_back({s});
    for (int c = rng.range(0, 2); c > 0; --c) {
      const std::vector<NodeId> one{s};
      layout.columns.back().push_back(f.wrap(one, fresh()));
    }
  }
  if (free_family) {
    const int chains = std::max(extra_holes, rng.range(0, 2));
    for (int c = 0; c < chains; ++c) {
      layout.chains.emplace_back();
      NodeId parent = DiskForest::kRoot;
      for (int len = rng.range(1, 2); len > 0; --len) {
        parent = f.add_node(parent, fresh());
        layout.chains.back().push_back(parent);
      }
    }
  }
  return layout;
}

Muffler random_site(Rng& rng, const Layout& layout, int output, int color, bool action_ready) {
  Muffler m{random_interval(rng, Rational(0), Rational(1), 8), DiskForest::kRoot, {}};
  if (color == 1) {
    std::vector<NodeId> candidates = layout.full;
    for (const auto& group : layout.columns) {
      candidates.insert(candidates.end(), group.begin(), group.end());
    }
    for (const auto& group : layout.chains) {
      candidates.insert(candidates.end(), group.begin(), group.end());
    }
    m.outer = rng.pick(candidates);
    m.holes = {m.outer};
    return m;
  }
  m.outer = rng.pick(layout.full);
  for (const auto& column : layout.columns) {
    m.holes.push_back(rng.pick(column));
  }
  std::vector<std::size_t> chain_ids(layout.chains.size());
  std::iota(chain_ids.begin(), chain_ids.end(), std::size_t{0});
  for (int extra = color - output; extra > 0; --extra) {
    const std::size_t at = static_cast<std::size_t>(rng.below(chain_ids.size()));
    m.holes.push_back(rng.pick(layout.chains[chain_ids[at]]));
    chain_ids.erase(chain_ids.begin() + static_cast<std::ptrdiff_t>(at));
  }
  if (!action_ready) {
    m.holes = apply_to_list(random_permutation(rng, m.holes.size()), m.holes);
  }
  return m;
}

}  // namespace

InfectionDiagram random_diagram(Rng& rng, int output, const std::vector<int>& inputs,
                                bool action_ready) {
  int extra_holes = 0;
  for (int color : inputs) {
    if (color > 1 && color < output) {
      throw OperadError("random_diagram: a " + std::to_string(color) +
                        "-holed muffler cannot sit over " + std::to_string(output) + " strands");
    }
    if (color > 1) {
      extra_holes = std::max(extra_holes, color - output);
    }
  }
  if (output == 1 && extra_holes > 0) {
    throw OperadError("random_diagram: color-1 diagrams only take one-holed mufflers");
  }
  Layout layout = random_layout(rng, output, extra_holes);
  std::vector<Muffler> mufflers;
  for (int color : inputs) {
    mufflers.push_back(random_site(rng, layout, output, color, action_ready));
  }
  const std::size_t n = mufflers.size();
  const auto perms = all_permutations(n);
  for (int attempt = 0; attempt < 50; ++attempt) {
    std::vector<Permutation> valid;
    for (const auto& sigma : perms) {
      InfectionDiagram d(output, layout.forest, mufflers, sigma);
      if (!check_constraint(d)) {
        valid.push_back(sigma);
      }
    }
    if (!valid.empty()) {
      return canonicalize(InfectionDiagram(output, layout.forest, mufflers, rng.pick(valid)));
    }
    for (auto& m : mufflers) {
      m.time = random_interval(rng, Rational(0), Rational(1), 8);
    }
  }
  // Stacked slots never conflict.
  for (std::size_t k = 0; k < n; ++k) {
    mufflers[k].time = AffineMap1::from_image(Rational(static_cast<long>(k), static_cast<long>(n)),
                                              Rational(static_cast<long>(k + 1), static_cast<long>(n)));
  }
  return canonicalize(InfectionDiagram(output, std::move(layout.forest), std::move(mufflers),
                                       random_permutation(rng, n)));
}

LinkWord random_word(Rng& rng, const Alphabet& alphabet, int color, std::size_t max_letters,
                     bool twists) {
  const auto count = static_cast<std::size_t>(rng.below(max_letters + 1));
  if (color == 1) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < count && !alphabet.knots().empty(); ++i) {
      names.push_back(rng.pick(alphabet.knots()));
    }
    return LinkWord::knots(std::move(names));
  }
  LinkWord w = LinkWord::trivial(2);
  for (std::size_t i = 0; i < count; ++i) {
    const bool central = alphabet.noncentral().empty() ||
                         (!alphabet.knots().empty() && rng.below(3) == 0);
    if (central) {
      static const LetterKind kinds[] = {LetterKind::SplitA, LetterKind::SplitB, LetterKind::Cable};
      w = mul(w, LinkWord::of(Letter{kinds[rng.below(3)], rng.pick(alphabet.knots())}));
    } else if (!alphabet.noncentral().empty()) {
      w = mul(w, LinkWord::of(Letter{LetterKind::NonCentral, rng.pick(alphabet.noncentral())}));
    }
  }
  return twists ? add_twists(w, rng.range(-2, 2)) : w;
}

}  // namespace opforge
