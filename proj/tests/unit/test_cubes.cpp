#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "opforge/cubes.hpp"
#include "opforge/random.hpp"

using namespace opforge;

namespace {

Rational Q(long n, long d = 1) { return Rational(n, d); }
AffineMap1 I(Rational lo, Rational hi) { return AffineMap1::from_image(lo, hi); }

CubesElement line(std::vector<AffineMap1> intervals) {
  std::vector<LittleCube> cubes;
  for (auto& a : intervals) {
    cubes.push_back(LittleCube{{a}});
  }
  return CubesElement(1, std::move(cubes));
}

// Recovers an affine map from its values at 0 and 1.
AffineMap1 refit(const Rational& at0, const Rational& at1) { return AffineMap1(at1 - at0, at0); }

struct Nesting {
  CubesElement outer;
  std::vector<CubesElement> inners;
};

Nesting random_nesting(Rng& rng, std::size_t dim, std::size_t n, int max_k) {
  Nesting nest{random_cubes(rng, dim, n), {}};
  for (std::size_t i = 0; i < n; ++i) {
    nest.inners.push_back(random_cubes(rng, dim, static_cast<std::size_t>(rng.range(0, max_k))));
  }
  return nest;
}

}  // namespace

TEST_CASE("affine maps") {
  CHECK_THROWS_AS(AffineMap1(Q(0), Q(0)), OperadError);
  CHECK_THROWS_AS(AffineMap1(Q(1, 2), Q(3, 4)), OperadError);
  CHECK_THROWS_AS(AffineMap1(Q(1, 2), Q(-1, 4)), OperadError);
  const AffineMap1 half(Q(1, 2), Q(0));
  CHECK(affine_compose(AffineMap1(), half) == half);
  CHECK(affine_compose(half, half) == AffineMap1(Q(1, 4), Q(0)));
  const AffineMap1 a(Q(1, 2), Q(1, 2));
  const AffineMap1 b(Q(1, 3), Q(0));
  CHECK(affine_compose(a, b) == refit(a(b(Q(0))), a(b(Q(1)))));
  CHECK(affine_compose(a, b) == AffineMap1(Q(1, 6), Q(1, 2)));
  CHECK(to_string(a) == "(1/2,1)");
}

TEST_CASE("validate reports interior overlaps only") {
  CHECK_FALSE(find_overlap(std::vector<LittleCube>{{{I(Q(0), Q(1, 4))}}, {{I(Q(1, 2), Q(3, 4))}}}));
  const auto same = find_overlap(std::vector<LittleCube>{{{I(Q(0), Q(1, 2))}}, {{I(Q(0), Q(1, 2))}}});
  REQUIRE(same);
  CHECK(same->first == 0);
  CHECK(same->second == 1);
  CHECK_FALSE(find_overlap(std::vector<LittleCube>{{{I(Q(0), Q(1, 2))}}, {{I(Q(1, 2), Q(1))}}}));
  // Two squares sharing an edge only.
  CHECK_FALSE(find_overlap(std::vector<LittleCube>{{{I(Q(0), Q(1, 2)), I(Q(0), Q(1))}},
                                                   {{I(Q(1, 2), Q(1)), I(Q(0), Q(1))}}}));
  CHECK_THROWS_AS(line({I(Q(0), Q(1, 2)), I(Q(1, 4), Q(1))}), OperadError);
}

TEST_CASE("cubes_compose examples") {
  const auto halves = line({I(Q(0), Q(1, 2)), I(Q(1, 2), Q(1))});
  const std::vector<CubesElement> single{halves};
  CHECK(cubes_compose(CubesElement::identity(1), single) == halves);
  const std::vector<CubesElement> ids(2, CubesElement::identity(1));
  CHECK(cubes_compose(halves, ids) == halves);

  const std::vector<CubesElement> two_halves{halves, halves};
  const auto quarters = cubes_compose(halves, two_halves);
  // Endpoint images computed one by one.
  std::vector<AffineMap1> expected;
  for (const auto& o : halves.cubes()) {
    for (const auto& i : halves.cubes()) {
      expected.push_back(I(o.axes[0](i.axes[0].lo()), o.axes[0](i.axes[0].hi())));
    }
  }
  CHECK(quarters == line(expected));
  CHECK(to_string(quarters) == "cubes{ dim=1; cube[(0,1/4)]; cube[(1/4,1/2)]; cube[(1/2,3/4)]; cube[(3/4,1)]; }");
  CHECK_THROWS_AS(cubes_compose(halves, single), OperadError);
  const std::vector<CubesElement> wrong_dim{CubesElement::identity(2), halves};
  CHECK_THROWS_AS(cubes_compose(halves, wrong_dim), OperadError);
}

TEST_CASE("operad laws on random nestings") {
  Rng rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t dim = static_cast<std::size_t>(rng.range(1, 2));
    const std::size_t n = static_cast<std::size_t>(rng.range(0, 3));
    auto nest = random_nesting(rng, dim, n, 3);
    const auto composite = cubes_compose(nest.outer, nest.inners);

    // Identity.
    const std::vector<CubesElement> ids(n, CubesElement::identity(dim));
    CHECK(cubes_compose(nest.outer, ids) == nest.outer);
    const std::vector<CubesElement> just_outer{nest.outer};
    CHECK(cubes_compose(CubesElement::identity(dim), just_outer) == nest.outer);

    // Associativity: third level below every inner cube.
    std::vector<CubesElement> third;
    for (std::size_t m = 0; m < composite.arity(); ++m) {
      third.push_back(random_cubes(rng, dim, static_cast<std::size_t>(rng.range(0, 2))));
    }
    std::vector<CubesElement> grouped;
    std::size_t at = 0;
    for (const auto& inner : nest.inners) {
      std::vector<CubesElement> slice(third.begin() + static_cast<std::ptrdiff_t>(at),
                                      third.begin() + static_cast<std::ptrdiff_t>(at + inner.arity()));
      grouped.push_back(cubes_compose(inner, slice));
      at += inner.arity();
    }
    CHECK(cubes_compose(composite, third) == cubes_compose(nest.outer, grouped));

    // Symmetry, outer permutation with block permutation.
    const auto sigma = random_permutation(rng, n);
    std::vector<std::size_t> sizes;
    for (const auto& inner : nest.inners) {
      sizes.push_back(inner.arity());
    }
    CHECK(cubes_compose(act_symmetric(nest.outer, sigma), apply_to_list(sigma, nest.inners)) ==
          act_symmetric(composite, block_permutation(sigma, {sizes})));

    // Symmetry, inner permutations with their direct sum.
    std::vector<Permutation> taus;
    std::vector<CubesElement> acted;
    for (const auto& inner : nest.inners) {
      taus.push_back(random_permutation(rng, inner.arity()));
      acted.push_back(act_symmetric(inner, taus.back()));
    }
    CHECK(cubes_compose(nest.outer, acted) == act_symmetric(composite, direct_sum(taus)));
  }
}
