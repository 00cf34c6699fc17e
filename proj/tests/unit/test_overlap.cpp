#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "opforge/order.hpp"
#include "opforge/overlap.hpp"
#include "opforge/random.hpp"

using namespace opforge;

namespace {

Rational Q(long n, long d = 1) { return Rational(n, d); }
AffineMap1 I(Rational lo, Rational hi) { return AffineMap1::from_image(lo, hi); }
Permutation P(std::vector<int> v) { return Permutation(std::move(v)); }

// Pairwise order signature of sigma on intersecting pairs.
std::vector<bool> signature(const std::vector<AffineMap1>& xs, const Permutation& sigma) {
  const auto pos = sigma.inverse();
  std::vector<bool> sig;
  for (int i = 1; i <= static_cast<int>(xs.size()); ++i) {
    for (int k = i + 1; k <= static_cast<int>(xs.size()); ++k) {
      if (closed_intersect(xs[static_cast<std::size_t>(i - 1)], xs[static_cast<std::size_t>(k - 1)])) {
        sig.push_back(pos(i) < pos(k));
      }
    }
  }
  return sig;
}

// Lex-least permutation in the orbit of sigma, by enumeration.
Permutation brute_canonical(const std::vector<AffineMap1>& xs, const Permutation& sigma) {
  const auto target = signature(xs, sigma);
  for (const auto& p : all_permutations(xs.size())) {
    if (signature(xs, p) == target) {
      return p;
    }
  }
  FAIL("orbit is empty");
  return sigma;
}

}  // namespace

TEST_CASE("intersects uses closed images") {
  CHECK(intersects(I(Q(0), Q(1, 2)), I(Q(1, 2), Q(1))));
  CHECK_FALSE(intersects(I(Q(0), Q(1, 4)), I(Q(1, 2), Q(1))));
  CHECK(intersects(I(Q(0), Q(3, 4)), I(Q(1, 4), Q(1))));
}

TEST_CASE("canonical order examples") {
  const std::vector<AffineMap1> apart{I(Q(0), Q(1, 4)), I(Q(1, 2), Q(3, 4)), I(Q(7, 8), Q(1))};
  for (const auto& sigma : all_permutations(3)) {
    CHECK(canonical_overlap_order(apart, sigma).is_identity());
  }
  const std::vector<AffineMap1> pair{I(Q(0), Q(3, 4)), I(Q(1, 4), Q(1))};
  CHECK(canonical_overlap_order(pair, P({2, 1})) == P({2, 1}));
  const std::vector<AffineMap1> mixed{I(Q(0), Q(1, 2)), I(Q(1, 4), Q(3, 4)), I(Q(7, 8), Q(1))};
  CHECK(canonical_overlap_order(mixed, P({3, 1, 2})) == brute_canonical(mixed, P({3, 1, 2})));
  CHECK(canonical_overlap_order(mixed, P({3, 1, 2})) == P({1, 2, 3}));
  CHECK(canonical_overlap_order(mixed, P({3, 2, 1})) == P({2, 1, 3}));
}

TEST_CASE("canonical order agrees with orbit enumeration") {
  Rng rng(31);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.range(0, 5));
    const auto e = random_overlap(rng, n);
    const auto sigma = random_permutation(rng, n);
    const auto canon = canonical_overlap_order(e.intervals(), sigma);
    CHECK(canon == brute_canonical(e.intervals(), sigma));
    CHECK(canonical_overlap_order(e.intervals(), canon) == canon);
  }
}

TEST_CASE("equivalent") {
  const std::vector<AffineMap1> mixed{I(Q(0), Q(1, 2)), I(Q(1, 4), Q(3, 4)), I(Q(7, 8), Q(1))};
  CHECK(equivalent(mixed, P({1, 2, 3}), mixed, P({1, 2, 3})));
  CHECK_FALSE(equivalent(mixed, P({1, 2, 3}), mixed, P({2, 1, 3})));
  CHECK(equivalent(mixed, P({3, 1, 2}), mixed, P({1, 3, 2})));
  const std::vector<AffineMap1> other{I(Q(0), Q(1, 2)), I(Q(1, 4), Q(3, 4)), I(Q(3, 4), Q(1))};
  CHECK_FALSE(equivalent(mixed, P({1, 2, 3}), other, P({1, 2, 3})));
}

TEST_CASE("compose_overlap identities and laws") {
  const OverlapElement e({I(Q(0), Q(3, 4)), I(Q(1, 4), Q(1))}, P({2, 1}));
  const std::vector<OverlapElement> just_e{e};
  CHECK(compose_overlap(OverlapElement::identity(), just_e) == e);
  const std::vector<OverlapElement> ids(2, OverlapElement::identity());
  CHECK(compose_overlap(e, ids) == e);
  CHECK(compose_overlap(e, ids).order() == P({2, 1}));
  CHECK_THROWS_AS(compose_overlap(e, just_e), OperadError);

  Rng rng(32);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.range(0, 4));
    const auto outer = random_overlap(rng, n);
    std::vector<OverlapElement> inners;
    for (std::size_t a = 0; a < n; ++a) {
      inners.push_back(random_overlap(rng, static_cast<std::size_t>(rng.range(0, 3))));
    }
    const auto composite = compose_overlap(outer, inners);
    std::vector<OverlapElement> third;
    for (std::size_t m = 0; m < composite.arity(); ++m) {
      third.push_back(random_overlap(rng, static_cast<std::size_t>(rng.range(0, 2))));
    }
    std::vector<OverlapElement> grouped;
    std::size_t at = 0;
    std::vector<std::size_t> sizes;
    for (const auto& inner : inners) {
      std::vector<OverlapElement> slice(third.begin() + static_cast<std::ptrdiff_t>(at),
                                        third.begin() + static_cast<std::ptrdiff_t>(at + inner.arity()));
      grouped.push_back(compose_overlap(inner, slice));
      at += inner.arity();
      sizes.push_back(inner.arity());
    }
    CHECK(compose_overlap(composite, third) == compose_overlap(outer, grouped));

    const auto sigma = random_permutation(rng, n);
    CHECK(compose_overlap(act_symmetric(outer, sigma), apply_to_list(sigma, inners)) ==
          act_symmetric(composite, block_permutation(sigma, {sizes})));
    std::vector<Permutation> taus;
    std::vector<OverlapElement> acted;
    for (const auto& inner : inners) {
      taus.push_back(random_permutation(rng, inner.arity()));
      acted.push_back(act_symmetric(inner, taus.back()));
    }
    CHECK(compose_overlap(outer, acted) == act_symmetric(composite, direct_sum(taus)));
  }
}

TEST_CASE("printing") {
  const OverlapElement e({I(Q(0), Q(1, 2)), I(Q(1, 4), Q(1))}, P({2, 1}));
  CHECK(to_string(e) == "overlap{ intervals=[(0,1/2),(1/4,1)]; order=perm[2,1] }");
}
