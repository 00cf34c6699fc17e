#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "opforge/action.hpp"
#include "opforge/random.hpp"

using namespace opforge;

namespace {

Rational Q(long n, long d = 1) { return Rational(n, d); }
AffineMap1 I(Rational lo, Rational hi) { return AffineMap1::from_image(lo, hi); }
Permutation P(std::vector<int> v) { return Permutation(std::move(v)); }
Letter nc(const std::string& x) { return Letter{LetterKind::NonCentral, x}; }
Letter lt(LetterKind k, const std::string& x) { return Letter{k, x}; }

constexpr NodeId s1 = 1;
constexpr NodeId s2 = 2;
constexpr NodeId root = DiskForest::kRoot;

Muffler puck(AffineMap1 t, NodeId disk) { return Muffler{t, disk, {disk}}; }
Muffler two_holed(AffineMap1 t) { return Muffler{t, root, {s1, s2}}; }

const Alphabet& alphabet() {
  static const Alphabet a =
      Alphabet::parse("knot trefoil\nknot fig8\nnoncentral X\nnoncentral Y\nnoncentral Z lk=1\n");
  return a;
}

std::vector<LinkWord> random_links(Rng& rng, const InfectionDiagram& d) {
  std::vector<LinkWord> links;
  for (int c : d.input_colors()) {
    links.push_back(random_word(rng, alphabet(), c, 3));
  }
  return links;
}

// Independent evaluation: multiply contributions along a sequence in which
// a muffler whose interval ends before another starts comes first, and
// mufflers sharing interior time follow the given order.
std::optional<LinkWord> evaluate_along(const InfectionDiagram& d, const std::vector<std::size_t>& seq,
                                       const Permutation& sigma, std::span<const LinkWord> links) {
  const auto pos = sigma.inverse();
  for (std::size_t x = 0; x < seq.size(); ++x) {
    for (std::size_t y = x + 1; y < seq.size(); ++y) {
      const auto& a = d.muffler(seq[x]).time;
      const auto& b = d.muffler(seq[y]).time;
      if (b.hi() <= a.lo()) {
        return std::nullopt;
      }
      if (open_intersect(a, b) &&
          pos(static_cast<int>(seq[x])) > pos(static_cast<int>(seq[y]))) {
        return std::nullopt;
      }
    }
  }
  LinkWord w = LinkWord::trivial(d.output_color());
  for (std::size_t k : seq) {
    w = mul(w, contribution(d, k, links[k - 1]));
  }
  return w;
}

}  // namespace

TEST_CASE("hole semantics and muffler types") {
  const DiskForest f = DiskForest::standard(2);
  const std::vector<Muffler> ms{puck(I(Q(0), Q(1, 5)), s1), puck(I(Q(1, 5), Q(2, 5)), s2),
                                puck(I(Q(2, 5), Q(3, 5)), root), two_holed(I(Q(3, 5), Q(4, 5)))};
  const InfectionDiagram d(2, f, ms, Permutation::identity(4));
  CHECK(hole_semantics(d, 1) == std::vector<StrandSet>{{1}});
  CHECK(hole_semantics(d, 3) == std::vector<StrandSet>{{1, 2}});
  CHECK(hole_semantics(d, 4) == std::vector<StrandSet>{{1}, {2}});
  CHECK(muffler_type(d, 1) == MufflerType::A1);
  CHECK(muffler_type(d, 2) == MufflerType::A2);
  CHECK(muffler_type(d, 3) == MufflerType::B);
  CHECK(muffler_type(d, 4) == MufflerType::TwoHoled);

  DiskForest g = DiskForest::standard(2);
  const NodeId free_disk = g.add_node(root, "free");
  const NodeId other = g.add_node(root, "other");
  const std::vector<Muffler> idle{Muffler{I(Q(0), Q(1)), free_disk, {free_disk}}};
  CHECK(muffler_type(InfectionDiagram(2, g, idle, P({1})), 1) == MufflerType::Idle);
  const std::vector<Muffler> swapped{Muffler{I(Q(0), Q(1)), root, {s2, s1}}};
  CHECK_THROWS_AS(muffler_type(InfectionDiagram(2, g, swapped, P({1})), 1), OperadError);
  const std::vector<Muffler> half{Muffler{I(Q(0), Q(1)), root, {s1, other}}};
  CHECK_THROWS_AS(muffler_type(InfectionDiagram(2, g, half, P({1})), 1), OperadError);
  CHECK_THROWS_AS(muffler_type(identity_diagram(3), 1), OperadError);
}

TEST_CASE("act examples") {
  const LinkWord f = LinkWord::of(nc("X"));
  const LinkWord g = LinkWord::of(nc("Y"));
  const CubesElement halves(1, {LittleCube{{I(Q(1, 2), Q(1))}}, LittleCube{{I(Q(0), Q(1, 2))}}});
  const auto stack = c1_to_stacking(halves, 2);
  // muffler 2 comes first in time
  const std::vector<LinkWord> links{f, g};
  CHECK(act(stack, links) == mul(g, f));

  const DiskForest forest = DiskForest::standard(2);
  const LinkWord k = LinkWord::knots({"trefoil"});
  const std::vector<LinkWord> one{k};
  const InfectionDiagram b(2, forest, {puck(I(Q(0), Q(1)), root)}, P({1}));
  CHECK(act(b, one).central() == std::vector<Letter>{lt(LetterKind::Cable, "trefoil")});
  const InfectionDiagram a1(2, forest, {puck(I(Q(0), Q(1)), s1)}, P({1}));
  CHECK(act(a1, one) == LinkWord::of(lt(LetterKind::SplitA, "trefoil")));
  const InfectionDiagram a2(2, forest, {puck(I(Q(0), Q(1)), s2)}, P({1}));
  CHECK(act(a2, one) == LinkWord::of(lt(LetterKind::SplitB, "trefoil")));

  // composite knots split and cable letter by letter
  const std::vector<LinkWord> composite{LinkWord::knots({"trefoil", "fig8", "trefoil"})};
  CHECK(act(b, composite).central() ==
        std::vector<Letter>{lt(LetterKind::Cable, "fig8"), lt(LetterKind::Cable, "trefoil"),
                            lt(LetterKind::Cable, "trefoil")});

  CHECK_THROWS_AS(act(b, links), OperadError);
  CHECK_THROWS_AS(act(stack, one), OperadError);
  const std::vector<LinkWord> wrong{f};
  CHECK_THROWS_AS(act(b, wrong), OperadError);
}

TEST_CASE("identity diagrams act trivially") {
  Rng rng(3);
  for (int c = 1; c <= 2; ++c) {
    for (int trial = 0; trial < 50; ++trial) {
      const std::vector<LinkWord> w{random_word(rng, alphabet(), c, 5)};
      CHECK(act(identity_diagram(c), w) == w[0]);
    }
  }
  const InfectionDiagram empty(2, DiskForest::standard(2), {}, Permutation());
  CHECK(act(empty, std::vector<LinkWord>{}) == LinkWord::trivial(2));
}

TEST_CASE("comm swap examples") {
  const DiskForest forest = DiskForest::standard(2);
  const std::vector<LinkWord> knot_and_x{LinkWord::knots({"trefoil"}), LinkWord::of(nc("X"))};
  for (NodeId disk : {s1, s2, root}) {
    const InfectionDiagram d(2, forest, {puck(I(Q(0), Q(1, 2)), disk), two_holed(I(Q(1, 2), Q(1)))},
                             P({1, 2}));
    CHECK(verify_comm_swap(d, 1, 2, knot_and_x));
    CHECK(swap_times(d, 1, 2).muffler(1).time == I(Q(1, 2), Q(1)));
  }
  const InfectionDiagram two(2, forest, {two_holed(I(Q(0), Q(1, 2))), two_holed(I(Q(1, 2), Q(1)))},
                             P({1, 2}));
  const std::vector<LinkWord> xy{LinkWord::of(nc("X")), LinkWord::of(nc("Y"))};
  CHECK_FALSE(verify_comm_swap(two, 1, 2, xy));
  const std::vector<LinkWord> xx{LinkWord::of(nc("X")), LinkWord::of(nc("X"))};
  CHECK(verify_comm_swap(two, 1, 2, xx));

  DiskForest g = DiskForest::standard(2);
  const NodeId free_disk = g.add_node(root, "free");
  const InfectionDiagram idle(2, g, {puck(I(Q(0), Q(1, 2)), free_disk), two_holed(I(Q(1, 2), Q(1)))},
                              P({1, 2}));
  CHECK_THROWS_AS(verify_comm_swap(idle, 1, 2, knot_and_x), OperadError);
}

TEST_CASE("swap trades places in the order when it has to") {
  // The A1 puck sits in hole s1 while muffler 1 runs, so it must act first.
  // After the swap it overlaps muffler 2 instead, which then has to follow it.
  const DiskForest forest = DiskForest::standard(2);
  const InfectionDiagram d(
      2, forest, {two_holed(I(Q(0), Q(1, 2))), two_holed(I(Q(1, 2), Q(1))), puck(I(Q(1, 4), Q(3, 8)), s1)},
      P({2, 3, 1}));
  REQUIRE_FALSE(check_constraint(d));
  const InfectionDiagram kept(2, forest, {two_holed(I(Q(1, 2), Q(1))), two_holed(I(Q(0), Q(1, 2))),
                                          puck(I(Q(1, 4), Q(3, 8)), s1)},
                              P({2, 3, 1}));
  REQUIRE(check_constraint(kept));
  const auto swapped = swap_times(d, 1, 2);
  CHECK_FALSE(check_constraint(swapped));
  CHECK(swapped.order() == InfectionDiagram(2, forest, swapped.mufflers(), P({1, 3, 2})).order());

  const std::vector<LinkWord> central{LinkWord::of(lt(LetterKind::Cable, "fig8")), LinkWord::of(nc("Y")),
                                      LinkWord::knots({"fig8"})};
  CHECK(verify_comm_swap(d, 1, 2, central));
  const std::vector<LinkWord> free_pair{LinkWord::of(nc("X")), LinkWord::of(nc("Y")), LinkWord::knots({"fig8"})};
  CHECK_FALSE(verify_comm_swap(d, 1, 2, free_pair));
  // Muffler 2 in the puck's slot would overlap muffler 1.
  CHECK_THROWS_AS(verify_comm_swap(d, 2, 3, free_pair), OperadError);
}

TEST_CASE("decompose_S2 examples") {
  const auto empty = decompose_S2(LinkWord::trivial(2), alphabet());
  CHECK(empty.stacking.arity() == 0);
  CHECK(empty.factors.empty());
  const auto single = decompose_S2(LinkWord::of(nc("X")), alphabet());
  CHECK(single.stacking == canonical_stacking(1));
  CHECK(single.factors == std::vector<LinkWord>{LinkWord::of(nc("X"))});

  LinkWord xyx = LinkWord::trivial(2);
  for (const auto& name : {"X", "Y", "X"}) {
    xyx = mul(xyx, LinkWord::of(nc(name)));
  }
  const auto three = decompose_S2(xyx, alphabet());
  CHECK(three.stacking == canonical_stacking(3));
  CHECK(three.factors.size() == 3);
  CHECK(equals(act(three.stacking, three.factors), xyx));
  const auto cube = stacking_to_c1(three.stacking);
  REQUIRE(cube);
  CHECK(cube->cubes()[1].axes[0] == I(Q(1, 3), Q(2, 3)));

  CHECK_THROWS_AS(decompose_S2(LinkWord::of(nc("Z")), alphabet()), OperadError);
  CHECK_THROWS_AS(decompose_S2(LinkWord::of(lt(LetterKind::Cable, "fig8")), alphabet()), OperadError);
  CHECK_THROWS_AS(decompose_S2(add_twists(LinkWord::of(nc("X")), 1), alphabet()), OperadError);
}

TEST_CASE("algebra axioms on random diagrams") {
  Rng rng(1016);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int output = rng.range(1, 2);
    const auto colors = random_inputs(rng, output, static_cast<std::size_t>(rng.range(0, 3)), 2, true);
    const auto outer = random_diagram(rng, output, colors, true);
    std::vector<InfectionDiagram> inners;
    std::vector<std::size_t> sizes;
    for (int c : colors) {
      inners.push_back(random_diagram(
          rng, c, random_inputs(rng, c, static_cast<std::size_t>(rng.range(0, 3)), 2, true), true));
      sizes.push_back(inners.back().arity());
    }
    const auto composite = compose(outer, inners);
    const auto links = random_links(rng, composite);

    std::vector<LinkWord> partial;
    std::size_t at = 0;
    for (const auto& inner : inners) {
      partial.push_back(act(inner, std::span<const LinkWord>(links).subspan(at, inner.arity())));
      at += inner.arity();
    }
    CHECK(act(composite, links) == act(outer, partial));

    const auto sigma = random_permutation(rng, outer.arity());
    CHECK(act(act_symmetric(outer, sigma), apply_to_list(sigma, partial)) == act(outer, partial));
    std::vector<InfectionDiagram> identities;
    for (int c : colors) {
      identities.push_back(identity_diagram(c));
    }
    CHECK(act(compose(outer, identities), partial) == act(outer, partial));
    const std::vector<InfectionDiagram> wrapped{outer};
    CHECK(act(compose(identity_diagram(output), wrapped), partial) == act(outer, partial));
    ++checked;
  }
  CHECK(checked == 300);
}

TEST_CASE("act does not depend on the order representative") {
  Rng rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const int output = rng.range(1, 2);
    const auto colors = random_inputs(rng, output, static_cast<std::size_t>(rng.range(1, 4)), 2, true);
    const auto d = random_diagram(rng, output, colors, true);
    const auto links = random_links(rng, d);
    const LinkWord expected = act(d, links);
    for (const auto& sigma : all_permutations(d.arity())) {
      const InfectionDiagram rep(output, d.forest(), d.mufflers(), sigma);
      if (check_constraint(rep)) {
        continue;
      }
      std::vector<std::size_t> seq(d.arity());
      std::iota(seq.begin(), seq.end(), std::size_t{1});
      do {
        if (auto w = evaluate_along(d, seq, sigma, links)) {
          CHECK(*w == expected);
        }
      } while (std::next_permutation(seq.begin(), seq.end()));
    }
  }
}

TEST_CASE("knot stacking is commutative") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(rng.range(1, 5));
    const auto d = random_diagram(rng, 1, std::vector<int>(n, 1), true);
    const auto links = random_links(rng, d);
    auto mufflers = d.mufflers();
    const auto shuffle = random_permutation(rng, n);
    for (std::size_t k = 0; k < n; ++k) {
      mufflers[k].time = d.mufflers()[static_cast<std::size_t>(shuffle(static_cast<int>(k) + 1) - 1)].time;
    }
    const InfectionDiagram reordered(1, d.forest(), mufflers, d.order());
    REQUIRE_FALSE(check_constraint(reordered));
    CHECK(act(reordered, links) == act(d, links));
  }
}

TEST_CASE("decompose_S2 round trips") {
  Rng rng(5);
  const Alphabet free_letters = Alphabet::parse("noncentral X\nnoncentral Y\nnoncentral W\n");
  for (int trial = 0; trial < 200; ++trial) {
    const LinkWord w = random_word(rng, free_letters, 2, 9, false);
    const auto dec = decompose_S2(w, free_letters);
    CHECK(equals(act(dec.stacking, dec.factors), w));
    CHECK(decompose_S2(act(dec.stacking, dec.factors), free_letters) == dec);
  }
}
