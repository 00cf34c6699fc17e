#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <regex>

#include "opforge/action.hpp"
#include "opforge/random.hpp"
#include "opforge/render.hpp"

using namespace opforge;

namespace {

struct Box {
  double x, y, w, h;
};
struct Disk {
  double cx, cy, r;
};

double attr(const std::string& element, const std::string& name) {
  const std::regex re(" " + name + "=\"([-0-9.]+)\"");
  std::smatch m;
  REQUIRE(std::regex_search(element, m, re));
  return std::stod(m[1]);
}

std::map<std::string, Box> rects(const std::string& svg) {
  std::map<std::string, Box> out;
  const std::regex re("<rect id=\"([^\"]+)\"[^>]*/>");
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), re); it != std::sregex_iterator(); ++it) {
    const std::string e = it->str();
    out[(*it)[1]] = Box{attr(e, "x"), attr(e, "y"), attr(e, "width"), attr(e, "height")};
  }
  return out;
}

std::map<std::string, Disk> circles(const std::string& svg) {
  std::map<std::string, Disk> out;
  const std::regex re("<circle id=\"disk-([^\"]+)\"[^>]*/>");
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), re); it != std::sregex_iterator(); ++it) {
    const std::string e = it->str();
    out[(*it)[1]] = Disk{attr(e, "cx"), attr(e, "cy"), attr(e, "r")};
  }
  return out;
}

// Geometric relation of two drawn circles.
DiskRelation drawn(const Disk& a, const Disk& b) {
  const double d = std::hypot(a.cx - b.cx, a.cy - b.cy);
  if (d < 1e-9 && std::abs(a.r - b.r) < 1e-9) {
    return DiskRelation::Equal;
  }
  if (d + a.r < b.r) {
    return DiskRelation::StrictlyInside;
  }
  if (d + b.r < a.r) {
    return DiskRelation::StrictlyContains;
  }
  CHECK(d > a.r + b.r);
  return DiskRelation::Disjoint;
}

}  // namespace

TEST_CASE("identity diagram renders one full-height rectangle") {
  const std::string svg = render_svg(identity_diagram(2));
  const auto r = rects(svg);
  REQUIRE(r.count("muffler-1"));
  CHECK(r.at("muffler-1").h == doctest::Approx(r.at("frame").h));
  CHECK(r.at("muffler-1").w == doctest::Approx(r.at("frame").w));
  CHECK_FALSE(r.count("muffler-2"));
  const auto c = circles(svg);
  CHECK(c.size() == 3);
  CHECK(drawn(c.at("s1"), c.at("root")) == DiskRelation::StrictlyInside);
  CHECK(drawn(c.at("s1"), c.at("s2")) == DiskRelation::Disjoint);
  CHECK(svg.find("id=\"strand-2\"") != std::string::npos);
}

TEST_CASE("stacking element renders stacked slots") {
  const std::string svg = render_svg(canonical_stacking(3));
  const auto r = rects(svg);
  for (int k = 1; k <= 3; ++k) {
    CHECK(r.at("muffler-" + std::to_string(k)).h == doctest::Approx(r.at("frame").h / 3));
  }
  // muffler 1 is earliest, so lowest
  CHECK(r.at("muffler-1").y > r.at("muffler-2").y);
  CHECK(r.at("muffler-2").y > r.at("muffler-3").y);
  CHECK(r.at("muffler-1").y == doctest::Approx(r.at("muffler-2").y + r.at("muffler-2").h));
}

TEST_CASE("drawn nesting matches the forest") {
  Rng rng(8);
  for (int trial = 0; trial < 60; ++trial) {
    const int output = rng.range(1, 3);
    const auto d = random_diagram(
        rng, output, random_inputs(rng, output, static_cast<std::size_t>(rng.range(1, 4)), 3, false));
    const auto c = circles(render_svg(d));
    const auto& f = d.forest();
    REQUIRE(c.size() == f.size());
    for (NodeId a = 0; a < f.size(); ++a) {
      for (NodeId b = 0; b < f.size(); ++b) {
        CHECK(drawn(c.at(f.name(a)), c.at(f.name(b))) == relation(f, a, b));
      }
    }
    // each muffler spans its outer disk's width in the side view
    const auto r = rects(render_svg(d));
    for (std::size_t k = 1; k <= d.arity(); ++k) {
      CHECK(r.at("muffler-" + std::to_string(k)).w == doctest::Approx(2 * c.at(f.name(d.muffler(k).outer)).r).epsilon(0.01));
    }
  }
}

TEST_CASE("output is deterministic") {
  Rng a(99);
  Rng b(99);
  for (int trial = 0; trial < 20; ++trial) {
    const auto da = random_diagram(a, 2, random_inputs(a, 2, 3, 3, false));
    const auto db = random_diagram(b, 2, random_inputs(b, 2, 3, 3, false));
    CHECK(render_svg(da) == render_svg(db));
    CHECK(render_ascii(da) == render_ascii(db));
  }
}

TEST_CASE("cubes and overlap pictures") {
  const CubesElement halves(1, {LittleCube{{AffineMap1::from_image(Rational(0), Rational(1, 2))}},
                                LittleCube{{AffineMap1::from_image(Rational(1, 2), Rational(1))}}});
  const auto r = rects(render_svg(halves));
  CHECK(r.at("cube-1").y > r.at("cube-2").y);
  CHECK(render_ascii(halves) ==
        "cubes dim=1\n  1.1 |####################....................|\n"
        "  2.1 |....................####################|\n");
  const OverlapElement o({AffineMap1::from_image(Rational(0), Rational(1, 2)),
                          AffineMap1::from_image(Rational(1, 4), Rational(1))},
                         Permutation({2, 1}));
  const auto bars = rects(render_svg(o));
  CHECK(bars.at("interval-2").y < bars.at("interval-1").y);
  CHECK(render_ascii(o).find("  2 |..........##############################|") != std::string::npos);
  CHECK(render_ascii(identity_diagram(2)) ==
        "diagram sig=(2;2) order=perm[1]\n  1 |########################################| root (s1,s2)\n"
        "forest:\n  root\n    s1\n    s2\n");
}
