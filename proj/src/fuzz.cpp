#include "opforge/fuzz.hpp"

#include <array>

#include "opforge/action.hpp"
#include "opforge/cubes.hpp"
#include "opforge/overlap.hpp"

namespace opforge {

const char* to_string(Law law) {
  static const char* names[] = {"assoc", "symm", "ident", "dagger", "action"};
  return names[static_cast<int>(law)];
}

const char* to_string(Family family) {
  static const char* names[] = {"cubes", "overlap", "diagram"};
  return names[static_cast<int>(family)];
}

std::vector<Law> parse_laws(std::string_view csv) {
  std::vector<Law> laws;
  std::size_t start = 0;
  while (start <= csv.size()) {
    const std::size_t comma = std::min(csv.find(',', start), csv.size());
    const std::string_view name = csv.substr(start, comma - start);
    bool found = false;
    for (Law law : {Law::Assoc, Law::Symm, Law::Ident, Law::Dagger, Law::Action}) {
      if (name == to_string(law)) {
        if (std::find(laws.begin(), laws.end(), law) != laws.end()) {
          throw OperadError("law '" + std::string(name) + "' listed twice");
        }
        laws.push_back(law);
        found = true;
      }
    }
    if (!found) {
      throw OperadError("unknown law '" + std::string(name) + "'");
    }
    start = comma + 1;
  }
  return laws;
}

namespace {

constexpr int kMaxColor = 3;

struct Cubes {
  using T = CubesElement;
  std::size_t dim;
  int top(Rng&) const { return 1; }
  T make(Rng& rng, int, std::size_t n) const { return random_cubes(rng, dim, n); }
  std::vector<int> slots(const T& e) const { return std::vector<int>(e.arity(), 1); }
  T identity(int) const { return CubesElement::identity(dim); }
  T compose(const T& o, std::span<const T> in) const { return cubes_compose(o, in); }
  T permute(const T& e, const Permutation& p) const { return act_symmetric(e, p); }
};

struct Overlap {
  using T = OverlapElement;
  int top(Rng&) const { return 1; }
  T make(Rng& rng, int, std::size_t n) const { return random_overlap(rng, n); }
  std::vector<int> slots(const T& e) const { return std::vector<int>(e.arity(), 1); }
  T identity(int) const { return OverlapElement::identity(); }
  T compose(const T& o, std::span<const T> in) const { return compose_overlap(o, in); }
  T permute(const T& e, const Permutation& p) const { return act_symmetric(e, p); }
};

struct Diagrams {
  using T = InfectionDiagram;
  bool action_ready = false;
  int top(Rng& rng) const { return rng.range(1, action_ready ? 2 : kMaxColor); }
  T make(Rng& rng, int color, std::size_t n) const {
    return random_diagram(rng, color, random_inputs(rng, color, n, kMaxColor, action_ready), action_ready);
  }
  std::vector<int> slots(const T& e) const { return e.input_colors(); }
  T identity(int c) const { return identity_diagram(c); }
  T compose(const T& o, std::span<const T> in) const { return opforge::compose(o, in); }
  T permute(const T& e, const Permutation& p) const { return act_symmetric(e, p); }
};

std::size_t arity(Rng& rng, int max) { return static_cast<std::size_t>(rng.range(0, max)); }

template <typename F>
struct Nest {
  typename F::T outer;
  std::vector<typename F::T> inners;
  std::vector<std::size_t> sizes;
};

template <typename F>
Nest<F> nest(const F& fam, Rng& rng, int max) {
  Nest<F> n{fam.make(rng, fam.top(rng), arity(rng, max)), {}, {}};
  for (int c : fam.slots(n.outer)) {
    n.inners.push_back(fam.make(rng, c, arity(rng, max)));
    n.sizes.push_back(n.inners.back().arity());
  }
  return n;
}

template <typename T>
LawResult expect_equal(const T& lhs, const T& rhs, const std::string& what) {
  if (lhs == rhs) {
    return {};
  }
  return {false, what + ": " + to_string(lhs) + " vs " + to_string(rhs)};
}

template <typename F>
LawResult assoc(const F& fam, Rng& rng, int max) {
  const auto n = nest(fam, rng, max);
  const auto composite = fam.compose(n.outer, n.inners);
  std::vector<typename F::T> third;
  for (int c : fam.slots(composite)) {
    third.push_back(fam.make(rng, c, arity(rng, 2)));
  }
  std::vector<typename F::T> grouped;
  std::size_t at = 0;
  for (const auto& inner : n.inners) {
    const std::span<const typename F::T> slice(third.data() + at, inner.arity());
    grouped.push_back(fam.compose(inner, slice));
    at += inner.arity();
  }
  return expect_equal(fam.compose(composite, third), fam.compose(n.outer, grouped), "associativity");
}

template <typename F>
LawResult symm(const F& fam, Rng& rng, int max) {
  const auto n = nest(fam, rng, max);
  const auto composite = fam.compose(n.outer, n.inners);
  const auto sigma = random_permutation(rng, n.outer.arity());
  const auto moved = apply_to_list(sigma, n.inners);
  auto r = expect_equal(fam.compose(fam.permute(n.outer, sigma), moved),
                        fam.permute(composite, block_permutation(sigma, {n.sizes})), "block symmetry");
  if (!r.ok) {
    return r;
  }
  std::vector<Permutation> taus;
  std::vector<typename F::T> acted;
  for (const auto& inner : n.inners) {
    taus.push_back(random_permutation(rng, inner.arity()));
    acted.push_back(fam.permute(inner, taus.back()));
  }
  return expect_equal(fam.compose(n.outer, acted), fam.permute(composite, direct_sum(taus)),
                      "direct-sum symmetry");
}

template <typename F>
LawResult ident(const F& fam, Rng& rng, int max) {
  const int top = fam.top(rng);
  const auto e = fam.make(rng, top, arity(rng, max));
  const std::vector<typename F::T> single{e};
  auto r = expect_equal(fam.compose(fam.identity(top), single), e, "left identity");
  if (!r.ok) {
    return r;
  }
  std::vector<typename F::T> ids;
  for (int c : fam.slots(e)) {
    ids.push_back(fam.identity(c));
  }
  return expect_equal(fam.compose(e, ids), e, "right identity");
}

LawResult dagger(Rng& rng, int max) {
  const Diagrams fam;
  const auto n = nest(fam, rng, max);
  std::vector<const InfectionDiagram*> inputs{&n.outer};
  for (const auto& inner : n.inners) {
    inputs.push_back(&inner);
  }
  for (const auto* d : inputs) {
    if (auto bad = check_constraint(*d)) {
      return {false, "generator produced an invalid diagram: " + bad->reason};
    }
  }
  const auto composite = fam.compose(n.outer, n.inners);
  if (auto bad = check_constraint(composite)) {
    return {false, "composite violates the constraint: " + bad->reason + " in " + to_string(composite)};
  }
  const auto sigma = random_permutation(rng, composite.arity());
  if (auto bad = check_constraint(act_symmetric(composite, sigma))) {
    return {false, "permuted composite violates the constraint: " + bad->reason};
  }
  return {};
}

LawResult action(Rng& rng, int max) {
  const Diagrams fam{true};
  const auto n = nest(fam, rng, max);
  const auto composite = fam.compose(n.outer, n.inners);
  static const Alphabet alphabet =
      Alphabet::parse("knot trefoil\nknot fig8\nnoncentral X\nnoncentral Y\nnoncentral Z lk=1\n");
  std::vector<LinkWord> links;
  for (int c : composite.input_colors()) {
    links.push_back(random_word(rng, alphabet, c, 3));
  }
  std::vector<LinkWord> partial;
  std::size_t at = 0;
  for (const auto& inner : n.inners) {
    partial.push_back(act(inner, std::span<const LinkWord>(links).subspan(at, inner.arity())));
    at += inner.arity();
  }
  auto r = expect_equal(act(composite, links), act(n.outer, partial), "action associativity");
  if (!r.ok) {
    return r;
  }
  const auto sigma = random_permutation(rng, n.outer.arity());
  r = expect_equal(act(act_symmetric(n.outer, sigma), apply_to_list(sigma, partial)), act(n.outer, partial),
                   "action symmetry");
  if (!r.ok) {
    return r;
  }
  const std::vector<LinkWord> one{links.empty() ? LinkWord::trivial(n.outer.output_color()) : act(composite, links)};
  return expect_equal(act(identity_diagram(one[0].color()), one), one[0], "action identity");
}

}  // namespace

LawResult check_law(Law law, Family family, Rng& rng, int max_arity) {
  try {
    if (law == Law::Dagger || law == Law::Action) {
      if (family != Family::Diagram) {
        throw OperadError(std::string(to_string(law)) + " is only defined for diagrams");
      }
      return law == Law::Dagger ? dagger(rng, max_arity) : action(rng, max_arity);
    }
    const auto run = [&](const auto& fam) {
      switch (law) {
        case Law::Assoc:
          return assoc(fam, rng, max_arity);
        case Law::Symm:
          return symm(fam, rng, max_arity);
        default:
          return ident(fam, rng, max_arity);
      }
    };
    switch (family) {
      case Family::Cubes:
        return run(Cubes{static_cast<std::size_t>(rng.range(1, 2))});
      case Family::Overlap:
        return run(Overlap{});
      case Family::Diagram:
        return run(Diagrams{});
    }
  } catch (const GraftConflict& e) {
    return {false, std::string("graft conflict: ") + e.what()};
  }
  return {};
}

std::string FuzzReport::text() const {
  std::string out = "fuzz seed=" + std::to_string(seed) + " ops=" + std::to_string(ops) + " laws=";
  for (std::size_t i = 0; i < tallies.size(); ++i) {
    out += (i > 0 ? "," : "") + std::string(to_string(tallies[i].law));
  }
  out += "\n";
  for (const auto& t : tallies) {
    out += std::string(to_string(t.law)) + ": " + std::to_string(t.checked) + " checked, " +
           std::to_string(t.failed) + " failed\n";
  }
  for (const auto& f : failures) {
    out += "FAIL op=" + std::to_string(f.op) + " law=" + to_string(f.law) + " family=" + to_string(f.family) +
           ": " + f.detail + "\n";
  }
  return out + (passed() ? "result: PASS\n" : "result: FAIL\n");
}

FuzzReport fuzz(std::uint64_t seed, std::size_t ops, std::span<const Law> laws) {
  FuzzReport report{seed, ops, {}, {}};
  for (Law law : laws) {
    report.tallies.push_back(LawTally{law});
  }
  if (laws.empty()) {
    return report;
  }
  for (std::size_t i = 0; i < ops; ++i) {
    const std::size_t which = i % laws.size();
    const Law law = laws[which];
    const bool diagrams_only = law == Law::Dagger || law == Law::Action;
    const auto family = diagrams_only ? Family::Diagram : static_cast<Family>((i / laws.size()) % 3);
    Rng rng(seed ^ (0x9E3779B97F4A7C15ULL * (i + 1)));
    const LawResult r = check_law(law, family, rng);
    ++report.tallies[which].checked;
    if (!r.ok) {
      ++report.tallies[which].failed;
      report.failures.push_back(FuzzFailure{i, law, family, r.detail});
    }
  }
  return report;
}

}  // namespace opforge
