#include "opforge/action.hpp"

#include <algorithm>
#include <numeric>

namespace opforge {

std::vector<StrandSet> hole_semantics(const InfectionDiagram& d, std::size_t k) {
  const Muffler& m = d.muffler(k);
  const auto strands = d.strands();
  std::vector<StrandSet> result;
  for (NodeId h : m.holes) {
    StrandSet set;
    for (std::size_t j = 0; j < strands.size(); ++j) {
      if (inside_or_equal(d.forest(), strands[j], h)) {
        set.push_back(static_cast<int>(j) + 1);
      }
    }
    result.push_back(std::move(set));
  }
  return result;
}

const char* to_string(MufflerType t) {
  switch (t) {
    case MufflerType::Stack:
      return "stack";
    case MufflerType::A1:
      return "A1";
    case MufflerType::A2:
      return "A2";
    case MufflerType::B:
      return "B";
    case MufflerType::TwoHoled:
      return "two-holed";
    case MufflerType::Idle:
      return "idle";
  }
  return "?";
}

MufflerType muffler_type(const InfectionDiagram& d, std::size_t k) {
  const auto sets = hole_semantics(d, k);
  const std::string where = "muffler " + std::to_string(k) + ": ";
  const bool idle = std::all_of(sets.begin(), sets.end(), [](const StrandSet& s) { return s.empty(); });
  if (d.output_color() == 1) {
    if (sets.size() != 1) {
      throw OperadError(where + "a knot only takes one-holed mufflers");
    }
    return idle ? MufflerType::Idle : MufflerType::Stack;
  }
  if (d.output_color() != 2) {
    throw OperadError(where + "the action is implemented for 1- and 2-string links only");
  }
  if (idle) {
    return MufflerType::Idle;
  }
  if (sets.size() == 1) {
    if (sets[0] == StrandSet{1, 2}) {
      return MufflerType::B;
    }
    return sets[0] == StrandSet{1} ? MufflerType::A1 : MufflerType::A2;
  }
  if (sets.size() == 2 && sets[0] == StrandSet{1} && sets[1] == StrandSet{2}) {
    return MufflerType::TwoHoled;
  }
  throw OperadError(where + "hole placement has no symbolic action (strands swapped or split)");
}

LinkWord contribution(const InfectionDiagram& d, std::size_t k, const LinkWord& input) {
  const Muffler& m = d.muffler(k);
  if (input.color() != m.color()) {
    throw OperadError("muffler " + std::to_string(k) + " has color " + std::to_string(m.color()) +
                      " but its link has color " + std::to_string(input.color()));
  }
  const MufflerType type = muffler_type(d, k);
  const auto relabel = [&](LetterKind kind) {
    // Cables and splits of a composite knot are products over its prime factors.
    std::vector<Letter> letters;
    for (const auto& knot : input.central()) {
      letters.push_back(Letter{kind, knot.name});
    }
    return LinkWord::link(0, std::move(letters), {});
  };
  switch (type) {
    case MufflerType::Stack:
    case MufflerType::TwoHoled:
      return input;
    case MufflerType::A1:
      return relabel(LetterKind::SplitA);
    case MufflerType::A2:
      return relabel(LetterKind::SplitB);
    case MufflerType::B:
      return relabel(LetterKind::Cable);
    case MufflerType::Idle:
      break;
  }
  return LinkWord::trivial(d.output_color());
}

LinkWord act(const InfectionDiagram& d, std::span<const LinkWord> links) {
  if (links.size() != d.arity()) {
    throw OperadError("act: " + std::to_string(links.size()) + " links for arity " +
                      std::to_string(d.arity()));
  }
  if (auto bad = check_constraint(d)) {
    throw OperadError("act: diagram violates the continuity constraint: " + bad->reason);
  }
  const Permutation position = d.order().inverse();
  std::vector<std::size_t> sequence(d.arity());
  std::iota(sequence.begin(), sequence.end(), std::size_t{1});
  std::sort(sequence.begin(), sequence.end(), [&](std::size_t a, std::size_t b) {
    const auto& ta = d.muffler(a).time;
    const auto& tb = d.muffler(b).time;
    if (ta.lo() != tb.lo()) {
      return ta.lo() < tb.lo();
    }
    if (ta.hi() != tb.hi()) {
      return ta.hi() < tb.hi();
    }
    return position(static_cast<int>(a)) < position(static_cast<int>(b));
  });
  LinkWord result = LinkWord::trivial(d.output_color());
  for (std::size_t k : sequence) {
    result = mul(result, contribution(d, k, links[k - 1]));
  }
  return result;
}

InfectionDiagram swap_times(const InfectionDiagram& d, std::size_t i, std::size_t k) {
  std::vector<Muffler> mufflers = d.mufflers();
  std::swap(mufflers.at(i - 1).time, mufflers.at(k - 1).time);
  InfectionDiagram kept(d.output_color(), d.forest(), mufflers, d.order());
  if (!check_constraint(kept)) {
    return kept;
  }
  std::vector<int> exchange(d.arity());
  std::iota(exchange.begin(), exchange.end(), 1);
  std::swap(exchange[i - 1], exchange[k - 1]);
  InfectionDiagram traded(d.output_color(), d.forest(), std::move(mufflers),
                          compose(Permutation(exchange), d.order()));
  if (auto bad = check_constraint(traded)) {
    throw OperadError("swap: no valid order after exchanging times: " + bad->reason);
  }
  return traded;
}

bool verify_comm_swap(const InfectionDiagram& d, std::size_t i, std::size_t k,
                      std::span<const LinkWord> links) {
  for (std::size_t index : {i, k}) {
    const MufflerType t = muffler_type(d, index);
    if (t != MufflerType::A1 && t != MufflerType::A2 && t != MufflerType::B &&
        t != MufflerType::TwoHoled) {
      throw OperadError("swap: muffler " + std::to_string(index) + " is of type " + to_string(t) +
                        ", expected A1, A2, B or two-holed");
    }
  }
  return act(d, links) == act(swap_times(d, i, k), links);
}

InfectionDiagram canonical_stacking(std::size_t n) {
  std::vector<LittleCube> cubes;
  for (std::size_t i = 0; i < n; ++i) {
    const auto lo = Rational(static_cast<long>(i), static_cast<long>(n));
    const auto hi = Rational(static_cast<long>(i + 1), static_cast<long>(n));
    cubes.push_back(LittleCube{{AffineMap1::from_image(lo, hi)}});
  }
  return c1_to_stacking(CubesElement(1, std::move(cubes)), 2);
}

S2Decomposition decompose_S2(const LinkWord& w, const Alphabet& alphabet) {
  if (!in_S2_0(w, alphabet)) {
    throw OperadError("decompose_S2: " + to_string(w) + " is not in S_2^0");
  }
  S2Decomposition result{canonical_stacking(w.body().size()), {}};
  for (const auto& letter : w.body()) {
    result.factors.push_back(LinkWord::of(letter));
  }
  return result;
}

}  // namespace opforge
