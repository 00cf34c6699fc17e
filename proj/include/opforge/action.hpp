#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "opforge/diagrams.hpp"
#include "opforge/linkmonoid.hpp"

namespace opforge {

/// Strand numbers (one-based, sorted) whose strand disk is inside or equal to
/// the hole.
using StrandSet = std::vector<int>;

/// One strand set per hole of muffler k (one-based).
std::vector<StrandSet> hole_semantics(const InfectionDiagram& d, std::size_t k);

/// How a muffler acts on the trivial core.
///  Stack:    one-holed muffler around the single strand of a color-1 core
///  A1, A2:   one-holed puck around strand 1 or 2 only (splits off a knot)
///  B:        one-holed puck around both strands (cables a knot)
///  TwoHoled: holes around strand 1 and strand 2, in that order
///  Idle:     no strand in any hole; the muffler re-embeds nothing of the link
enum class MufflerType { Stack, A1, A2, B, TwoHoled, Idle };

const char* to_string(MufflerType t);

/// Throws OperadError for hole placements with no symbolic meaning (strands
/// swapped, split across the holes, colors above 2).
MufflerType muffler_type(const InfectionDiagram& d, std::size_t k);

/// Word inserted by muffler k when its input is `input`.
LinkWord contribution(const InfectionDiagram& d, std::size_t k, const LinkWord& input);

/// The diagram acting on links. Contributions multiply in time order
/// (start, then end, then composition order).
LinkWord act(const InfectionDiagram& d, std::span<const LinkWord> links);

/// Exchanges the time intervals of mufflers i and k and compares the
/// actions before and after. Keeps the order if it stays valid, otherwise
/// lets i and k trade places in it.
bool verify_comm_swap(const InfectionDiagram& d, std::size_t i, std::size_t k,
                      std::span<const LinkWord> links);

/// The diagram with the time intervals of i and k exchanged (see above).
InfectionDiagram swap_times(const InfectionDiagram& d, std::size_t i, std::size_t k);

struct S2Decomposition {
  InfectionDiagram stacking;
  std::vector<LinkWord> factors;

  friend bool operator==(const S2Decomposition&, const S2Decomposition&) = default;
};

/// n equal slots stacked in index order, as an element of the stacking
/// suboperad with color 2.
InfectionDiagram canonical_stacking(std::size_t n);

/// Splits a word of S_2^0 into the canonical stacking element and its prime
/// factors (one-letter words, in order).
S2Decomposition decompose_S2(const LinkWord& w, const Alphabet& alphabet);

}  // namespace opforge
