#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "opforge/cubes.hpp"
#include "opforge/diskforest.hpp"
#include "opforge/perm.hpp"

namespace opforge {

/// A product-shaped muffler: time interval x cross-section. The cross-section
/// is an outer disk of the diagram's forest with `color` holes inside it. For
/// color 1 the single hole is the outer disk itself (i_1 is the identity).
struct Muffler {
  AffineMap1 time;
  NodeId outer = DiskForest::kRoot;
  std::vector<NodeId> holes;

  int color() const { return static_cast<int>(holes.size()); }
  friend bool operator==(const Muffler&, const Muffler&) = default;
};

/// Element of the infection operad with trivial core: the starting link is
/// the trivial fat c-string link, whose strand disks are the forest's marked
/// disks for the output color.
///
/// Muffler indices in this API are one-based, matching the order permutation;
/// index 0 stands for the core.
class InfectionDiagram {
public:
  /// Checks structure (forest, hole placement, degrees) but not the
  /// continuity constraint; see check_constraint. Stores the canonical order.
  InfectionDiagram(int output_color, DiskForest forest, std::vector<Muffler> mufflers,
                   const Permutation& order);

  int output_color() const { return output_; }
  std::vector<int> input_colors() const;
  std::size_t arity() const { return mufflers_.size(); }
  const DiskForest& forest() const { return forest_; }
  const std::vector<Muffler>& mufflers() const { return mufflers_; }
  /// One-based.
  const Muffler& muffler(std::size_t index) const;
  const Permutation& order() const { return order_; }
  std::vector<NodeId> strands() const { return forest_.marked(output_); }

  /// Same diagram up to forest isotopy: equal signatures, times and orders,
  /// and equal disk relations wherever they can be observed (see diagram_key).
  friend bool operator==(const InfectionDiagram& a, const InfectionDiagram& b);

private:
  int output_;
  DiskForest forest_;
  std::vector<Muffler> mufflers_;
  Permutation order_;
};

/// Closed time intervals meet and the outer disks are not disjoint.
bool images_intersect(const InfectionDiagram& d, std::size_t i, std::size_t k);

struct ConstraintViolation {
  /// One-based; 0 means the core.
  std::size_t earlier;
  std::size_t later;
  std::string reason;
};

/// Whether the earlier muffler may precede the later one: disjoint outers,
/// earlier outer inside or equal to a hole of the later, or the earlier time
/// interval misses the interior of the later.
bool pair_allowed(const DiskForest& f, const Muffler& earlier, const Muffler& later);

/// Whether a muffler can sit over the core: every strand disk is disjoint
/// from its outer disk or inside or equal to one of its holes.
bool core_allowed(const DiskForest& f, std::span<const NodeId> strands, const Muffler& m);

/// First violation of the continuity constraint, core pairs first, then
/// ordered pairs in composition order.
std::optional<ConstraintViolation> check_constraint(const InfectionDiagram& d);

/// Drops disks no muffler or strand refers to and renames the rest
/// (root, s1.., then d1.. in order of first use). Relations and the order
/// class are unchanged, so the result compares equal to the input.
InfectionDiagram canonicalize(const InfectionDiagram& d);

/// Observable content used by operator==. Relations are recorded between
/// "handles" (root, strand disks, each muffler's outer and holes): in full
/// when their lifetimes overlap in interior time, as a disjointness flag when
/// they only touch, and not at all when they never coexist.
struct DiagramKey {
  int output;
  std::vector<int> colors;
  std::vector<AffineMap1> times;
  Permutation order;
  std::vector<int> relations;

  friend bool operator==(const DiagramKey&, const DiagramKey&) = default;
};
DiagramKey diagram_key(const InfectionDiagram& d);

/// Operad structure map. Each inner forest is grafted into its muffler's
/// cross-section, times compose affinely, and the order is compose_tau.
/// Throws OperadError on signature mismatch or an invalid input, and
/// GraftConflict when the composite needs crossing disks.
InfectionDiagram compose(const InfectionDiagram& outer, std::span<const InfectionDiagram> inners);

/// Muffler i moves to position p(i); the order becomes p o sigma.
InfectionDiagram act_symmetric(const InfectionDiagram& d, const Permutation& p);

/// One full muffler whose holes are the standard strand disks.
InfectionDiagram identity_diagram(int color);

/// Stacking element: muffler i has time e.cube(i) and the full cross-section.
/// Touching mufflers are ordered by time.
InfectionDiagram c1_to_stacking(const CubesElement& e, int color);

/// Inverse of c1_to_stacking on stacking diagrams; nullopt for anything else.
std::optional<CubesElement> stacking_to_c1(const InfectionDiagram& d);

/// "muffler{ time=(0,1/2); outer=d1; holes=(s1,s2) }"
std::string to_string(const InfectionDiagram& d, const Muffler& m);

/// "diagram{ sig=(1,2;2); forest{ ... }; muffler{ ... }; order=perm[2,1] }"
std::string to_string(const InfectionDiagram& d);

}  // namespace opforge
