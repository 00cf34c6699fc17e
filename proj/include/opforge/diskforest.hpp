#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "opforge/rational.hpp"

namespace opforge {

using NodeId = std::size_t;

/// How two disks of a cross-section sit relative to each other.
enum class DiskRelation { Equal, StrictlyInside, StrictlyContains, Disjoint };

const char* to_string(DiskRelation r);

/// Cross-section geometry up to isotopy: a rooted forest of closed disks in
/// the unit disk. A child lies strictly inside its parent; siblings are
/// disjoint. Disks carry no coordinates.
///
/// For each color c the forest may record the standard strand disks of the
/// trivial fat c-string link. For c = 1 the trivial link is the identity, so
/// its only strand disk is the root itself. Strand disks start out as root
/// children; muffler disks drawn around them later make them deeper nodes, so
/// validate() only asks that they be pairwise disjoint.
class DiskForest {
public:
  static constexpr NodeId kRoot = 0;

  explicit DiskForest(std::string root_name = "root");

  /// Root plus the standard strand disks for `color` (named s1..sc).
  static DiskForest standard(int color);

  /// Unchecked construction; run validate() on the result.
  static DiskForest from_parents(std::vector<std::string> names,
                                 std::vector<std::optional<NodeId>> parents,
                                 std::map<int, std::vector<NodeId>> marked);

  NodeId add_node(NodeId parent, std::string name);
  /// Inserts a fresh disk that strictly contains every target and nothing it
  /// does not need to: between a single target and its parent, or as a child
  /// of the targets' lowest common ancestor adopting the branches that lead
  /// to them.
  NodeId wrap(std::span<const NodeId> targets, std::string name);
  void set_marked(int color, std::vector<NodeId> disks);

  std::size_t size() const { return names_.size(); }
  std::optional<NodeId> parent(NodeId node) const;
  const std::string& name(NodeId node) const;
  std::optional<NodeId> find(std::string_view name) const;
  std::vector<NodeId> children(NodeId node) const;
  std::size_t depth(NodeId node) const;

  bool has_marked(int color) const;
  /// Throws OperadError when no strand disks are recorded for `color`.
  std::vector<NodeId> marked(int color) const;
  const std::map<int, std::vector<NodeId>>& marked_sets() const { return marked_; }

  /// Keeps `keep` (plus the root and all strand disks), splicing every other
  /// node out so its children hang from its parent. Relations among kept
  /// nodes are unchanged. Returns the old-to-new id map (nullopt for removed).
  std::vector<std::optional<NodeId>> restrict_to(const std::vector<bool>& keep);

  /// Renumbers nodes: new id i holds old node order[i]. `order` must start with
  /// the root and list every node once.
  DiskForest renumbered(std::span<const NodeId> order) const;

  void rename(NodeId node, std::string name);

private:
  void check(NodeId node) const;

  std::vector<std::string> names_;
  std::vector<std::optional<NodeId>> parents_;
  std::map<int, std::vector<NodeId>> marked_;
};

/// Equal iff a == b; StrictlyInside iff a is a proper descendant of b.
DiskRelation relation(const DiskForest& f, NodeId a, NodeId b);

/// True for Equal or StrictlyInside.
bool inside_or_equal(const DiskForest& f, NodeId a, NodeId b);

/// First structural problem, if any.
std::optional<std::string> validate(const DiskForest& f);

struct GraftResult {
  DiskForest forest;
  /// guest node -> node of `forest`
  std::vector<NodeId> node_map;
};

/// Thrown when a graft would need two disks to cross, which the nesting
/// forest cannot represent.
class GraftConflict : public OperadError {
public:
  using OperadError::OperadError;
};

/// Substitutes `guest` into the muffler cross-section (outer, holes) of
/// `host`. The guest root becomes `outer`, guest strand disk j becomes
/// holes[j], and every other guest disk becomes a fresh disk placed so that
/// all relations among guest disks are preserved.
GraftResult graft(const DiskForest& host, NodeId outer, std::span<const NodeId> holes,
                  const DiskForest& guest, int guest_color);

/// "forest{ root[ s1 s2 d3[ d4 ] ] marked2=(s1,s2) }"
std::string to_string(const DiskForest& f);

}  // namespace opforge
