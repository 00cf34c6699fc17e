#include "opforge/diskforest.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace opforge {

const char* to_string(DiskRelation r) {
  switch (r) {
    case DiskRelation::Equal:
      return "EQUAL";
    case DiskRelation::StrictlyInside:
      return "STRICTLY_INSIDE";
    case DiskRelation::StrictlyContains:
      return "STRICTLY_CONTAINS";
    case DiskRelation::Disjoint:
      return "DISJOINT";
  }
  return "?";
}

DiskForest::DiskForest(std::string root_name) {
  names_.push_back(std::move(root_name));
  parents_.push_back(std::nullopt);
}

DiskForest DiskForest::standard(int color) {
  if (color < 1) {
    throw OperadError("colors are positive integers, got " + std::to_string(color));
  }
  DiskForest forest;
  if (color >= 2) {
    std::vector<NodeId> strands;
    for (int j = 1; j <= color; ++j) {
      strands.push_back(forest.add_node(kRoot, "s" + std::to_string(j)));
    }
    forest.set_marked(color, std::move(strands));
  }
  return forest;
}

DiskForest DiskForest::from_parents(std::vector<std::string> names,
                                    std::vector<std::optional<NodeId>> parents,
                                    std::map<int, std::vector<NodeId>> marked) {
  DiskForest forest;
  forest.names_ = std::move(names);
  forest.parents_ = std::move(parents);
  forest.marked_ = std::move(marked);
  return forest;
}

void DiskForest::check(NodeId node) const {
  if (node >= names_.size()) {
    throw OperadError("unknown disk id " + std::to_string(node));
  }
}

NodeId DiskForest::add_node(NodeId parent, std::string name) {
  check(parent);
  names_.push_back(std::move(name));
  parents_.push_back(parent);
  return names_.size() - 1;
}

NodeId DiskForest::wrap(std::span<const NodeId> targets, std::string name) {
  if (targets.empty()) {
    throw OperadError("wrap needs at least one target disk");
  }
  for (NodeId t : targets) {
    check(t);
    if (t == kRoot) {
      throw OperadError("cannot wrap the root disk");
    }
  }
  for (std::size_t i = 0; i < targets.size(); ++i) {
    for (std::size_t k = i + 1; k < targets.size(); ++k) {
      if (relation(*this, targets[i], targets[k]) != DiskRelation::Disjoint) {
        throw OperadError("wrap targets must be pairwise disjoint");
      }
    }
  }
  if (targets.size() == 1) {
    const NodeId t = targets.front();
    const NodeId fresh = add_node(*parents_[t], std::move(name));
    parents_[t] = fresh;
    return fresh;
  }
  // Lowest common ancestor: deepest node on the first target's chain that is
  // an ancestor of every other target.
  NodeId lca = *parents_[targets.front()];
  while (!std::all_of(targets.begin(), targets.end(),
                      [&](NodeId t) { return relation(*this, t, lca) == DiskRelation::StrictlyInside; })) {
    lca = *parents_[lca];
  }
  std::set<NodeId> branches;
  for (NodeId t : targets) {
    NodeId branch = t;
    while (*parents_[branch] != lca) {
      branch = *parents_[branch];
    }
    branches.insert(branch);
  }
  const NodeId fresh = add_node(lca, std::move(name));
  for (NodeId branch : branches) {
    parents_[branch] = fresh;
  }
  return fresh;
}

void DiskForest::set_marked(int color, std::vector<NodeId> disks) {
  if (color == 1) {
    if (disks.size() != 1 || disks.front() != kRoot) {
      throw OperadError("the color-1 strand disk is the root itself");
    }
    return;
  }
  if (color < 1) {
    throw OperadError("colors are positive integers, got " + std::to_string(color));
  }
  if (disks.size() != static_cast<std::size_t>(color)) {
    throw OperadError("color " + std::to_string(color) + " needs " + std::to_string(color) +
                      " strand disks, got " + std::to_string(disks.size()));
  }
  for (NodeId d : disks) {
    check(d);
  }
  marked_[color] = std::move(disks);
}

std::optional<NodeId> DiskForest::parent(NodeId node) const {
  check(node);
  return parents_[node];
}

const std::string& DiskForest::name(NodeId node) const {
  check(node);
  return names_[node];
}

std::optional<NodeId> DiskForest::find(std::string_view name) const {
  for (NodeId i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) {
      return i;
    }
  }
  return std::nullopt;
}

std::vector<NodeId> DiskForest::children(NodeId node) const {
  check(node);
  std::vector<NodeId> result;
  for (NodeId i = 0; i < parents_.size(); ++i) {
    if (parents_[i] == node) {
      result.push_back(i);
    }
  }
  return result;
}

std::size_t DiskForest::depth(NodeId node) const {
  check(node);
  std::size_t d = 0;
  while (parents_[node]) {
    node = *parents_[node];
    ++d;
  }
  return d;
}

bool DiskForest::has_marked(int color) const {
  return color == 1 || marked_.contains(color);
}

std::vector<NodeId> DiskForest::marked(int color) const {
  if (color == 1) {
    return {kRoot};
  }
  auto it = marked_.find(color);
  if (it == marked_.end()) {
    throw OperadError("forest has no strand disks for color " + std::to_string(color));
  }
  return it->second;
}

std::vector<std::optional<NodeId>> DiskForest::restrict_to(const std::vector<bool>& keep) {
  std::vector<bool> kept(names_.size(), false);
  kept[kRoot] = true;
  for (NodeId i = 0; i < names_.size() && i < keep.size(); ++i) {
    kept[i] = kept[i] || keep[i];
  }
  for (const auto& [color, disks] : marked_) {
    for (NodeId d : disks) {
      kept[d] = true;
    }
  }
  std::vector<std::optional<NodeId>> map(names_.size());
  std::vector<std::string> names;
  for (NodeId i = 0; i < names_.size(); ++i) {
    if (kept[i]) {
      map[i] = names.size();
      names.push_back(names_[i]);
    }
  }
  std::vector<std::optional<NodeId>> parents(names.size());
  for (NodeId i = 0; i < names_.size(); ++i) {
    if (!kept[i] || !parents_[i]) {
      continue;
    }
    NodeId up = *parents_[i];
    while (!kept[up]) {
      up = *parents_[up];
    }
    parents[*map[i]] = *map[up];
  }
  for (auto& [color, disks] : marked_) {
    for (NodeId& d : disks) {
      d = *map[d];
    }
  }
  names_ = std::move(names);
  parents_ = std::move(parents);
  return map;
}

DiskForest DiskForest::renumbered(std::span<const NodeId> order) const {
  if (order.size() != names_.size() || order.empty() || order.front() != kRoot) {
    throw OperadError("renumbering must list every disk once, root first");
  }
  std::vector<std::optional<NodeId>> position(names_.size());
  for (NodeId i = 0; i < order.size(); ++i) {
    check(order[i]);
    if (position[order[i]]) {
      throw OperadError("renumbering lists a disk twice");
    }
    position[order[i]] = i;
  }
  DiskForest result;
  result.names_.clear();
  result.parents_.clear();
  for (NodeId old : order) {
    result.names_.push_back(names_[old]);
    result.parents_.push_back(parents_[old] ? position[*parents_[old]] : std::nullopt);
  }
  for (const auto& [color, disks] : marked_) {
    std::vector<NodeId> mapped;
    for (NodeId d : disks) {
      mapped.push_back(*position[d]);
    }
    result.marked_[color] = std::move(mapped);
  }
  return result;
}

void DiskForest::rename(NodeId node, std::string name) {
  check(node);
  names_[node] = std::move(name);
}

DiskRelation relation(const DiskForest& f, NodeId a, NodeId b) {
  if (a >= f.size() || b >= f.size()) {
    throw OperadError("relation: unknown disk id");
  }
  if (a == b) {
    return DiskRelation::Equal;
  }
  for (auto up = f.parent(a); up; up = f.parent(*up)) {
    if (*up == b) {
      return DiskRelation::StrictlyInside;
    }
  }
  for (auto up = f.parent(b); up; up = f.parent(*up)) {
    if (*up == a) {
      return DiskRelation::StrictlyContains;
    }
  }
  return DiskRelation::Disjoint;
}

bool inside_or_equal(const DiskForest& f, NodeId a, NodeId b) {
  const DiskRelation r = relation(f, a, b);
  return r == DiskRelation::Equal || r == DiskRelation::StrictlyInside;
}

std::optional<std::string> validate(const DiskForest& f) {
  if (f.size() == 0) {
    return "forest has no root";
  }
  if (f.parent(DiskForest::kRoot)) {
    return "root disk has a parent";
  }
  std::set<std::string> names;
  for (NodeId i = 0; i < f.size(); ++i) {
    if (f.name(i).empty()) {
      return "disk " + std::to_string(i) + " has an empty name";
    }
    if (!names.insert(f.name(i)).second) {
      return "duplicate disk name '" + f.name(i) + "'";
    }
    if (i == DiskForest::kRoot) {
      continue;
    }
    const auto p = f.parent(i);
    if (!p) {
      return "disk '" + f.name(i) + "' is a second root";
    }
    if (*p >= f.size()) {
      return "disk '" + f.name(i) + "' has an unknown parent";
    }
    // Walk up; a valid chain reaches the root within size() steps.
    NodeId up = i;
    std::size_t steps = 0;
    while (f.parent(up)) {
      up = *f.parent(up);
      if (++steps > f.size() || up >= f.size()) {
        return "parent map has a cycle through '" + f.name(i) + "'";
      }
    }
  }
  for (const auto& [color, disks] : f.marked_sets()) {
    if (color < 2) {
      return "strand disks recorded for invalid color " + std::to_string(color);
    }
    if (disks.size() != static_cast<std::size_t>(color)) {
      return "color " + std::to_string(color) + " has " + std::to_string(disks.size()) +
             " strand disks";
    }
    std::set<NodeId> distinct;
    for (NodeId d : disks) {
      if (d >= f.size()) {
        return "strand disk id out of range";
      }
      if (!distinct.insert(d).second) {
        return "duplicate strand disk '" + f.name(d) + "' for color " + std::to_string(color);
      }
      if (d == DiskForest::kRoot) {
        return "the root cannot be a strand disk for color " + std::to_string(color);
      }
    }
    for (std::size_t i = 0; i < disks.size(); ++i) {
      for (std::size_t k = i + 1; k < disks.size(); ++k) {
        if (relation(f, disks[i], disks[k]) != DiskRelation::Disjoint) {
          return "strand disks '" + f.name(disks[i]) + "' and '" + f.name(disks[k]) +
                 "' are nested";
        }
      }
    }
  }
  return std::nullopt;
}

namespace {

std::string fresh_name(const DiskForest& f, const std::string& base) {
  if (!f.find(base)) {
    return base;
  }
  for (int suffix = 2;; ++suffix) {
    std::string candidate = base + "_" + std::to_string(suffix);
    if (!f.find(candidate)) {
      return candidate;
    }
  }
}

}  // namespace

GraftResult graft(const DiskForest& host, NodeId outer, std::span<const NodeId> holes,
                  const DiskForest& guest, int guest_color) {
  if (guest_color < 1) {
    throw OperadError("graft: invalid color " + std::to_string(guest_color));
  }
  if (holes.size() != static_cast<std::size_t>(guest_color)) {
    throw OperadError("graft: " + std::to_string(holes.size()) + " holes for color " +
                      std::to_string(guest_color));
  }
  if (!guest.has_marked(guest_color)) {
    throw OperadError("graft: guest forest has no strand disks for color " +
                      std::to_string(guest_color));
  }
  if (guest_color == 1) {
    if (holes.front() != outer) {
      throw OperadError("graft: a color-1 hole must equal its outer disk");
    }
  } else {
    for (std::size_t i = 0; i < holes.size(); ++i) {
      if (relation(host, holes[i], outer) != DiskRelation::StrictlyInside) {
        throw OperadError("graft: hole '" + host.name(holes[i]) + "' is not strictly inside '" +
                          host.name(outer) + "'");
      }
      for (std::size_t k = i + 1; k < holes.size(); ++k) {
        if (relation(host, holes[i], holes[k]) != DiskRelation::Disjoint) {
          throw OperadError("graft: holes must be pairwise disjoint");
        }
      }
    }
  }

  GraftResult result{host, std::vector<NodeId>(guest.size())};
  std::vector<bool> mapped(guest.size(), false);
  result.node_map[DiskForest::kRoot] = outer;
  mapped[DiskForest::kRoot] = true;
  const std::vector<NodeId> strands = guest.marked(guest_color);
  for (std::size_t j = 0; j < strands.size(); ++j) {
    result.node_map[strands[j]] = holes[j];
    mapped[strands[j]] = true;
  }

  // Breadth-first so every parent is placed before its children.
  std::deque<NodeId> queue{DiskForest::kRoot};
  while (!queue.empty()) {
    const NodeId g = queue.front();
    queue.pop_front();
    for (NodeId child : guest.children(g)) {
      queue.push_back(child);
    }
    if (mapped[g]) {
      continue;
    }
    std::vector<NodeId> targets;
    for (std::size_t j = 0; j < strands.size(); ++j) {
      if (relation(guest, strands[j], g) == DiskRelation::StrictlyInside) {
        targets.push_back(holes[j]);
      }
    }
    const std::string name = fresh_name(result.forest, guest.name(g));
    if (targets.empty()) {
      result.node_map[g] = result.forest.add_node(result.node_map[*guest.parent(g)], name);
    } else {
      result.node_map[g] = result.forest.wrap(targets, name);
    }
    mapped[g] = true;
  }

  for (NodeId a = 0; a < guest.size(); ++a) {
    for (NodeId b = a + 1; b < guest.size(); ++b) {
      if (relation(guest, a, b) !=
          relation(result.forest, result.node_map[a], result.node_map[b])) {
        throw GraftConflict("graft: disks '" + guest.name(a) + "' and '" + guest.name(b) +
                            "' would have to cross in the host cross-section");
      }
    }
  }
  return result;
}

namespace {

void print_node(const DiskForest& f, NodeId node, std::string& out) {
  out += f.name(node);
  const auto kids = f.children(node);
  if (kids.empty()) {
    return;
  }
  out += "[";
  for (NodeId child : kids) {
    out += " ";
    print_node(f, child, out);
  }
  out += " ]";
}

}  // namespace

std::string to_string(const DiskForest& f) {
  std::string out = "forest{ ";
  print_node(f, DiskForest::kRoot, out);
  for (const auto& [color, disks] : f.marked_sets()) {
    out += " marked" + std::to_string(color) + "=(";
    for (std::size_t i = 0; i < disks.size(); ++i) {
      if (i > 0) {
        out += ",";
      }
      out += f.name(disks[i]);
    }
    out += ")";
  }
  return out + " }";
}

}  // namespace opforge
