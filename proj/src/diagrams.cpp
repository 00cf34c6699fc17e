#include "opforge/diagrams.hpp"

#include <algorithm>
#include <numeric>

#include "opforge/order.hpp"

namespace opforge {

namespace {

std::function<bool(int, int)> interaction(const InfectionDiagram& d) {
  return [&d](int i, int k) {
    return images_intersect(d, static_cast<std::size_t>(i), static_cast<std::size_t>(k));
  };
}

void check_muffler(const DiskForest& f, const Muffler& m, std::size_t index) {
  const std::string where = "muffler " + std::to_string(index);
  if (m.holes.empty()) {
    throw OperadError(where + " has no holes");
  }
  if (m.outer >= f.size()) {
    throw OperadError(where + " refers to an unknown outer disk");
  }
  for (NodeId h : m.holes) {
    if (h >= f.size()) {
      throw OperadError(where + " refers to an unknown hole disk");
    }
  }
  if (m.color() == 1) {
    if (m.holes.front() != m.outer) {
      throw OperadError(where + ": a one-holed muffler's hole is its outer disk");
    }
    return;
  }
  for (std::size_t a = 0; a < m.holes.size(); ++a) {
    if (relation(f, m.holes[a], m.outer) != DiskRelation::StrictlyInside) {
      throw OperadError(where + ": hole '" + f.name(m.holes[a]) + "' is not strictly inside '" +
                        f.name(m.outer) + "'");
    }
    for (std::size_t b = a + 1; b < m.holes.size(); ++b) {
      if (relation(f, m.holes[a], m.holes[b]) != DiskRelation::Disjoint) {
        throw OperadError(where + ": holes '" + f.name(m.holes[a]) + "' and '" +
                          f.name(m.holes[b]) + "' are not disjoint");
      }
    }
  }
}

}  // namespace

InfectionDiagram::InfectionDiagram(int output_color, DiskForest forest,
                                   std::vector<Muffler> mufflers, const Permutation& order)
    : output_(output_color), forest_(std::move(forest)), mufflers_(std::move(mufflers)) {
  if (output_ < 1) {
    throw OperadError("output color must be positive, got " + std::to_string(output_));
  }
  if (auto problem = validate(forest_)) {
    throw OperadError("invalid forest: " + *problem);
  }
  if (!forest_.has_marked(output_)) {
    throw OperadError("forest has no strand disks for output color " + std::to_string(output_));
  }
  for (const auto& [color, disks] : forest_.marked_sets()) {
    if (color != output_) {
      throw OperadError("forest marks strands for color " + std::to_string(color) +
                        " but the output color is " + std::to_string(output_));
    }
  }
  for (std::size_t k = 0; k < mufflers_.size(); ++k) {
    check_muffler(forest_, mufflers_[k], k + 1);
  }
  if (order.degree() != mufflers_.size()) {
    throw OperadError("order has degree " + std::to_string(order.degree()) + " for " +
                      std::to_string(mufflers_.size()) + " mufflers");
  }
  order_ = canonical_order(order, interaction(*this));
}

std::vector<int> InfectionDiagram::input_colors() const {
  std::vector<int> colors;
  for (const auto& m : mufflers_) {
    colors.push_back(m.color());
  }
  return colors;
}

const Muffler& InfectionDiagram::muffler(std::size_t index) const {
  if (index < 1 || index > mufflers_.size()) {
    throw OperadError("muffler index " + std::to_string(index) + " out of range 1.." +
                      std::to_string(mufflers_.size()));
  }
  return mufflers_[index - 1];
}

bool operator==(const InfectionDiagram& a, const InfectionDiagram& b) {
  return diagram_key(a) == diagram_key(b);
}

bool images_intersect(const InfectionDiagram& d, std::size_t i, std::size_t k) {
  const Muffler& a = d.muffler(i);
  const Muffler& b = d.muffler(k);
  return closed_intersect(a.time, b.time) &&
         relation(d.forest(), a.outer, b.outer) != DiskRelation::Disjoint;
}

bool pair_allowed(const DiskForest& f, const Muffler& earlier, const Muffler& later) {
  if (relation(f, earlier.outer, later.outer) == DiskRelation::Disjoint) {
    return true;
  }
  for (NodeId h : later.holes) {
    if (inside_or_equal(f, earlier.outer, h)) {
      return true;
    }
  }
  return !open_intersect(earlier.time, later.time);
}

bool core_allowed(const DiskForest& f, std::span<const NodeId> strands, const Muffler& m) {
  for (NodeId s : strands) {
    if (relation(f, s, m.outer) == DiskRelation::Disjoint) {
      continue;
    }
    if (std::none_of(m.holes.begin(), m.holes.end(),
                     [&](NodeId h) { return inside_or_equal(f, s, h); })) {
      return false;
    }
  }
  return true;
}

std::optional<ConstraintViolation> check_constraint(const InfectionDiagram& d) {
  const auto strands = d.strands();
  for (std::size_t k = 1; k <= d.arity(); ++k) {
    if (!core_allowed(d.forest(), strands, d.muffler(k))) {
      return ConstraintViolation{0, k,
                                 "muffler " + std::to_string(k) +
                                     " cuts a strand of the core outside its holes"};
    }
  }
  const Permutation& order = d.order();
  for (std::size_t p = 1; p <= d.arity(); ++p) {
    for (std::size_t q = p + 1; q <= d.arity(); ++q) {
      const auto i = static_cast<std::size_t>(order(static_cast<int>(p)));
      const auto k = static_cast<std::size_t>(order(static_cast<int>(q)));
      if (!pair_allowed(d.forest(), d.muffler(i), d.muffler(k))) {
        return ConstraintViolation{i, k,
                                   "muffler " + std::to_string(i) + " acts before muffler " +
                                       std::to_string(k) +
                                       " but meets its solid part during its lifetime"};
      }
    }
  }
  return std::nullopt;
}

InfectionDiagram canonicalize(const InfectionDiagram& d) {
  DiskForest forest = d.forest();
  std::vector<bool> keep(forest.size(), false);
  for (const auto& m : d.mufflers()) {
    keep[m.outer] = true;
    for (NodeId h : m.holes) {
      keep[h] = true;
    }
  }
  const auto map = forest.restrict_to(keep);
  std::vector<Muffler> mufflers = d.mufflers();
  for (auto& m : mufflers) {
    m.outer = *map[m.outer];
    for (NodeId& h : m.holes) {
      h = *map[h];
    }
  }

  // New numbering: root, strands, then disks in order of first use.
  std::vector<NodeId> order{DiskForest::kRoot};
  std::vector<bool> placed(forest.size(), false);
  placed[DiskForest::kRoot] = true;
  const auto place = [&](NodeId v) {
    if (!placed[v]) {
      placed[v] = true;
      order.push_back(v);
    }
  };
  const auto strands = forest.marked(d.output_color());
  for (NodeId s : strands) {
    place(s);
  }
  for (const auto& m : mufflers) {
    place(m.outer);
    for (NodeId h : m.holes) {
      place(h);
    }
  }
  std::vector<NodeId> position(forest.size());
  for (NodeId i = 0; i < order.size(); ++i) {
    position[order[i]] = i;
  }
  DiskForest renumbered = forest.renumbered(order);
  renumbered.rename(DiskForest::kRoot, "root");
  std::size_t fresh = 0;
  for (NodeId i = 1; i < renumbered.size(); ++i) {
    renumbered.rename(i, i <= strands.size() && d.output_color() > 1
                             ? "s" + std::to_string(i)
                             : "d" + std::to_string(++fresh));
  }
  for (auto& m : mufflers) {
    m.outer = position[m.outer];
    for (NodeId& h : m.holes) {
      h = position[h];
    }
  }
  return InfectionDiagram(d.output_color(), std::move(renumbered), std::move(mufflers), d.order());
}

DiagramKey diagram_key(const InfectionDiagram& d) {
  struct Handle {
    NodeId node;
    std::optional<AffineMap1> life;  // nullopt: alive for all time
  };
  std::vector<Handle> handles{{DiskForest::kRoot, std::nullopt}};
  for (NodeId s : d.strands()) {
    handles.push_back({s, std::nullopt});
  }
  DiagramKey key{d.output_color(), d.input_colors(), {}, d.order(), {}};
  for (const auto& m : d.mufflers()) {
    key.times.push_back(m.time);
    handles.push_back({m.outer, m.time});
    for (NodeId h : m.holes) {
      handles.push_back({h, m.time});
    }
  }
  constexpr int kTouchingMeet = 4;
  constexpr int kTouchingApart = 5;
  constexpr int kNeverCoexist = 6;
  for (std::size_t a = 0; a < handles.size(); ++a) {
    for (std::size_t b = a + 1; b < handles.size(); ++b) {
      const auto& x = handles[a];
      const auto& y = handles[b];
      const DiskRelation r = relation(d.forest(), x.node, y.node);
      if (!x.life || !y.life || open_intersect(*x.life, *y.life)) {
        key.relations.push_back(static_cast<int>(r));
      } else if (closed_intersect(*x.life, *y.life)) {
        key.relations.push_back(r == DiskRelation::Disjoint ? kTouchingApart : kTouchingMeet);
      } else {
        key.relations.push_back(kNeverCoexist);
      }
    }
  }
  return key;
}

InfectionDiagram compose(const InfectionDiagram& outer, std::span<const InfectionDiagram> inners) {
  if (inners.size() != outer.arity()) {
    throw OperadError("compose: " + std::to_string(inners.size()) + " inputs for arity " +
                      std::to_string(outer.arity()));
  }
  if (auto bad = check_constraint(outer)) {
    throw OperadError("compose: outer diagram violates the continuity constraint: " + bad->reason);
  }
  DiskForest forest = outer.forest();
  std::vector<Muffler> mufflers;
  std::vector<Permutation> sigmas;
  for (std::size_t a = 0; a < inners.size(); ++a) {
    const Muffler& site = outer.mufflers()[a];
    const InfectionDiagram& inner = inners[a];
    if (inner.output_color() != site.color()) {
      throw OperadError("compose: input " + std::to_string(a + 1) + " has color " +
                        std::to_string(site.color()) + " but the inner diagram outputs color " +
                        std::to_string(inner.output_color()));
    }
    if (auto bad = check_constraint(inner)) {
      throw OperadError("compose: inner diagram " + std::to_string(a + 1) +
                        " violates the continuity constraint: " + bad->reason);
    }
    // Host ids survive a graft, so earlier sites stay valid.
    GraftResult g = graft(forest, site.outer, site.holes, inner.forest(), site.color());
    for (const auto& m : inner.mufflers()) {
      Muffler composite{affine_compose(site.time, m.time), g.node_map[m.outer], {}};
      for (NodeId h : m.holes) {
        composite.holes.push_back(g.node_map[h]);
      }
      mufflers.push_back(std::move(composite));
    }
    sigmas.push_back(inner.order());
    forest = std::move(g.forest);
  }
  InfectionDiagram result = canonicalize(InfectionDiagram(
      outer.output_color(), std::move(forest), std::move(mufflers), compose_tau(outer.order(), sigmas)));
  if (auto bad = check_constraint(result)) {
    throw OperadError("compose: composite violates the continuity constraint: " + bad->reason);
  }
  return result;
}

InfectionDiagram act_symmetric(const InfectionDiagram& d, const Permutation& p) {
  if (p.degree() != d.arity()) {
    throw OperadError("act_symmetric: permutation of degree " + std::to_string(p.degree()) +
                      " on " + std::to_string(d.arity()) + " mufflers");
  }
  return InfectionDiagram(d.output_color(), d.forest(), apply_to_list(p, d.mufflers()),
                          compose(p, d.order()));
}

InfectionDiagram identity_diagram(int color) {
  DiskForest forest = DiskForest::standard(color);
  std::vector<Muffler> mufflers{Muffler{AffineMap1(), DiskForest::kRoot, forest.marked(color)}};
  return InfectionDiagram(color, std::move(forest), std::move(mufflers), Permutation::identity(1));
}

InfectionDiagram c1_to_stacking(const CubesElement& e, int color) {
  if (e.dimension() != 1) {
    throw OperadError("c1_to_stacking needs little intervals, got dimension " +
                      std::to_string(e.dimension()));
  }
  DiskForest forest = DiskForest::standard(color);
  std::vector<Muffler> mufflers;
  for (const auto& cube : e.cubes()) {
    mufflers.push_back(Muffler{cube.axes.front(), DiskForest::kRoot, forest.marked(color)});
  }
  std::vector<int> by_time(mufflers.size());
  std::iota(by_time.begin(), by_time.end(), 1);
  std::sort(by_time.begin(), by_time.end(), [&](int a, int b) {
    return mufflers[static_cast<std::size_t>(a - 1)].time.lo() <
           mufflers[static_cast<std::size_t>(b - 1)].time.lo();
  });
  return InfectionDiagram(color, std::move(forest), std::move(mufflers), Permutation(by_time));
}

std::optional<CubesElement> stacking_to_c1(const InfectionDiagram& d) {
  const auto strands = d.strands();
  std::vector<LittleCube> cubes;
  for (const auto& m : d.mufflers()) {
    if (m.outer != DiskForest::kRoot || m.holes != strands) {
      return std::nullopt;
    }
    cubes.push_back(LittleCube{{m.time}});
  }
  if (find_overlap(cubes)) {
    return std::nullopt;
  }
  CubesElement e(1, std::move(cubes));
  if (!(c1_to_stacking(e, d.output_color()) == d)) {
    return std::nullopt;
  }
  return e;
}

std::string to_string(const InfectionDiagram& d, const Muffler& m) {
  const DiskForest& f = d.forest();
  std::string out = "muffler{ time=" + to_string(m.time) + "; outer=" + f.name(m.outer) + "; holes=(";
  for (std::size_t j = 0; j < m.holes.size(); ++j) {
    if (j > 0) {
      out += ",";
    }
    out += f.name(m.holes[j]);
  }
  return out + ") }";
}

std::string to_string(const InfectionDiagram& d) {
  std::string out = "diagram{ sig=(";
  const auto colors = d.input_colors();
  for (std::size_t k = 0; k < colors.size(); ++k) {
    if (k > 0) {
      out += ",";
    }
    out += std::to_string(colors[k]);
  }
  out += ";" + std::to_string(d.output_color()) + "); " + to_string(d.forest()) + "; ";
  for (const auto& m : d.mufflers()) {
    out += to_string(d, m) + "; ";
  }
  return out + "order=" + to_string(d.order()) + " }";
}

}  // namespace opforge
