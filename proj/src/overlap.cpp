#include "opforge/overlap.hpp"

#include "opforge/order.hpp"

namespace opforge {

namespace {

std::function<bool(int, int)> interaction(std::span<const AffineMap1> intervals) {
  return [intervals](int i, int k) {
    return intersects(intervals[static_cast<std::size_t>(i - 1)],
                      intervals[static_cast<std::size_t>(k - 1)]);
  };
}

}  // namespace

bool intersects(const AffineMap1& a, const AffineMap1& b) {
  return closed_intersect(a, b);
}

Permutation canonical_overlap_order(std::span<const AffineMap1> intervals, const Permutation& order) {
  if (order.degree() != intervals.size()) {
    throw OperadError("overlap order has degree " + std::to_string(order.degree()) + " for " +
                      std::to_string(intervals.size()) + " intervals");
  }
  return canonical_order(order, interaction(intervals));
}

OverlapElement::OverlapElement(std::vector<AffineMap1> intervals, const Permutation& order)
    : intervals_(std::move(intervals)), order_(canonical_overlap_order(intervals_, order)) {}

OverlapElement OverlapElement::identity() {
  return OverlapElement({AffineMap1()}, Permutation::identity(1));
}

bool equivalent(std::span<const AffineMap1> intervals_a, const Permutation& order_a,
                std::span<const AffineMap1> intervals_b, const Permutation& order_b) {
  if (!std::equal(intervals_a.begin(), intervals_a.end(), intervals_b.begin(), intervals_b.end())) {
    return false;
  }
  return canonical_overlap_order(intervals_a, order_a) == canonical_overlap_order(intervals_b, order_b);
}

OverlapElement compose_overlap(const OverlapElement& outer, std::span<const OverlapElement> inners) {
  if (inners.size() != outer.arity()) {
    throw OperadError("compose_overlap: " + std::to_string(inners.size()) + " inputs for arity " +
                      std::to_string(outer.arity()));
  }
  std::vector<AffineMap1> intervals;
  std::vector<Permutation> orders;
  for (std::size_t a = 0; a < inners.size(); ++a) {
    for (const auto& interval : inners[a].intervals()) {
      intervals.push_back(affine_compose(outer.intervals()[a], interval));
    }
    orders.push_back(inners[a].order());
  }
  return OverlapElement(std::move(intervals), compose_tau(outer.order(), orders));
}

OverlapElement act_symmetric(const OverlapElement& e, const Permutation& p) {
  return OverlapElement(apply_to_list(p, e.intervals()), compose(p, e.order()));
}

std::string to_string(const OverlapElement& e) {
  std::string out = "overlap{ intervals=[";
  for (std::size_t i = 0; i < e.intervals().size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += to_string(e.intervals()[i]);
  }
  return out + "]; order=" + to_string(e.order()) + " }";
}

}  // namespace opforge
