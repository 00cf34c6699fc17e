#pragma once

#include <span>
#include <string>
#include <vector>

#include "opforge/cubes.hpp"
#include "opforge/perm.hpp"

namespace opforge {

/// Element of the overlapping-intervals operad: n intervals in [0,1] that may
/// overlap, plus a composition order. Only the relative order of intersecting
/// intervals is meaningful; the stored order is always the canonical
/// (lexicographically least) representative.
class OverlapElement {
public:
  OverlapElement(std::vector<AffineMap1> intervals, const Permutation& order);

  static OverlapElement identity();

  std::size_t arity() const { return intervals_.size(); }
  const std::vector<AffineMap1>& intervals() const { return intervals_; }
  const Permutation& order() const { return order_; }

  friend bool operator==(const OverlapElement&, const OverlapElement&) = default;

private:
  std::vector<AffineMap1> intervals_;
  Permutation order_;
};

/// Closed images share a point.
bool intersects(const AffineMap1& a, const AffineMap1& b);

/// Canonical order for `order` over the given intervals.
Permutation canonical_overlap_order(std::span<const AffineMap1> intervals, const Permutation& order);

/// Two (intervals, order) pairs describe the same element.
bool equivalent(std::span<const AffineMap1> intervals_a, const Permutation& order_a,
                std::span<const AffineMap1> intervals_b, const Permutation& order_b);

/// Intervals compose affinely through the outer intervals; orders compose by tau.
OverlapElement compose_overlap(const OverlapElement& outer, std::span<const OverlapElement> inners);

/// Interval i moves to position p(i); the order is relabelled accordingly.
OverlapElement act_symmetric(const OverlapElement& e, const Permutation& p);

/// "overlap{ intervals=[(0,1/2),(1/4,1)]; order=perm[2,1] }"
std::string to_string(const OverlapElement& e);

}  // namespace opforge
