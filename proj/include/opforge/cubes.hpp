#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "opforge/perm.hpp"
#include "opforge/rational.hpp"

namespace opforge {

/// Increasing affine map t -> scale * t + offset of [0,1] into itself.
class AffineMap1 {
public:
  /// The identity map.
  AffineMap1() : scale_(1), offset_(0) {}
  /// Throws OperadError unless scale > 0, offset >= 0 and scale + offset <= 1.
  AffineMap1(Rational scale, Rational offset);

  /// The map whose image is [lo, hi].
  static AffineMap1 from_image(const Rational& lo, const Rational& hi);

  const Rational& scale() const { return scale_; }
  const Rational& offset() const { return offset_; }
  Rational lo() const { return offset_; }
  Rational hi() const { return offset_ + scale_; }

  Rational operator()(const Rational& t) const { return scale_ * t + offset_; }

  friend bool operator==(const AffineMap1&, const AffineMap1&) = default;

private:
  Rational scale_;
  Rational offset_;
};

/// result(t) = a(b(t)).
AffineMap1 affine_compose(const AffineMap1& a, const AffineMap1& b);

/// Closed images share a point (touching endpoints count).
bool closed_intersect(const AffineMap1& a, const AffineMap1& b);
/// Open images share a point.
bool open_intersect(const AffineMap1& a, const AffineMap1& b);

/// "(lo,hi)" with rational endpoints.
std::string to_string(const AffineMap1& a);

/// One little j-cube: an increasing affine map per axis.
struct LittleCube {
  std::vector<AffineMap1> axes;

  std::size_t dimension() const { return axes.size(); }
  friend bool operator==(const LittleCube&, const LittleCube&) = default;
};

LittleCube cube_compose(const LittleCube& outer, const LittleCube& inner);

/// "cube[(0,1/2),(1/4,1)]"
std::string to_string(const LittleCube& cube);

struct CubeOverlap {
  std::size_t first;   // zero-based
  std::size_t second;  // zero-based, first < second
};

/// An element of C_j(n): n little cubes whose interiors are pairwise disjoint.
class CubesElement {
public:
  /// Validates dimensions and interior disjointness; throws OperadError.
  CubesElement(std::size_t dimension, std::vector<LittleCube> cubes);

  /// The operad unit in C_j(1).
  static CubesElement identity(std::size_t dimension);

  std::size_t dimension() const { return dimension_; }
  std::size_t arity() const { return cubes_.size(); }
  const std::vector<LittleCube>& cubes() const { return cubes_; }

  friend bool operator==(const CubesElement&, const CubesElement&) = default;

private:
  std::size_t dimension_;
  std::vector<LittleCube> cubes_;
};

/// First pair of cubes whose open images overlap, if any.
std::optional<CubeOverlap> find_overlap(std::span<const LittleCube> cubes);
inline std::optional<CubeOverlap> validate(const CubesElement& e) {
  return find_overlap(e.cubes());
}

/// Operad structure map C_j(n) x C_j(k_1) x ... x C_j(k_n) -> C_j(sum k_i),
/// concatenating L_i o (L^i_1, ..., L^i_{k_i}) in order of i.
CubesElement cubes_compose(const CubesElement& outer, std::span<const CubesElement> inners);

/// Symmetric group action: the cube at position i moves to position p(i).
CubesElement act_symmetric(const CubesElement& e, const Permutation& p);

/// "cubes{ dim=1; cube[(0,1/2)]; cube[(1/2,1)]; }"
std::string to_string(const CubesElement& e);

}  // namespace opforge
