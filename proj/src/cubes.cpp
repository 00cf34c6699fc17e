#include "opforge/cubes.hpp"

namespace opforge {

AffineMap1::AffineMap1(Rational scale, Rational offset)
    : scale_(std::move(scale)), offset_(std::move(offset)) {
  if (scale_ <= 0) {
    throw OperadError("affine map must be increasing, got scale " + opforge::to_string(scale_));
  }
  if (offset_ < 0 || scale_ + offset_ > 1) {
    throw OperadError("affine image " + opforge::to_string(*this) + " leaves [0,1]");
  }
}

AffineMap1 AffineMap1::from_image(const Rational& lo, const Rational& hi) {
  return AffineMap1(hi - lo, lo);
}

AffineMap1 affine_compose(const AffineMap1& a, const AffineMap1& b) {
  return AffineMap1(a.scale() * b.scale(), a.scale() * b.offset() + a.offset());
}

bool closed_intersect(const AffineMap1& a, const AffineMap1& b) {
  return a.lo() <= b.hi() && b.lo() <= a.hi();
}

bool open_intersect(const AffineMap1& a, const AffineMap1& b) {
  return a.lo() < b.hi() && b.lo() < a.hi();
}

std::string to_string(const AffineMap1& a) {
  return "(" + to_string(a.lo()) + "," + to_string(a.hi()) + ")";
}

LittleCube cube_compose(const LittleCube& outer, const LittleCube& inner) {
  if (outer.dimension() != inner.dimension()) {
    throw OperadError("cube dimension mismatch");
  }
  LittleCube result;
  result.axes.reserve(outer.dimension());
  for (std::size_t axis = 0; axis < outer.dimension(); ++axis) {
    result.axes.push_back(affine_compose(outer.axes[axis], inner.axes[axis]));
  }
  return result;
}

std::string to_string(const LittleCube& cube) {
  std::string out = "cube[";
  for (std::size_t axis = 0; axis < cube.axes.size(); ++axis) {
    if (axis > 0) {
      out += ',';
    }
    out += to_string(cube.axes[axis]);
  }
  return out + "]";
}

std::optional<CubeOverlap> find_overlap(std::span<const LittleCube> cubes) {
  for (std::size_t i = 0; i < cubes.size(); ++i) {
    for (std::size_t k = i + 1; k < cubes.size(); ++k) {
      bool interiors_meet = true;
      for (std::size_t axis = 0; axis < cubes[i].dimension(); ++axis) {
        if (!open_intersect(cubes[i].axes[axis], cubes[k].axes[axis])) {
          interiors_meet = false;
          break;
        }
      }
      if (interiors_meet) {
        return CubeOverlap{i, k};
      }
    }
  }
  return std::nullopt;
}

CubesElement::CubesElement(std::size_t dimension, std::vector<LittleCube> cubes)
    : dimension_(dimension), cubes_(std::move(cubes)) {
  if (dimension_ == 0) {
    throw OperadError("little cubes need dimension >= 1");
  }
  for (const auto& cube : cubes_) {
    if (cube.dimension() != dimension_) {
      throw OperadError("cube " + to_string(cube) + " has dimension " +
                        std::to_string(cube.dimension()) + ", expected " +
                        std::to_string(dimension_));
    }
  }
  if (auto overlap = find_overlap(cubes_)) {
    throw OperadError("cubes " + std::to_string(overlap->first + 1) + " and " +
                      std::to_string(overlap->second + 1) + " have overlapping interiors");
  }
}

CubesElement CubesElement::identity(std::size_t dimension) {
  return CubesElement(dimension, {LittleCube{std::vector<AffineMap1>(dimension)}});
}

CubesElement cubes_compose(const CubesElement& outer, std::span<const CubesElement> inners) {
  if (inners.size() != outer.arity()) {
    throw OperadError("cubes_compose: " + std::to_string(inners.size()) + " inputs for arity " +
                      std::to_string(outer.arity()));
  }
  std::vector<LittleCube> result;
  for (std::size_t i = 0; i < inners.size(); ++i) {
    if (inners[i].dimension() != outer.dimension()) {
      throw OperadError("cubes_compose: dimension mismatch at input " + std::to_string(i + 1));
    }
    for (const auto& cube : inners[i].cubes()) {
      result.push_back(cube_compose(outer.cubes()[i], cube));
    }
  }
  return CubesElement(outer.dimension(), std::move(result));
}

CubesElement act_symmetric(const CubesElement& e, const Permutation& p) {
  return CubesElement(e.dimension(), apply_to_list(p, e.cubes()));
}

std::string to_string(const CubesElement& e) {
  std::string out = "cubes{ dim=" + std::to_string(e.dimension()) + ";";
  for (const auto& cube : e.cubes()) {
    out += " " + to_string(cube) + ";";
  }
  return out + " }";
}

}  // namespace opforge
