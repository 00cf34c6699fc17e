#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "opforge/rational.hpp"

namespace opforge {

/// An element of the symmetric group on {1..n}, stored as its image list.
///
/// Conventions used throughout the library:
///  * compose(p, q)(i) = p(q(i)).
///  * apply_to_list(p, xs) moves the entry at position i to position p(i).
///  * An operadic order sigma lists the composition order: sigma(pos) is the
///    index acting at position pos, so sigma^{-1}(i) is the position of i.
class Permutation {
public:
  Permutation() = default;
  /// Throws OperadError unless `images` is a bijection of {1..n}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(std::size_t n);

  std::size_t degree() const { return images_.size(); }
  /// One-indexed evaluation.
  int operator()(int i) const;
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> images_;
};

/// Sizes (k_1, ..., k_n) of consecutive blocks partitioning 1..total.
struct BlockStructure {
  std::vector<std::size_t> sizes;

  std::size_t total() const;
  /// Zero-based offset of block `block` (zero-based) in the concatenation.
  std::size_t offset(std::size_t block) const;
};

Permutation compose(const Permutation& p, const Permutation& q);

/// The block permutation induced by sigma: rearranges the concatenation
/// B_1 ... B_n into B_{sigma^-1(1)} ... B_{sigma^-1(n)}, keeping the order
/// inside each block.
Permutation block_permutation(const Permutation& sigma, const BlockStructure& blocks);

/// Block-diagonal sum tau_1 + ... + tau_n acting on the concatenated blocks.
Permutation direct_sum(std::span<const Permutation> parts);

/// result[p(i)] = xs[i].
template <typename T>
std::vector<T> apply_to_list(const Permutation& p, std::span<const T> xs) {
  if (xs.size() != p.degree()) {
    throw OperadError("apply_to_list: list length " + std::to_string(xs.size()) +
                      " does not match degree " + std::to_string(p.degree()));
  }
  std::vector<T> result(xs.begin(), xs.end());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    result[static_cast<std::size_t>(p(static_cast<int>(i) + 1) - 1)] = xs[i];
  }
  return result;
}

template <typename T>
std::vector<T> apply_to_list(const Permutation& p, const std::vector<T>& xs) {
  return apply_to_list(p, std::span<const T>(xs));
}

/// All permutations of degree n in lexicographic order of their image lists.
std::vector<Permutation> all_permutations(std::size_t n);

/// "perm[2,3,1]"
std::string to_string(const Permutation& p);

}  // namespace opforge
