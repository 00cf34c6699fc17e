#include "opforge/perm.hpp"

#include <algorithm>
#include <numeric>

namespace opforge {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int image : images_) {
    if (image < 1 || static_cast<std::size_t>(image) > images_.size() ||
        seen[static_cast<std::size_t>(image - 1)]) {
      throw OperadError("not a permutation: " + to_string(*this));
    }
    seen[static_cast<std::size_t>(image - 1)] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

int Permutation::operator()(int i) const {
  if (i < 1 || static_cast<std::size_t>(i) > images_.size()) {
    throw OperadError("permutation argument " + std::to_string(i) + " out of range 1.." +
                      std::to_string(images_.size()));
  }
  return images_[static_cast<std::size_t>(i - 1)];
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
  }
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i) + 1) {
      return false;
    }
  }
  return true;
}

std::size_t BlockStructure::total() const {
  return std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
}

std::size_t BlockStructure::offset(std::size_t block) const {
  return std::accumulate(sizes.begin(), sizes.begin() + static_cast<std::ptrdiff_t>(block),
                         std::size_t{0});
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw OperadError("compose: degree mismatch " + std::to_string(p.degree()) + " vs " +
                      std::to_string(q.degree()));
  }
  std::vector<int> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i) {
    images[i] = p(q(static_cast<int>(i) + 1));
  }
  return Permutation(std::move(images));
}

Permutation block_permutation(const Permutation& sigma, const BlockStructure& blocks) {
  const std::size_t n = sigma.degree();
  if (blocks.sizes.size() != n) {
    throw OperadError("block_permutation: " + std::to_string(blocks.sizes.size()) +
                      " blocks for a permutation of degree " + std::to_string(n));
  }
  // Slot s of the result holds block sigma^-1(s).
  const Permutation inv = sigma.inverse();
  std::vector<std::size_t> new_offset(n);
  std::size_t running = 0;
  for (std::size_t slot = 1; slot <= n; ++slot) {
    const auto block = static_cast<std::size_t>(inv(static_cast<int>(slot)) - 1);
    new_offset[block] = running;
    running += blocks.sizes[block];
  }
  std::vector<int> images(blocks.total());
  for (std::size_t block = 0; block < n; ++block) {
    const std::size_t old_offset = blocks.offset(block);
    for (std::size_t j = 0; j < blocks.sizes[block]; ++j) {
      images[old_offset + j] = static_cast<int>(new_offset[block] + j) + 1;
    }
  }
  return Permutation(std::move(images));
}

Permutation direct_sum(std::span<const Permutation> parts) {
  std::vector<int> images;
  int shift = 0;
  for (const auto& part : parts) {
    for (int image : part.images()) {
      images.push_back(image + shift);
    }
    shift += static_cast<int>(part.degree());
  }
  return Permutation(std::move(images));
}

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> result;
  do {
    result.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return result;
}

std::string to_string(const Permutation& p) {
  std::string out = "perm[";
  for (std::size_t i = 0; i < p.images().size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += std::to_string(p.images()[i]);
  }
  return out + "]";
}

}  // namespace opforge
