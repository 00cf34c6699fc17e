#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "opforge/perm.hpp"

namespace opforge {

/// Order permutation of a composite: given the outer order rho (degree n) and
/// the inner orders sigma_a (degree k_a), returns tau of degree sum k_a.
///
/// Composite inputs are flattened as (a,b) -> b + k_1 + ... + k_{a-1}.
/// tau^-1 sends the lexicographic list (1,1), (1,2), ..., (n,k_n) to the pairs
/// (rho^-1(a), sigma_a^-1(b)), read as positions in the lexicographic order of
/// (outer position, inner position).
Permutation compose_tau(const Permutation& rho, std::span<const Permutation> sigmas);

/// The closed formula tau^-1(b + sum_{i<a} k_i) = sigma_a^-1(b) + sum_{i<rho(a)} k_{rho(i)},
/// evaluated literally. Returns the raw tau^-1 image list, which need not be a
/// permutation; callers compare it against compose_tau.
std::vector<int> tau_inverse_closed_formula(const Permutation& rho,
                                            std::span<const Permutation> sigmas);

/// Lexicographically least order permutation (composition sequence) that puts
/// every interacting pair in the same relative order as `sigma`. Greedy
/// topological sort with minimum-index tie-breaking.
///
/// `interacts(i, k)` receives one-based indices and must be symmetric.
Permutation canonical_order(const Permutation& sigma,
                            const std::function<bool(int, int)>& interacts);

/// True when `a` and `b` order every interacting pair identically.
bool same_interacting_order(const Permutation& a, const Permutation& b,
                            const std::function<bool(int, int)>& interacts);

}  // namespace opforge
