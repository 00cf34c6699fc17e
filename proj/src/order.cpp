#include "opforge/order.hpp"

#include <queue>

namespace opforge {

Permutation compose_tau(const Permutation& rho, std::span<const Permutation> sigmas) {
  if (sigmas.size() != rho.degree()) {
    throw OperadError("compose_tau: " + std::to_string(sigmas.size()) +
                      " inner orders for outer degree " + std::to_string(rho.degree()));
  }
  std::vector<int> block_start(sigmas.size() + 1, 0);
  for (std::size_t a = 0; a < sigmas.size(); ++a) {
    block_start[a + 1] = block_start[a] + static_cast<int>(sigmas[a].degree());
  }
  // Walk positions in composition order: outer position p, then inner position q.
  std::vector<int> images;
  images.reserve(static_cast<std::size_t>(block_start.back()));
  for (std::size_t p = 1; p <= rho.degree(); ++p) {
    const int a = rho(static_cast<int>(p));
    const Permutation& sigma = sigmas[static_cast<std::size_t>(a - 1)];
    for (std::size_t q = 1; q <= sigma.degree(); ++q) {
      images.push_back(block_start[static_cast<std::size_t>(a - 1)] + sigma(static_cast<int>(q)));
    }
  }
  return Permutation(std::move(images));
}

std::vector<int> tau_inverse_closed_formula(const Permutation& rho,
                                            std::span<const Permutation> sigmas) {
  if (sigmas.size() != rho.degree()) {
    throw OperadError("tau_inverse_closed_formula: arity mismatch");
  }
  const auto k = [&](int a) { return static_cast<int>(sigmas[static_cast<std::size_t>(a - 1)].degree()); };
  std::vector<int> result;
  for (int a = 1; a <= static_cast<int>(sigmas.size()); ++a) {
    const Permutation sigma_inv = sigmas[static_cast<std::size_t>(a - 1)].inverse();
    int shift = 0;
    for (int i = 1; i <= rho(a) - 1; ++i) {
      shift += k(rho(i));
    }
    for (int b = 1; b <= k(a); ++b) {
      result.push_back(sigma_inv(b) + shift);
    }
  }
  return result;
}

Permutation canonical_order(const Permutation& sigma,
                            const std::function<bool(int, int)>& interacts) {
  const int n = static_cast<int>(sigma.degree());
  const Permutation position = sigma.inverse();
  std::vector<std::vector<int>> successors(static_cast<std::size_t>(n + 1));
  std::vector<int> indegree(static_cast<std::size_t>(n + 1), 0);
  for (int i = 1; i <= n; ++i) {
    for (int k = i + 1; k <= n; ++k) {
      if (!interacts(i, k)) {
        continue;
      }
      const bool i_first = position(i) < position(k);
      const int from = i_first ? i : k;
      const int to = i_first ? k : i;
      successors[static_cast<std::size_t>(from)].push_back(to);
      ++indegree[static_cast<std::size_t>(to)];
    }
  }
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int i = 1; i <= n; ++i) {
    if (indegree[static_cast<std::size_t>(i)] == 0) {
      ready.push(i);
    }
  }
  std::vector<int> sequence;
  sequence.reserve(static_cast<std::size_t>(n));
  while (!ready.empty()) {
    const int next = ready.top();
    ready.pop();
    sequence.push_back(next);
    for (int to : successors[static_cast<std::size_t>(next)]) {
      if (--indegree[static_cast<std::size_t>(to)] == 0) {
        ready.push(to);
      }
    }
  }
  return Permutation(std::move(sequence));
}

bool same_interacting_order(const Permutation& a, const Permutation& b,
                            const std::function<bool(int, int)>& interacts) {
  if (a.degree() != b.degree()) {
    return false;
  }
  const Permutation pa = a.inverse();
  const Permutation pb = b.inverse();
  const int n = static_cast<int>(a.degree());
  for (int i = 1; i <= n; ++i) {
    for (int k = i + 1; k <= n; ++k) {
      if (interacts(i, k) && ((pa(i) < pa(k)) != (pb(i) < pb(k)))) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace opforge
