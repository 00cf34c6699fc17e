#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "opforge/random.hpp"

namespace opforge {

enum class Law { Assoc, Symm, Ident, Dagger, Action };
enum class Family { Cubes, Overlap, Diagram };

const char* to_string(Law law);
const char* to_string(Family family);

/// Comma-separated law names ("assoc,symm,ident,dagger,action").
/// Throws OperadError on an unknown or repeated name.
std::vector<Law> parse_laws(std::string_view csv);

struct LawResult {
  bool ok = true;
  std::string detail;  // first mismatch, empty when ok
};

/// One random instance of `law` in `family`. The outer element and the
/// inputs have arity at most `max_arity` (the third level of an
/// associativity check at most 2); dimension at most 2, colors at most 3.
/// dagger and action only exist for diagrams.
LawResult check_law(Law law, Family family, Rng& rng, int max_arity = 3);

struct FuzzFailure {
  std::size_t op;
  Law law;
  Family family;
  std::string detail;
};

struct LawTally {
  Law law;
  std::size_t checked = 0;
  std::size_t failed = 0;
};

struct FuzzReport {
  std::uint64_t seed;
  std::size_t ops;
  std::vector<LawTally> tallies;
  std::vector<FuzzFailure> failures;

  bool passed() const { return failures.empty(); }
  /// Deterministic text, one line per law and per failure.
  std::string text() const;
};

/// Op i checks laws[i % laws.size()] with its own generator seeded from
/// (seed, i), cycling through the families that support the law.
FuzzReport fuzz(std::uint64_t seed, std::size_t ops, std::span<const Law> laws);

}  // namespace opforge
