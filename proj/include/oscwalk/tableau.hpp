#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oscwalk/partition.hpp"
#include "oscwalk/rng.hpp"
#include "oscwalk/walk.hpp"

namespace oscwalk {

// Sequence of partitions from the empty shape to `shape`, consecutive shapes
// differing by one corner box. steps.size() == length + 1.
struct OscillatingTableau {
  std::vector<Partition> steps;

  int length() const { return static_cast<int>(steps.size()) - 1; }
  const Partition& shape() const { return steps.back(); }

  friend bool operator==(const OscillatingTableau&, const OscillatingTableau&) = default;
  friend auto operator<=>(const OscillatingTableau&, const OscillatingTableau&) = default;
};

struct ValidationResult {
  bool ok = false;
  std::string reason;  // empty when ok

  explicit operator bool() const { return ok; }
};

ValidationResult validate(const OscillatingTableau& t);

// Number of oscillating tableaux of the given shape and length:
// C(N,k) (N-k-1)!! f^shape when N-k is even and nonnegative, else 0.
Int count_formula(const Partition& shape, int n);

inline constexpr int kDefaultEnumerationBound = 10;

// Every tableau of the given shape and length, by depth-first corner
// expansion. Throws std::invalid_argument when n exceeds `bound`.
std::vector<OscillatingTableau> enumerate_all(const Partition& shape, int n,
                                              int bound = kDefaultEnumerationBound);

// Uniform sample over all tableaux of the given shape and length, by the
// backward corner walk: starting from the final shape with X processed steps,
// remove a box with probability Y/(N-X) (corner chosen with weight f^mu),
// otherwise add one (corner chosen with weight f^mu / (Y+1)).
// Throws std::domain_error when the set is empty.
OscillatingTableau sample_uniform(const Partition& shape, int n, Rng& rng);
OscillatingTableau sample_uniform(const Partition& shape, int n, std::uint64_t seed);

// Heights of the walk associated with a tableau: heights[x] = |steps[N-x]|,
// so heights[0] = |shape| and heights[N] = 0.
WalkPath area_sequence(const OscillatingTableau& t);

}  // namespace oscwalk
