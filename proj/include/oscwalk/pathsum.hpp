#pragma once

#include <vector>

#include "oscwalk/walk.hpp"

namespace oscwalk {
// Exhaustive enumeration of all positive-probability trajectories, with exact
// weights multiplied step by step. Deliberately independent of the moment
// recursion and the distribution propagator, so it can serve as their oracle.
namespace pathsum {

struct WeightedPath {
  std::vector<int> heights;
  Rational probability;
};

// All trajectories of the Standard-weight walk; probabilities sum to 1.
// Intended for small n (the path count grows like 2^n).
std::vector<WeightedPath> enumerate_paths(const WalkConfig& cfg);

Rational moment(const std::vector<WeightedPath>& paths, int x, int order);
Rational mixed_moment(const std::vector<WeightedPath>& paths, const std::vector<int>& points,
                      const std::vector<int>& powers);
Rational volume_mean(const std::vector<WeightedPath>& paths);
Rational volume_variance(const std::vector<WeightedPath>& paths);
std::map<int, Rational> slice(const std::vector<WeightedPath>& paths, int x);

}  // namespace pathsum
}  // namespace oscwalk
