#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "oscwalk/rational.hpp"
#include "oscwalk/rng.hpp"

namespace oscwalk {

enum class WeightKind { Standard, PowerK, QDeformed };

// Down-step weight family. Standard is PowerK(1): p_down = Y/(N-X).
// PowerK(k):   p_down = (Y/(N-X))^k.
// QDeformed(q): p_down = (1-q^Y)/(1-q^(N-X)), q in (0,1).
struct WeightModel {
  WeightKind kind = WeightKind::Standard;
  int power = 1;
  double q = 0.5;

  static WeightModel standard() { return {WeightKind::Standard, 1, 0.0}; }
  static WeightModel power_k(int k);
  static WeightModel q_deformed(double q);
};

struct WalkConfig {
  int n = 1;   // length N
  int y0 = 0;  // starting height, same parity as N
  WeightModel weights{};

  void validate() const;  // throws std::invalid_argument
};

// One trajectory: heights[x] for x = 0..N.
struct WalkPath {
  std::vector<int> heights;

  int length() const { return static_cast<int>(heights.size()) - 1; }
  friend bool operator==(const WalkPath&, const WalkPath&) = default;
};

struct StepProbabilities {
  double down = 0.0;
  double up = 0.0;
};

struct ExactStepProbabilities {
  Rational down;
  Rational up;
};

// Elementary step probabilities at (x, y); throws std::domain_error when
// x >= N or y outside [0, N-x].
StepProbabilities step_probability(const WalkConfig& cfg, int x, int y);
// Exact variant; Standard and PowerK only (QDeformed has no rational form).
ExactStepProbabilities step_probability_exact(const WalkConfig& cfg, int x, int y);

WalkPath simulate(const WalkConfig& cfg, std::uint64_t seed);
WalkPath simulate(const WalkConfig& cfg, Rng& rng);
// Allocation-free variant for hot loops.
void simulate_into(const WalkConfig& cfg, Rng& rng, std::vector<int>& heights);

// Exact marginal distribution of H(x), as a map height -> probability.
struct DistributionSlice {
  int x = 0;
  std::map<int, Rational> probs;
};

// Propagates the one-step recurrence for the marginal distribution exactly.
// Standard weights only; throws std::invalid_argument otherwise.
std::vector<DistributionSlice> evolve_distribution(const WalkConfig& cfg);
// binary64 variant, valid for any weight model.
std::vector<std::map<int, double>> evolve_distribution_real(const WalkConfig& cfg);

// Sum of all heights along the path.
long long volume(const WalkPath& path);

}  // namespace oscwalk
