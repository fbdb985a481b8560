#include "oscwalk/walk.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace oscwalk {

WeightModel WeightModel::power_k(int k) {
  if (k < 1) throw std::invalid_argument("WeightModel: power must be >= 1");
  return {WeightKind::PowerK, k, 0.0};
}

WeightModel WeightModel::q_deformed(double q) {
  if (!(q > 0.0 && q < 1.0))
    throw std::invalid_argument("WeightModel: q must lie in (0,1)");
  return {WeightKind::QDeformed, 1, q};
}

void WalkConfig::validate() const {
  if (n < 1) throw std::invalid_argument("WalkConfig: n must be >= 1");
  if (y0 < 0 || y0 > n)
    throw std::invalid_argument("WalkConfig: y0 must lie in [0, n]");
  if ((n - y0) % 2 != 0)
    throw std::invalid_argument("WalkConfig: n and y0 must have equal parity");
  if (weights.kind == WeightKind::PowerK && weights.power < 1)
    throw std::invalid_argument("WalkConfig: power must be >= 1");
  if (weights.kind == WeightKind::QDeformed && !(weights.q > 0.0 && weights.q < 1.0))
    throw std::invalid_argument("WalkConfig: q must lie in (0,1)");
}

namespace {

void check_step_domain(const WalkConfig& cfg, int x, int y) {
  if (x < 0 || x >= cfg.n)
    throw std::domain_error("step_probability: x outside [0, n)");
  if (y < 0 || y > cfg.n - x)
    throw std::domain_error("step_probability: y outside [0, n-x]");
}

}  // namespace

StepProbabilities step_probability(const WalkConfig& cfg, int x, int y) {
  check_step_domain(cfg, x, y);
  const int span = cfg.n - x;
  double down = 0.0;
  switch (cfg.weights.kind) {
    case WeightKind::Standard:
      down = static_cast<double>(y) / span;
      break;
    case WeightKind::PowerK:
      down = std::pow(static_cast<double>(y) / span, cfg.weights.power);
      break;
    case WeightKind::QDeformed: {
      const double q = cfg.weights.q;
      down = (1.0 - std::pow(q, y)) / (1.0 - std::pow(q, span));
      break;
    }
  }
  return {down, 1.0 - down};
}

ExactStepProbabilities step_probability_exact(const WalkConfig& cfg, int x, int y) {
  check_step_domain(cfg, x, y);
  if (cfg.weights.kind == WeightKind::QDeformed)
    throw std::invalid_argument("step_probability_exact: QDeformed has no exact rational form");
  const int span = cfg.n - x;
  Rational down = rational_pow(Rational(y, span),
                               static_cast<unsigned long>(cfg.weights.power));
  return {down, Rational(1) - down};
}

void simulate_into(const WalkConfig& cfg, Rng& rng, std::vector<int>& heights) {
  cfg.validate();
  heights.resize(cfg.n + 1);
  heights[0] = cfg.y0;
  int y = cfg.y0;
  for (int x = 0; x < cfg.n; ++x) {
    const int span = cfg.n - x;
    bool down;
    if (cfg.weights.kind == WeightKind::Standard) {
      // Exact integer Bernoulli: P[down] = y/span.
      down = rng.below(static_cast<std::uint64_t>(span)) < static_cast<std::uint64_t>(y);
    } else {
      down = rng.uniform() < step_probability(cfg, x, y).down;
    }
    y += down ? -1 : 1;
    heights[x + 1] = y;
  }
}

WalkPath simulate(const WalkConfig& cfg, Rng& rng) {
  WalkPath path;
  simulate_into(cfg, rng, path.heights);
  return path;
}

WalkPath simulate(const WalkConfig& cfg, std::uint64_t seed) {
  Rng rng(seed);
  return simulate(cfg, rng);
}

std::vector<DistributionSlice> evolve_distribution(const WalkConfig& cfg) {
  cfg.validate();
  if (cfg.weights.kind != WeightKind::Standard)
    throw std::invalid_argument("evolve_distribution: exact mode requires Standard weights");

  std::vector<DistributionSlice> slices(cfg.n + 1);
  slices[0].x = 0;
  slices[0].probs[cfg.y0] = 1;
  for (int x = 0; x < cfg.n; ++x) {
    const int span = cfg.n - x;
    const auto& cur = slices[x].probs;
    auto& next = slices[x + 1].probs;
    slices[x + 1].x = x + 1;
    auto at = [&cur](int y) -> Rational {
      auto it = cur.find(y);
      return it == cur.end() ? Rational(0) : it->second;
    };
    const int lo = std::max(0, cfg.y0 - (x + 1));
    const int hi = std::min(cfg.y0 + (x + 1), cfg.n - (x + 1));
    for (int y = lo; y <= hi; ++y) {
      if ((y - cfg.y0 - (x + 1)) % 2 != 0) continue;
      Rational p(0);
      if (y >= 1) p += (Rational(1) - Rational(y - 1, span)) * at(y - 1);
      p += Rational(y + 1, span) * at(y + 1);
      if (p != 0) next[y] = p;
    }
  }
  return slices;
}

std::vector<std::map<int, double>> evolve_distribution_real(const WalkConfig& cfg) {
  cfg.validate();
  std::vector<std::map<int, double>> slices(cfg.n + 1);
  slices[0][cfg.y0] = 1.0;
  for (int x = 0; x < cfg.n; ++x) {
    for (const auto& [y, p] : slices[x]) {
      const auto sp = step_probability(cfg, x, y);
      if (sp.up > 0.0) slices[x + 1][y + 1] += p * sp.up;
      if (sp.down > 0.0) slices[x + 1][y - 1] += p * sp.down;
    }
  }
  return slices;
}

long long volume(const WalkPath& path) {
  long long v = 0;
  for (int h : path.heights) v += h;
  return v;
}

}  // namespace oscwalk
