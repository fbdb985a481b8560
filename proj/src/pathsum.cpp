#include "oscwalk/pathsum.hpp"

#include <stdexcept>

namespace oscwalk::pathsum {

namespace {

void extend(const WalkConfig& cfg, std::vector<int>& heights, const Rational& prob,
            std::vector<WeightedPath>& out) {
  const int x = static_cast<int>(heights.size()) - 1;
  if (x == cfg.n) {
    out.push_back({heights, prob});
    return;
  }
  const int y = heights.back();
  const int span = cfg.n - x;
  if (y + 1 <= span - 1) {  // an up step keeps the remaining walk feasible
    heights.push_back(y + 1);
    extend(cfg, heights, prob * Rational(span - y, span), out);
    heights.pop_back();
  }
  if (y >= 1) {
    heights.push_back(y - 1);
    extend(cfg, heights, prob * Rational(y, span), out);
    heights.pop_back();
  }
}

}  // namespace

std::vector<WeightedPath> enumerate_paths(const WalkConfig& cfg) {
  cfg.validate();
  if (cfg.weights.kind != WeightKind::Standard)
    throw std::invalid_argument("pathsum: Standard weights only");
  std::vector<WeightedPath> out;
  std::vector<int> heights{cfg.y0};
  extend(cfg, heights, Rational(1), out);
  return out;
}

Rational moment(const std::vector<WeightedPath>& paths, int x, int order) {
  Rational acc(0);
  for (const auto& path : paths)
    acc += path.probability * Rational(int_pow(Int(path.heights.at(x)), order));
  return acc;
}

Rational mixed_moment(const std::vector<WeightedPath>& paths, const std::vector<int>& points,
                      const std::vector<int>& powers) {
  if (points.size() != powers.size())
    throw std::invalid_argument("pathsum::mixed_moment: size mismatch");
  Rational acc(0);
  for (const auto& path : paths) {
    Rational term = path.probability;
    for (std::size_t i = 0; i < points.size(); ++i)
      term *= Rational(int_pow(Int(path.heights.at(points[i])), powers[i]));
    acc += term;
  }
  return acc;
}

Rational volume_mean(const std::vector<WeightedPath>& paths) {
  Rational acc(0);
  for (const auto& path : paths) {
    long v = 0;
    for (int h : path.heights) v += h;
    acc += path.probability * Rational(Int(v));
  }
  return acc;
}

Rational volume_variance(const std::vector<WeightedPath>& paths) {
  Rational mean(0), second(0);
  for (const auto& path : paths) {
    long v = 0;
    for (int h : path.heights) v += h;
    mean += path.probability * Rational(Int(v));
    second += path.probability * Rational(Int(v) * Int(v));
  }
  return second - mean * mean;
}

std::map<int, Rational> slice(const std::vector<WeightedPath>& paths, int x) {
  std::map<int, Rational> out;
  for (const auto& path : paths) out[path.heights.at(x)] += path.probability;
  return out;
}

}  // namespace oscwalk::pathsum
