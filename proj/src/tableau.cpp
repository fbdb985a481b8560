#include "oscwalk/tableau.hpp"

#include <cstdlib>
#include <stdexcept>

namespace oscwalk {

namespace {

// True iff `big` is `small` plus exactly one box.
bool one_box_bigger(const Partition& small, const Partition& big) {
  if (big.size() != small.size() + 1) return false;
  if (big.rows() < small.rows() || big.rows() > small.rows() + 1) return false;
  int diffs = 0;
  for (int r = 0; r < big.rows(); ++r) {
    const int d = big.part(r) - small.part(r);
    if (d < 0 || d > 1) return false;
    diffs += d;
  }
  return diffs == 1;
}

bool differ_by_one_box(const Partition& a, const Partition& b) {
  if (b.size() == a.size() + 1) return one_box_bigger(a, b);
  if (a.size() == b.size() + 1) return one_box_bigger(b, a);
  return false;
}

}  // namespace

ValidationResult validate(const OscillatingTableau& t) {
  if (t.steps.empty()) return {false, "no steps"};
  if (!t.steps.front().empty()) return {false, "first shape is not empty"};
  for (std::size_t i = 0; i + 1 < t.steps.size(); ++i) {
    if (!differ_by_one_box(t.steps[i], t.steps[i + 1]))
      return {false, "steps " + std::to_string(i) + " and " + std::to_string(i + 1) +
                         " do not differ by one corner box"};
  }
  return {true, ""};
}

Int count_formula(const Partition& shape, int n) {
  if (n < 0) throw std::invalid_argument("count_formula: n must be >= 0");
  const int k = shape.size();
  if (n < k || (n - k) % 2 != 0) return 0;
  return binomial(n, k) * double_factorial(n - k - 1) * syt_count(shape);
}

namespace {

void enumerate_dfs(std::vector<Partition>& prefix, const Partition& target, int n,
                   std::vector<OscillatingTableau>& out) {
  const Partition& cur = prefix.back();
  const int remaining = n - static_cast<int>(prefix.size()) + 1;
  const int gap = std::abs(cur.size() - target.size());
  if (gap > remaining || (remaining - gap) % 2 != 0) return;
  if (remaining == 0) {
    if (cur == target) out.push_back({prefix});
    return;
  }
  for (const Corner& c : cur.addable_corners()) {
    prefix.push_back(cur.apply(c));
    enumerate_dfs(prefix, target, n, out);
    prefix.pop_back();
  }
  for (const Corner& c : cur.removable_corners()) {
    prefix.push_back(cur.apply(c));
    enumerate_dfs(prefix, target, n, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<OscillatingTableau> enumerate_all(const Partition& shape, int n, int bound) {
  if (n < 0) throw std::invalid_argument("enumerate_all: n must be >= 0");
  if (n > bound)
    throw std::invalid_argument("enumerate_all: n=" + std::to_string(n) +
                                " exceeds brute-force bound " + std::to_string(bound));
  std::vector<OscillatingTableau> out;
  std::vector<Partition> prefix{Partition{}};
  enumerate_dfs(prefix, shape, n, out);
  return out;
}

OscillatingTableau sample_uniform(const Partition& shape, int n, Rng& rng) {
  if (count_formula(shape, n) == 0)
    throw std::domain_error("sample_uniform: no tableaux of shape " + shape.to_string() +
                            " and length " + std::to_string(n));

  std::vector<Partition> steps(n + 1);
  steps[n] = shape;
  Partition cur = shape;
  for (int x = 0; x < n; ++x) {
    const int span = n - x;
    const int y = cur.size();
    // First draw: remove with probability y/span (exact integer Bernoulli).
    const bool remove =
        rng.below(static_cast<std::uint64_t>(span)) < static_cast<std::uint64_t>(y);
    const auto corners = remove ? cur.removable_corners() : cur.addable_corners();
    // Second draw: pick the corner by cumulative f^mu weight. The weights sum
    // to f^cur (removals) or (y+1) f^cur (additions) exactly.
    const Int total = remove ? syt_count(cur) : Int((y + 1) * syt_count(cur));
    const Int draw = rng.below(total);
    Int cumulative = 0;
    Partition next;
    for (const Corner& c : corners) {
      next = cur.apply(c);
      cumulative += syt_count(next);
      if (draw < cumulative) break;
    }
    cur = next;
    steps[n - x - 1] = cur;
  }
  return {std::move(steps)};
}

OscillatingTableau sample_uniform(const Partition& shape, int n, std::uint64_t seed) {
  Rng rng(seed);
  return sample_uniform(shape, n, rng);
}

WalkPath area_sequence(const OscillatingTableau& t) {
  const auto check = validate(t);
  if (!check) throw std::invalid_argument("area_sequence: invalid tableau: " + check.reason);
  const int n = t.length();
  WalkPath path;
  path.heights.resize(n + 1);
  for (int x = 0; x <= n; ++x) path.heights[x] = t.steps[n - x].size();
  return path;
}

}  // namespace oscwalk
