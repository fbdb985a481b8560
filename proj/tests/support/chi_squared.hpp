#pragma once

#include <cmath>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

namespace testsupport {

// 99th percentile of the chi-squared distribution (1% significance level),
// indexed by degrees of freedom. Frozen reference values.
inline double chi2_critical_99(int dof) {
  static const double table[] = {
      6.634897,  9.210340,  11.344867, 13.276704, 15.086272, 16.811894, 18.475307, 20.090235,
      21.665994, 23.209251, 24.724970, 26.216967, 27.688250, 29.141238, 30.577914, 31.999927,
      33.408664, 34.805306, 36.190869, 37.566235, 38.932173, 40.289360, 41.638398, 42.979820,
      44.314105, 45.641683, 46.962942, 48.278236, 49.587884, 50.892181};
  if (dof < 1 || dof > 30) throw std::out_of_range("chi2_critical_99: dof outside [1, 30]");
  return table[dof - 1];
}

// One-sample statistic against exact cell probabilities. Cells with expected
// count below `min_expected` are pooled into their predecessor.
struct Chi2Result {
  double statistic = 0.0;
  int dof = 0;
  bool pass = false;  // statistic below the 1% critical value
};

template <typename Key>
Chi2Result chi2_goodness_of_fit(const std::map<Key, long>& observed,
                                const std::map<Key, double>& expected_probs, long total,
                                double min_expected = 10.0) {
  std::vector<double> exp_counts;
  std::vector<double> obs_counts;
  for (const auto& [key, p] : expected_probs) {
    const double e = p * static_cast<double>(total);
    const auto it = observed.find(key);
    const double o = it == observed.end() ? 0.0 : static_cast<double>(it->second);
    if (!exp_counts.empty() && (e < min_expected || exp_counts.back() < min_expected)) {
      exp_counts.back() += e;
      obs_counts.back() += o;
    } else {
      exp_counts.push_back(e);
      obs_counts.push_back(o);
    }
  }
  Chi2Result r;
  if (exp_counts.size() < 2) {
    // single cell: exact when all mass sits there
    r.dof = 0;
    r.statistic = 0.0;
    r.pass = obs_counts.empty() || obs_counts[0] == static_cast<double>(total);
    return r;
  }
  for (std::size_t i = 0; i < exp_counts.size(); ++i) {
    const double d = obs_counts[i] - exp_counts[i];
    r.statistic += d * d / exp_counts[i];
  }
  r.dof = static_cast<int>(exp_counts.size()) - 1;
  r.pass = r.statistic < chi2_critical_99(r.dof);
  return r;
}

// Uniformity over an enumerated support of `cells` outcomes.
inline Chi2Result chi2_uniformity(std::span<const long> counts, long total) {
  const int cells = static_cast<int>(counts.size());
  Chi2Result r;
  if (cells < 2) {
    r.dof = 0;
    r.pass = true;
    return r;
  }
  const double expected = static_cast<double>(total) / cells;
  for (long c : counts) {
    const double d = static_cast<double>(c) - expected;
    r.statistic += d * d / expected;
  }
  r.dof = cells - 1;
  r.pass = r.statistic < chi2_critical_99(r.dof);
  return r;
}

// Two-sample homogeneity test over the union support; equal sample sizes.
template <typename Key>
Chi2Result chi2_two_sample(const std::map<Key, long>& a, const std::map<Key, long>& b) {
  std::map<Key, std::pair<long, long>> cells;
  for (const auto& [k, c] : a) cells[k].first += c;
  for (const auto& [k, c] : b) cells[k].second += c;
  Chi2Result r;
  if (cells.size() < 2) {
    r.dof = 0;
    r.pass = true;
    return r;
  }
  for (const auto& [k, pair] : cells) {
    const double ca = static_cast<double>(pair.first);
    const double cb = static_cast<double>(pair.second);
    const double d = ca - cb;
    r.statistic += d * d / (ca + cb);
  }
  r.dof = static_cast<int>(cells.size()) - 1;
  r.pass = r.statistic < chi2_critical_99(r.dof);
  return r;
}

}  // namespace testsupport
