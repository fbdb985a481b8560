// Acceptance suite: one criterion per function, one pass/fail line each.
// Exit code is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iostream>
#include <map>
#include <sstream>
#include <vector>

#include "oscwalk/continuum.hpp"
#include "oscwalk/exact_moments.hpp"
#include "oscwalk/partition.hpp"
#include "oscwalk/pathsum.hpp"
#include "oscwalk/stats.hpp"
#include "oscwalk/tableau.hpp"
#include "oscwalk/walk.hpp"
#include "support/chi_squared.hpp"

using namespace oscwalk;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    pass = false;
    if (detail.empty()) detail = why;
  }
};

// 1. enumerate_all count equals the counting formula for |shape| <= 4, n <= 8.
Outcome criterion_enumeration() {
  Outcome o;
  for (int size = 0; size <= 4; ++size)
    for (const auto& shape : partitions_of(size))
      for (int n = 0; n <= 8; ++n) {
        const auto all = enumerate_all(shape, n);
        if (Int(static_cast<long>(all.size())) != count_formula(shape, n))
          o.fail("shape " + shape.to_string() + " n=" + std::to_string(n));
      }
  return o;
}

// 2. 20,000 seeded samples of ((2,1), 5) cover all 20 tableaux uniformly
//    (chi-squared below the 1% critical value at 19 dof).
Outcome criterion_sampler() {
  Outcome o;
  const Partition shape(std::vector<int>{2, 1});
  const auto support = enumerate_all(shape, 5);
  if (support.size() != 20) {
    o.fail("support size " + std::to_string(support.size()));
    return o;
  }
  std::map<OscillatingTableau, int> index;
  for (std::size_t i = 0; i < support.size(); ++i) index.emplace(support[i], (int)i);
  std::vector<long> counts(support.size(), 0);
  const long samples = 20000;
  Rng rng(20000101);
  for (long s = 0; s < samples; ++s) {
    const auto t = sample_uniform(shape, 5, rng);
    const auto it = index.find(t);
    if (it == index.end()) {
      o.fail("sampled tableau outside the enumerated support");
      return o;
    }
    ++counts[it->second];
  }
  const auto chi2 = testsupport::chi2_uniformity(counts, samples);
  std::ostringstream detail;
  detail << "chi2=" << chi2.statistic << " (dof 19, 1% critical "
         << testsupport::chi2_critical_99(19) << ")";
  o.detail = detail.str();
  if (!chi2.pass || chi2.dof != 19) o.pass = false;
  return o;
}

// 3. Moment recursion equals exhaustive weighted path sums, exactly,
//    for n <= 10, every valid y0, every x, orders <= 4.
Outcome criterion_moment_oracle() {
  Outcome o;
  for (int n = 1; n <= 10; ++n)
    for (int y0 = n % 2; y0 <= n; y0 += 2) {
      const auto paths = pathsum::enumerate_paths({n, y0, WeightModel::standard()});
      MomentTable table(n, y0, 4);
      for (int x = 0; x <= n; ++x)
        for (int order = 0; order <= 4; ++order)
          if (table(x, order) != pathsum::moment(paths, x, order))
            o.fail("n=" + std::to_string(n) + " y0=" + std::to_string(y0) +
                   " x=" + std::to_string(x) + " order=" + std::to_string(order));
    }
  return o;
}

// 4. Recursion equals the closed-form mean/second moment for n in [4,60],
//    and the covariance closed form equals the mixed-moment route for
//    n in [4,30]; all valid y0, all points.
Outcome criterion_closed_forms() {
  Outcome o;
  for (int n = 4; n <= 60; ++n)
    for (int y0 = n % 2; y0 <= n; y0 += 2) {
      MomentTable table(n, y0, 2);
      for (int x = 0; x <= n; ++x) {
        if (table(x, 1) != closed_form_mean(n, y0, x))
          o.fail("mean n=" + std::to_string(n) + " y0=" + std::to_string(y0) +
                 " x=" + std::to_string(x));
        if (table(x, 2) != closed_form_second_moment(n, y0, x))
          o.fail("second moment n=" + std::to_string(n) + " y0=" + std::to_string(y0) +
                 " x=" + std::to_string(x));
        if (table(x, 2) - table(x, 1) * table(x, 1) != closed_form_variance(n, y0, x))
          o.fail("variance n=" + std::to_string(n) + " y0=" + std::to_string(y0) +
                 " x=" + std::to_string(x));
      }
    }
  for (int n = 4; n <= 30; ++n)
    for (int y0 = n % 2; y0 <= n; y0 += 2) {
      MomentTable table(n, y0, 1);
      for (int x1 = 0; x1 < n; ++x1)
        for (int x2 = x1 + 1; x2 <= n; ++x2) {
          const Rational via_mixed =
              mixed_moment(n, y0, {{x1, x2}, {1, 1}}) - table(x1, 1) * table(x2, 1);
          if (covariance(n, y0, x1, x2) != via_mixed)
            o.fail("covariance n=" + std::to_string(n) + " y0=" + std::to_string(y0) + " (" +
                   std::to_string(x1) + "," + std::to_string(x2) + ")");
        }
    }
  return o;
}

// 5. Volume mean/variance equal brute force exactly for n <= 10 and agree
//    with the per-step moment/covariance summation for n in [4,60].
Outcome criterion_volume() {
  Outcome o;
  for (int n = 1; n <= 10; ++n)
    for (int y0 = n % 2; y0 <= n; y0 += 2) {
      const auto paths = pathsum::enumerate_paths({n, y0, WeightModel::standard()});
      if (volume_mean(n, y0) != pathsum::volume_mean(paths))
        o.fail("mean n=" + std::to_string(n) + " y0=" + std::to_string(y0));
      if (n >= 4 && volume_variance(n, y0) != pathsum::volume_variance(paths))
        o.fail("variance n=" + std::to_string(n) + " y0=" + std::to_string(y0));
    }
  for (int n = 4; n <= 60; ++n)
    for (int y0 = n % 2; y0 <= n; y0 += 2) {
      MomentTable table(n, y0, 2);
      Rational mean(0), var(0);
      for (int i = 0; i <= n; ++i) {
        mean += table(i, 1);
        var += table(i, 2) - table(i, 1) * table(i, 1);
      }
      for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) var += 2 * covariance(n, y0, i, j);
      if (volume_mean(n, y0) != mean)
        o.fail("summation mean n=" + std::to_string(n) + " y0=" + std::to_string(y0));
      if (volume_variance(n, y0) != var)
        o.fail("summation variance n=" + std::to_string(n) + " y0=" + std::to_string(y0));
    }
  return o;
}

// 6. Distribution slices sum to 1 exactly and reproduce the moment recursion
//    for n <= 30.
Outcome criterion_master_equation() {
  Outcome o;
  for (int n = 1; n <= 30; ++n)
    for (int y0 = n % 2; y0 <= n; y0 += 2) {
      const auto slices = evolve_distribution({n, y0, WeightModel::standard()});
      MomentTable table(n, y0, 4);
      for (const auto& s : slices) {
        Rational total(0);
        std::vector<Rational> sums(5, Rational(0));
        for (const auto& [y, p] : s.probs) {
          total += p;
          for (int order = 0; order <= 4; ++order)
            sums[order] += p * Rational(int_pow(Int(y), order));
        }
        if (total != 1)
          o.fail("normalization n=" + std::to_string(n) + " x=" + std::to_string(s.x));
        for (int order = 0; order <= 4; ++order)
          if (sums[order] != table(s.x, order))
            o.fail("moment n=" + std::to_string(n) + " y0=" + std::to_string(y0) +
                   " x=" + std::to_string(s.x) + " order=" + std::to_string(order));
      }
    }
  return o;
}

struct CampaignData {
  std::vector<double> fluct;         // (H(2500) - E[H(2500)]) / sqrt(N)
  std::vector<double> scaled_volume; // (V - N^2/6) / N^(3/2)
  EstimateReport report;
};

const CampaignData& figure_campaign() {
  static const CampaignData data = [] {
    CampaignData d;
    Campaign c;
    c.cfg = {5000, 0, WeightModel::standard()};
    c.samples = 5000;
    c.seed = 50003;
    c.observables = {ObservableSpec::scaled_fluctuation_at(2500), ObservableSpec::scaled_volume()};
    d.report = run_campaign(c);
    // rebuild the per-sample values with the same derived streams
    const double center = to_double(closed_form_mean(5000, 0, 2500));
    const double scale = 1.0 / std::sqrt(5000.0);
    const double vol_center = 5000.0 * 5000.0 / 6.0;
    const double vol_scale = 1.0 / std::sqrt(5000.0 * 5000.0 * 5000.0);
    std::vector<int> buf;
    for (long i = 0; i < c.samples; ++i) {
      Rng rng(derive_stream_seed(c.seed, static_cast<std::uint64_t>(i)));
      simulate_into(c.cfg, rng, buf);
      d.fluct.push_back((buf[2500] - center) * scale);
      long long v = 0;
      for (int h : buf) v += h;
      d.scaled_volume.push_back((static_cast<double>(v) - vol_center) * vol_scale);
    }
    return d;
  }();
  return data;
}

// 7. The N=5000 campaign reproduces the midpoint fluctuation statistics:
//    mean within 3 SE of 0, variance within 3 SE of 1/8, normality passes.
Outcome criterion_figure_fluctuations() {
  Outcome o;
  const auto& data = figure_campaign();
  const auto& est = data.report.estimates[0];
  std::ostringstream detail;
  detail << "mean=" << est.mean << " (SE " << est.mean_stderr << "), variance=" << est.variance
         << " (SE " << est.variance_stderr << ")";
  o.detail = detail.str();
  if (std::abs(est.mean) > 3.0 * est.mean_stderr) o.fail("mean outside 3 SE of 0");
  if (std::abs(est.variance - 0.125) > 3.0 * est.variance_stderr)
    o.fail("variance outside 3 SE of 1/8");
  const auto normality = normality_check(data.fluct);
  if (!normality.pass) o.fail("normality check failed");
  // campaign and direct evaluation must agree bit-exactly (same streams)
  double mean = 0.0;
  for (double v : data.fluct) mean += v;
  mean /= static_cast<double>(data.fluct.size());
  if (mean != est.mean) o.fail("campaign mean differs from direct evaluation");
  return o;
}

// 8. Same campaign: scaled volume has mean within 3 SE of 0 and variance
//    within 3 SE of 1/45.
Outcome criterion_figure_volume() {
  Outcome o;
  const auto& est = figure_campaign().report.estimates[1];
  std::ostringstream detail;
  detail << "mean=" << est.mean << " (SE " << est.mean_stderr << "), variance=" << est.variance
         << " (SE " << est.variance_stderr << ", target " << 1.0 / 45.0 << ")";
  o.detail = detail.str();
  if (std::abs(est.mean) > 3.0 * est.mean_stderr) o.fail("mean outside 3 SE of 0");
  if (std::abs(est.variance - 1.0 / 45.0) > 3.0 * est.variance_stderr)
    o.fail("variance outside 3 SE of 1/45");
  return o;
}

// 9. Closed-form determinant and inverse of the kernel matrix match direct
//    numerics on 20 seeded random interior grids with n <= 6.
Outcome criterion_matrix_lemma() {
  Outcome o;
  Rng rng(424242);
  int tested = 0;
  while (tested < 20) {
    const int n = 1 + static_cast<int>(rng.below(std::uint64_t(6)));
    std::vector<double> pts(n);
    for (auto& x : pts) x = 0.05 + 0.9 * rng.uniform();
    std::sort(pts.begin(), pts.end());
    bool distinct = true;
    for (int i = 1; i < n; ++i)
      if (pts[i] - pts[i - 1] < 1e-3) distinct = false;
    if (!distinct) continue;
    ++tested;
    const auto a = covariance_matrix_analysis(pts);
    if (std::abs(a.lemma_det - a.direct_det) > 1e-10 * std::abs(a.direct_det))
      o.fail("determinant mismatch on grid " + std::to_string(tested));
    if (a.max_identity_residual > 1e-10)
      o.fail("inverse residual " + std::to_string(a.max_identity_residual));
  }
  return o;
}

// 10. Continuum identities: the extremal ODE residual vanishes, the operator
//     annihilates the kernel sections (with a second-order discretization),
//     and the exact variance converges to the limit at first order in 1/n.
Outcome criterion_continuum() {
  Outcome o;
  for (int i = 1; i <= 99; ++i) {
    const double x = i / 100.0;
    if (std::abs(ode_residual(x * (1.0 - x), 1.0 - 2.0 * x, -2.0)) > 1e-12)
      o.fail("ode residual at x=" + std::to_string(x));
  }

  const auto section_residual = [](double step) {
    const double x2 = 0.6;
    double worst = 0.0;
    for (bool left : {true, false}) {
      const double lo = left ? step : x2 + 2.0 * step;
      const double hi = left ? x2 - 2.0 * step : 1.0 - step;
      const int m = static_cast<int>(std::floor((hi - lo) / step)) + 1;
      std::vector<double> f(m);
      for (int i = 0; i < m; ++i) f[i] = covariance_kernel(lo + i * step, x2);
      for (double v : apply_delta_operator(f, lo, step)) worst = std::max(worst, std::abs(v));
    }
    return worst;
  };
  const double r1 = section_residual(2e-3);
  const double r2 = section_residual(1e-3);
  // the sections are quadratic, so central differences leave only rounding
  if (r1 > 1e-8 || r2 > 1e-8) o.fail("kernel sections not annihilated");

  // measured second-order convergence of the discretized operator itself
  const auto operator_error = [](double step) {
    const double x0 = 0.3;
    const int m = static_cast<int>(0.4 / step);
    std::vector<double> f(m);
    for (int i = 0; i < m; ++i) f[i] = std::sin(3.0 * (x0 + i * step));
    const auto img = apply_delta_operator(f, x0, step);
    double worst = 0.0;
    for (std::size_t i = 0; i < img.size(); ++i) {
      const double x = x0 + (i + 1) * step;
      const double omx = 1.0 - x;
      const double exact = -(-9.0 * std::sin(3.0 * x)) / (2.0 * x * omx) +
                           (1.0 - 2.0 * x) * (3.0 * std::cos(3.0 * x)) / (2.0 * x * x * omx * omx) +
                           std::sin(3.0 * x) / (x * x * omx * omx);
      worst = std::max(worst, std::abs(img[i] - exact));
    }
    return worst;
  };
  const double e1 = operator_error(2e-3);
  const double e2 = operator_error(1e-3);
  if (e2 > e1 / 3.0) o.fail("operator discretization not second order");

  for (double x : {0.25, 0.5, 0.75}) {
    std::vector<double> c_values;
    for (int n : {500, 1000, 2000}) {
      const int big_x = static_cast<int>(std::lround(n * x));
      const double scaled_var = to_double(closed_form_variance(n, 0, big_x)) / n;
      c_values.push_back(std::abs(scaled_var - fluctuation_variance(x, 0.0)) * n);
    }
    const double lo = *std::min_element(c_values.begin(), c_values.end());
    const double hi = *std::max_element(c_values.begin(), c_values.end());
    if (hi / lo > 1.25) o.fail("variance convergence constant drifts at x=" + std::to_string(x));
  }
  std::ostringstream detail;
  detail << "section residuals " << r1 << ", " << r2 << "; operator errors " << e1 << " -> " << e2;
  o.detail = detail.str();
  return o;
}

// 11. The tableau area process and the direct walk are identically
//     distributed: two-sample chi-squared on full-trajectory histograms,
//     n <= 6, empty shape, 20,000 samples each.
Outcome criterion_area_walk_equivalence() {
  Outcome o;
  const Partition empty{};
  for (int n : {2, 4, 6}) {
    std::map<std::vector<int>, long> from_tableaux, from_walk;
    Rng rng_t(808 + n);
    Rng rng_w(909 + n);
    std::vector<int> buf;
    for (long i = 0; i < 20000; ++i) {
      from_tableaux[area_sequence(sample_uniform(empty, n, rng_t)).heights] += 1;
      simulate_into({n, 0, WeightModel::standard()}, rng_w, buf);
      from_walk[buf] += 1;
    }
    const auto chi2 = testsupport::chi2_two_sample(from_tableaux, from_walk);
    if (!chi2.pass)
      o.fail("n=" + std::to_string(n) + " chi2=" + std::to_string(chi2.statistic) +
             " dof=" + std::to_string(chi2.dof));
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {1, "enumeration count equals counting formula", criterion_enumeration},
      {2, "uniform sampler chi-squared at 1% (19 dof)", criterion_sampler},
      {3, "moment recursion equals exhaustive path sums", criterion_moment_oracle},
      {4, "closed-form moments and covariance, exact", criterion_closed_forms},
      {5, "volume formulas, brute force and summation route", criterion_volume},
      {6, "master equation normalization and moments", criterion_master_equation},
      {7, "midpoint fluctuation statistics at N=5000", criterion_figure_fluctuations},
      {8, "scaled volume statistics at N=5000", criterion_figure_volume},
      {9, "kernel matrix determinant/inverse recurrences", criterion_matrix_lemma},
      {10, "continuum identities and convergence orders", criterion_continuum},
      {11, "tableau area process equals the direct walk", criterion_area_walk_equivalence},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    const Outcome outcome = c.run();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (outcome.pass ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.name;
    if (!outcome.detail.empty()) std::cout << " — " << outcome.detail;
    std::cout << " (" << secs << " s)\n";
    if (!outcome.pass) ++failures;
  }
  if (failures) std::cout << failures << " criterion(s) failed\n";
  return failures;
}
