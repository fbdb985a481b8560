#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "oscwalk/walk.hpp"

namespace oscwalk {

// Scalar functional of one walk trajectory.
//   HeightAt(x):             H(x)
//   ScaledFluctuationAt(x):  (H(x) - E[H(x)]) / sqrt(N)
//   Volume:                  sum of heights
//   ScaledVolume:            (V - N^2/6) / sqrt(N^3)
//   PairHeights(x1, x2):     H(x1) * H(x2)
struct ObservableSpec {
  enum class Kind { HeightAt, ScaledFluctuationAt, Volume, ScaledVolume, PairHeights };

  Kind kind = Kind::Volume;
  int x1 = 0;
  int x2 = 0;

  static ObservableSpec height_at(int x) { return {Kind::HeightAt, x, 0}; }
  static ObservableSpec scaled_fluctuation_at(int x) { return {Kind::ScaledFluctuationAt, x, 0}; }
  static ObservableSpec volume() { return {Kind::Volume, 0, 0}; }
  static ObservableSpec scaled_volume() { return {Kind::ScaledVolume, 0, 0}; }
  static ObservableSpec pair_heights(int x1, int x2) { return {Kind::PairHeights, x1, x2}; }

  // "height@X", "fluct@X", "volume", "scaled_volume", "pair@X1:X2"
  static ObservableSpec parse(const std::string& text);
  std::string name() const;

  void validate(const WalkConfig& cfg) const;  // indices within [0, n]
};

struct Campaign {
  WalkConfig cfg;
  long samples = 1;
  std::uint64_t seed = 0;
  std::vector<ObservableSpec> observables;
  int bins = 50;
};

struct Histogram {
  std::vector<double> edges;   // bins + 1 edges
  std::vector<long> counts;    // per bin
  long underflow = 0;
  long overflow = 0;

  friend bool operator==(const Histogram&, const Histogram&) = default;
};

struct ObservableEstimate {
  ObservableSpec spec;
  double mean = 0.0;
  double variance = 0.0;        // unbiased sample variance
  double mean_stderr = 0.0;     // sd / sqrt(samples)
  double variance_stderr = 0.0; // variance * sqrt(2/(samples-1))
  Histogram histogram;
};

struct EstimateReport {
  Campaign campaign;
  std::vector<ObservableEstimate> estimates;
};

enum class ExecMode { Serial, Parallel };

// Runs the campaign: per-sample trajectories with independent derived RNG
// streams, then a deterministic serial reduction. Results are bit-identical
// across execution modes and thread counts.
EstimateReport run_campaign(const Campaign& campaign, ExecMode mode = ExecMode::Parallel);

// Sample covariance Cov[H(x_fixed), H(x)] for x = 0, stride, 2*stride, ..., n.
std::vector<std::pair<int, double>> covariance_profile(const WalkConfig& cfg, int x_fixed,
                                                       long samples, std::uint64_t seed,
                                                       int stride = 1,
                                                       ExecMode mode = ExecMode::Parallel);

struct NormalityReport {
  double skewness = 0.0;
  double excess_kurtosis = 0.0;
  double skewness_stderr = 0.0;
  double kurtosis_stderr = 0.0;
  bool degenerate = false;  // zero variance
  bool pass = false;        // both statistics within 4 standard errors of 0
};

// Moment-based normality check; throws std::invalid_argument for < 100 samples.
NormalityReport normality_check(std::span<const double> samples);

}  // namespace oscwalk
