#include "oscwalk/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "oscwalk/exact_moments.hpp"

namespace oscwalk {

ObservableSpec ObservableSpec::parse(const std::string& text) {
  const auto bad = [&text]() {
    return std::invalid_argument("ObservableSpec: cannot parse '" + text + "'");
  };
  if (text == "volume") return volume();
  if (text == "scaled_volume") return scaled_volume();
  const auto at = text.find('@');
  if (at == std::string::npos) throw bad();
  const std::string head = text.substr(0, at);
  const std::string args = text.substr(at + 1);
  try {
    if (head == "height") return height_at(std::stoi(args));
    if (head == "fluct") return scaled_fluctuation_at(std::stoi(args));
    if (head == "pair") {
      const auto colon = args.find(':');
      if (colon == std::string::npos) throw bad();
      return pair_heights(std::stoi(args.substr(0, colon)), std::stoi(args.substr(colon + 1)));
    }
  } catch (const std::invalid_argument&) {
    throw bad();
  } catch (const std::out_of_range&) {
    throw bad();
  }
  throw bad();
}

std::string ObservableSpec::name() const {
  switch (kind) {
    case Kind::HeightAt:
      return "height@" + std::to_string(x1);
    case Kind::ScaledFluctuationAt:
      return "fluct@" + std::to_string(x1);
    case Kind::Volume:
      return "volume";
    case Kind::ScaledVolume:
      return "scaled_volume";
    case Kind::PairHeights:
      return "pair@" + std::to_string(x1) + ":" + std::to_string(x2);
  }
  return "?";
}

void ObservableSpec::validate(const WalkConfig& cfg) const {
  const auto in_range = [&cfg](int x) { return x >= 0 && x <= cfg.n; };
  switch (kind) {
    case Kind::HeightAt:
    case Kind::ScaledFluctuationAt:
      if (!in_range(x1)) throw std::invalid_argument("ObservableSpec: index outside [0, n]");
      break;
    case Kind::PairHeights:
      if (!in_range(x1) || !in_range(x2))
        throw std::invalid_argument("ObservableSpec: index outside [0, n]");
      break;
    default:
      break;
  }
}

namespace {

// Per-observable constants that do not depend on the sample.
struct ObservableContext {
  ObservableSpec spec;
  double center = 0.0;
  double scale = 1.0;
};

ObservableContext make_context(const ObservableSpec& spec, const WalkConfig& cfg) {
  ObservableContext ctx{spec, 0.0, 1.0};
  const double n = static_cast<double>(cfg.n);
  switch (spec.kind) {
    case ObservableSpec::Kind::ScaledFluctuationAt:
      ctx.center = cfg.n >= 4 ? to_double(closed_form_mean(cfg.n, cfg.y0, spec.x1))
                              : to_double(moment(cfg.n, cfg.y0, spec.x1, 1));
      ctx.scale = 1.0 / std::sqrt(n);
      break;
    case ObservableSpec::Kind::ScaledVolume:
      ctx.center = n * n / 6.0;
      ctx.scale = 1.0 / std::sqrt(n * n * n);
      break;
    default:
      break;
  }
  return ctx;
}

double evaluate(const ObservableContext& ctx, const std::vector<int>& heights) {
  switch (ctx.spec.kind) {
    case ObservableSpec::Kind::HeightAt:
      return static_cast<double>(heights[ctx.spec.x1]);
    case ObservableSpec::Kind::ScaledFluctuationAt:
      return (static_cast<double>(heights[ctx.spec.x1]) - ctx.center) * ctx.scale;
    case ObservableSpec::Kind::Volume:
    case ObservableSpec::Kind::ScaledVolume: {
      long long v = 0;
      for (int h : heights) v += h;
      return (static_cast<double>(v) - ctx.center) * ctx.scale;
    }
    case ObservableSpec::Kind::PairHeights:
      return static_cast<double>(heights[ctx.spec.x1]) * static_cast<double>(heights[ctx.spec.x2]);
  }
  return 0.0;
}

struct MeanVariance {
  double mean = 0.0;
  double variance = 0.0;
};

// Two-pass mean/variance in index order, so the result does not depend on
// the execution schedule.
MeanVariance reduce_mean_variance(std::span<const double> values) {
  MeanVariance mv;
  const std::size_t count = values.size();
  double sum = 0.0;
  for (double v : values) sum += v;
  mv.mean = sum / static_cast<double>(count);
  if (count < 2) return mv;
  double ss = 0.0;
  for (double v : values) ss += (v - mv.mean) * (v - mv.mean);
  mv.variance = ss / static_cast<double>(count - 1);
  return mv;
}

Histogram make_histogram(std::span<const double> values, const MeanVariance& mv, int bins) {
  Histogram h;
  const double sd = std::sqrt(std::max(mv.variance, 0.0));
  const double half_width = sd > 0.0 ? 4.0 * sd : 1.0;
  const double lo = mv.mean - half_width;
  const double hi = mv.mean + half_width;
  h.edges.resize(bins + 1);
  for (int b = 0; b <= bins; ++b)
    h.edges[b] = lo + (hi - lo) * static_cast<double>(b) / static_cast<double>(bins);
  h.counts.assign(bins, 0);
  for (double v : values) {
    if (v < lo) {
      ++h.underflow;
    } else if (v >= hi) {
      ++h.overflow;
    } else {
      int b = static_cast<int>((v - lo) / (hi - lo) * bins);
      b = std::clamp(b, 0, bins - 1);
      ++h.counts[b];
    }
  }
  return h;
}

}  // namespace

EstimateReport run_campaign(const Campaign& campaign, ExecMode mode) {
  campaign.cfg.validate();
  if (campaign.samples < 1) throw std::invalid_argument("run_campaign: samples must be >= 1");
  if (campaign.bins < 1) throw std::invalid_argument("run_campaign: bins must be >= 1");
  for (const auto& spec : campaign.observables) spec.validate(campaign.cfg);

  const long samples = campaign.samples;
  const std::size_t n_obs = campaign.observables.size();
  std::vector<ObservableContext> contexts;
  contexts.reserve(n_obs);
  for (const auto& spec : campaign.observables) contexts.push_back(make_context(spec, campaign.cfg));

  // Per-sample values, written by index and reduced serially afterwards, so
  // serial and parallel execution produce bit-identical reports.
  std::vector<std::vector<double>> values(n_obs, std::vector<double>(samples));

  const auto body = [&](long i) {
    static thread_local std::vector<int> heights;
    Rng rng(derive_stream_seed(campaign.seed, static_cast<std::uint64_t>(i)));
    simulate_into(campaign.cfg, rng, heights);
    for (std::size_t o = 0; o < n_obs; ++o) values[o][i] = evaluate(contexts[o], heights);
  };

  if (mode == ExecMode::Parallel) {
#pragma omp parallel for schedule(static)
    for (long i = 0; i < samples; ++i) body(i);
  } else {
    for (long i = 0; i < samples; ++i) body(i);
  }

  EstimateReport report;
  report.campaign = campaign;
  report.estimates.reserve(n_obs);
  for (std::size_t o = 0; o < n_obs; ++o) {
    ObservableEstimate est;
    est.spec = campaign.observables[o];
    const auto mv = reduce_mean_variance(values[o]);
    est.mean = mv.mean;
    est.variance = mv.variance;
    est.mean_stderr = std::sqrt(mv.variance / static_cast<double>(samples));
    est.variance_stderr =
        samples > 1 ? mv.variance * std::sqrt(2.0 / static_cast<double>(samples - 1)) : 0.0;
    est.histogram = make_histogram(values[o], mv, campaign.bins);
    report.estimates.push_back(std::move(est));
  }
  return report;
}

std::vector<std::pair<int, double>> covariance_profile(const WalkConfig& cfg, int x_fixed,
                                                       long samples, std::uint64_t seed,
                                                       int stride, ExecMode mode) {
  cfg.validate();
  if (x_fixed < 0 || x_fixed > cfg.n)
    throw std::invalid_argument("covariance_profile: x_fixed outside [0, n]");
  if (samples < 2) throw std::invalid_argument("covariance_profile: need at least 2 samples");
  if (stride < 1) throw std::invalid_argument("covariance_profile: stride must be >= 1");

  std::vector<int> grid;
  for (int x = 0; x <= cfg.n; x += stride) grid.push_back(x);
  const std::size_t g = grid.size();

  std::vector<double> fixed_vals(samples);
  std::vector<std::vector<double>> grid_vals(g, std::vector<double>(samples));

  const auto body = [&](long i) {
    static thread_local std::vector<int> heights;
    Rng rng(derive_stream_seed(seed, static_cast<std::uint64_t>(i)));
    simulate_into(cfg, rng, heights);
    fixed_vals[i] = static_cast<double>(heights[x_fixed]);
    for (std::size_t k = 0; k < g; ++k) grid_vals[k][i] = static_cast<double>(heights[grid[k]]);
  };

  if (mode == ExecMode::Parallel) {
#pragma omp parallel for schedule(static)
    for (long i = 0; i < samples; ++i) body(i);
  } else {
    for (long i = 0; i < samples; ++i) body(i);
  }

  const auto fixed_mv = reduce_mean_variance(fixed_vals);
  std::vector<std::pair<int, double>> out;
  out.reserve(g);
  for (std::size_t k = 0; k < g; ++k) {
    const auto mv = reduce_mean_variance(grid_vals[k]);
    double acc = 0.0;
    for (long i = 0; i < samples; ++i)
      acc += (fixed_vals[i] - fixed_mv.mean) * (grid_vals[k][i] - mv.mean);
    out.emplace_back(grid[k], acc / static_cast<double>(samples - 1));
  }
  return out;
}

NormalityReport normality_check(std::span<const double> samples) {
  if (samples.size() < 100)
    throw std::invalid_argument("normality_check: need at least 100 samples");
  const double n = static_cast<double>(samples.size());
  double mean = 0.0;
  for (double v : samples) mean += v;
  mean /= n;
  double m2 = 0.0, m3 = 0.0, m4 = 0.0;
  for (double v : samples) {
    const double d = v - mean;
    m2 += d * d;
    m3 += d * d * d;
    m4 += d * d * d * d;
  }
  m2 /= n;
  m3 /= n;
  m4 /= n;

  NormalityReport report;
  report.skewness_stderr = std::sqrt(6.0 / n);
  report.kurtosis_stderr = std::sqrt(24.0 / n);
  if (m2 <= 0.0) {
    report.degenerate = true;
    report.pass = false;
    return report;
  }
  report.skewness = m3 / std::pow(m2, 1.5);
  report.excess_kurtosis = m4 / (m2 * m2) - 3.0;
  report.pass = std::abs(report.skewness) <= 4.0 * report.skewness_stderr &&
                std::abs(report.excess_kurtosis) <= 4.0 * report.kurtosis_stderr;
  return report;
}

}  // namespace oscwalk
