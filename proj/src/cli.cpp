#include "oscwalk/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "oscwalk/continuum.hpp"
#include "oscwalk/exact_moments.hpp"
#include "oscwalk/io.hpp"
#include "oscwalk/partition.hpp"
#include "oscwalk/pathsum.hpp"
#include "oscwalk/stats.hpp"
#include "oscwalk/tableau.hpp"
#include "oscwalk/walk.hpp"

namespace oscwalk {

namespace {

using nlohmann::json;

WeightModel parse_weights(const std::string& text) {
  if (text.empty() || text == "standard") return WeightModel::standard();
  if (text.rfind("power:", 0) == 0) return WeightModel::power_k(std::stoi(text.substr(6)));
  if (text.rfind("q:", 0) == 0) return WeightModel::q_deformed(std::stod(text.substr(2)));
  throw std::invalid_argument("weights: expected standard | power:K | q:Q, got '" + text + "'");
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> out;
  std::istringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    if (!token.empty()) out.push_back(std::stod(token));
  }
  return out;
}

// ---- verify checks ------------------------------------------------------

struct VerifyState {
  std::ostream& out;
  int failures = 0;

  void report(const std::string& name, bool ok, const std::string& detail = "") {
    out << (ok ? "[ok]   " : "[FAIL] ") << name;
    if (!ok && !detail.empty()) out << ": " << detail;
    out << "\n";
    if (!ok) ++failures;
  }
};

void verify_enumeration(VerifyState& v, int max_n) {
  bool ok = true;
  std::string detail;
  for (int size = 0; size <= 4 && ok; ++size) {
    for (const auto& shape : partitions_of(size)) {
      for (int n = 0; n <= std::min(max_n, 8); ++n) {
        const Int expected = count_formula(shape, n);
        const auto all = enumerate_all(shape, n, std::max(max_n, 8));
        if (Int(static_cast<long>(all.size())) != expected) {
          ok = false;
          detail = "shape " + shape.to_string() + " n=" + std::to_string(n);
          break;
        }
      }
      if (!ok) break;
    }
  }
  v.report("enumeration count matches counting formula", ok, detail);
}

void verify_sampler(VerifyState& v) {
  bool ok = true;
  std::string detail;
  const std::vector<std::pair<Partition, int>> cases = {
      {Partition(std::vector<int>{2, 1}), 5},
      {Partition(std::vector<int>{1}), 5},
      {Partition(std::vector<int>{}), 6},
      {Partition(std::vector<int>{2, 2}), 8}};
  Rng rng(7);
  for (const auto& [shape, n] : cases) {
    for (int i = 0; i < 200; ++i) {
      const auto t = sample_uniform(shape, n, rng);
      const auto check = validate(t);
      if (!check || t.shape() != shape || t.length() != n) {
        ok = false;
        detail = "shape " + shape.to_string() + " n=" + std::to_string(n) + ": " + check.reason;
        break;
      }
    }
    if (!ok) break;
  }
  v.report("sampled tableaux validate", ok, detail);
}

void verify_closed_forms(VerifyState& v, int max_n) {
  bool ok = true;
  std::string detail;
  for (int n = 4; n <= std::max(max_n, 30) && ok; ++n) {
    for (int y0 = n % 2; y0 <= n && ok; y0 += 2) {
      MomentTable table(n, y0, 2);
      for (int x = 0; x <= n; ++x) {
        if (table(x, 1) != closed_form_mean(n, y0, x) ||
            table(x, 2) != closed_form_second_moment(n, y0, x)) {
          ok = false;
          detail = "n=" + std::to_string(n) + " y0=" + std::to_string(y0) +
                   " x=" + std::to_string(x);
          break;
        }
      }
    }
  }
  v.report("moment recursion matches closed forms", ok, detail);

  bool cov_ok = true;
  std::string cov_detail;
  for (int n = 4; n <= 16 && cov_ok; n += 3) {
    for (int y0 = n % 2; y0 <= n && cov_ok; y0 += 2) {
      MomentTable table(n, y0, 1);
      for (int x1 = 0; x1 < n && cov_ok; ++x1)
        for (int x2 = x1 + 1; x2 <= n; ++x2) {
          const Rational via_mixed =
              mixed_moment(n, y0, {{x1, x2}, {1, 1}}) - table(x1, 1) * table(x2, 1);
          if (covariance(n, y0, x1, x2) != via_mixed) {
            cov_ok = false;
            cov_detail = "n=" + std::to_string(n) + " y0=" + std::to_string(y0) + " (" +
                         std::to_string(x1) + "," + std::to_string(x2) + ")";
            break;
          }
        }
    }
  }
  v.report("covariance closed form matches mixed-moment route", cov_ok, cov_detail);
}

void verify_brute_force(VerifyState& v, int max_n) {
  bool ok = true;
  std::string detail;
  for (int n = 1; n <= std::min(max_n, 10) && ok; ++n) {
    for (int y0 = n % 2; y0 <= n && ok; y0 += 2) {
      const auto paths = pathsum::enumerate_paths({n, y0, WeightModel::standard()});
      MomentTable table(n, y0, 3);
      for (int x = 0; x <= n && ok; ++x)
        for (int order = 1; order <= 3; ++order) {
          if (table(x, order) != pathsum::moment(paths, x, order)) {
            ok = false;
            detail = "n=" + std::to_string(n) + " y0=" + std::to_string(y0) +
                     " x=" + std::to_string(x) + " order=" + std::to_string(order);
            break;
          }
        }
    }
  }
  v.report("moment recursion matches exhaustive path sums", ok, detail);
}

void verify_distribution(VerifyState& v) {
  bool ok = true;
  std::string detail;
  for (int n = 1; n <= 20 && ok; ++n) {
    for (int y0 = n % 2; y0 <= std::min(n, 6); y0 += 2) {
      const auto slices = evolve_distribution({n, y0, WeightModel::standard()});
      MomentTable table(n, y0, 2);
      for (const auto& s : slices) {
        Rational total(0), first(0), second(0);
        for (const auto& [y, p] : s.probs) {
          total += p;
          first += p * Rational(y);
          second += p * Rational(y * y);
        }
        if (total != 1 || first != table(s.x, 1) || second != table(s.x, 2)) {
          ok = false;
          detail = "n=" + std::to_string(n) + " y0=" + std::to_string(y0) +
                   " x=" + std::to_string(s.x);
          break;
        }
      }
      if (!ok) break;
    }
  }
  v.report("distribution slices normalize and reproduce moments", ok, detail);
}

void verify_lemma(VerifyState& v) {
  bool ok = true;
  std::string detail;
  Rng rng(12345);
  for (int trial = 0; trial < 20 && ok; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(std::uint64_t(6)));
    std::vector<double> pts(n);
    for (auto& x : pts) x = 0.05 + 0.9 * rng.uniform();
    std::sort(pts.begin(), pts.end());
    bool distinct = true;
    for (int i = 1; i < n; ++i)
      if (pts[i] - pts[i - 1] < 1e-3) distinct = false;
    if (!distinct) continue;
    const auto a = covariance_matrix_analysis(pts);
    const double rel = std::abs(a.lemma_det - a.direct_det) / std::abs(a.direct_det);
    if (rel > 1e-10 || a.max_identity_residual > 1e-10 || a.min_eigenvalue <= 0.0) {
      ok = false;
      detail = "trial " + std::to_string(trial);
    }
  }
  v.report("covariance-matrix determinant/inverse recurrences", ok, detail);
}

void verify_ode(VerifyState& v) {
  bool ok = true;
  for (int i = 1; i <= 99; ++i) {
    const double x = i / 100.0;
    const double h = x * (1.0 - x);
    if (std::abs(ode_residual(h, 1.0 - 2.0 * x, -2.0)) > 1e-12) ok = false;
  }
  v.report("extremal trajectory satisfies the Euler-Lagrange ODE", ok);
}

int run_verify(int max_n, std::ostream& out) {
  VerifyState v{out};
  verify_enumeration(v, max_n);
  verify_sampler(v);
  verify_closed_forms(v, max_n);
  verify_brute_force(v, max_n);
  verify_distribution(v);
  verify_lemma(v);
  verify_ode(v);
  out << (v.failures == 0 ? "verify: all checks passed\n"
                          : "verify: " + std::to_string(v.failures) + " check(s) failed\n");
  return v.failures == 0 ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Uniform sampling and exact analysis of the oscillating-tableau area walk"};
  app.require_subcommand(1);

  std::string shape_text;
  std::string weights_text = "standard";
  std::string format = "json";
  std::string grid_text;
  std::string config_path;
  int length = 0, n = 2, y0 = 0, order = 2, x1 = 0, x2 = 1, bound = kDefaultEnumerationBound;
  int count_samples = 1, max_n = 10;
  std::uint64_t seed = 0;
  bool serial = false;
  std::function<int()> action;

  auto* sample_cmd = app.add_subcommand("sample", "Sample tableaux uniformly");
  sample_cmd->add_option("--shape", shape_text, "Comma-separated parts; empty for the empty shape");
  sample_cmd->add_option("--length", length, "Number of steps")->required();
  sample_cmd->add_option("--seed", seed, "RNG seed");
  sample_cmd->add_option("--count", count_samples, "Number of tableaux to emit");
  sample_cmd->callback([&] {
    action = [&]() {
      const Partition shape = parse_partition(shape_text);
      if (count_samples == 1) {
        out << to_json(sample_uniform(shape, length, seed)).dump() << "\n";
      } else {
        json arr = json::array();
        for (int i = 0; i < count_samples; ++i) {
          Rng rng(derive_stream_seed(seed, static_cast<std::uint64_t>(i)));
          arr.push_back(to_json(sample_uniform(shape, length, rng)));
        }
        out << arr.dump() << "\n";
      }
      return 0;
    };
  });

  auto* enum_cmd = app.add_subcommand("enumerate", "List all tableaux of a shape and length");
  enum_cmd->add_option("--shape", shape_text, "Comma-separated parts");
  enum_cmd->add_option("--length", length, "Number of steps")->required();
  enum_cmd->add_option("--bound", bound, "Brute-force length bound");
  enum_cmd->callback([&] {
    action = [&]() {
      json arr = json::array();
      for (const auto& t : enumerate_all(parse_partition(shape_text), length, bound))
        arr.push_back(to_json(t));
      out << arr.dump() << "\n";
      return 0;
    };
  });

  auto* count_cmd = app.add_subcommand("count", "Count tableaux of a shape and length");
  count_cmd->add_option("--shape", shape_text, "Comma-separated parts");
  count_cmd->add_option("--length", length, "Number of steps")->required();
  count_cmd->callback([&] {
    action = [&]() {
      out << count_formula(parse_partition(shape_text), length).get_str() << "\n";
      return 0;
    };
  });

  auto* sim_cmd = app.add_subcommand("simulate", "Simulate one walk trajectory");
  sim_cmd->add_option("--n", n, "Walk length")->required();
  sim_cmd->add_option("--y0", y0, "Starting height");
  sim_cmd->add_option("--seed", seed, "RNG seed");
  sim_cmd->add_option("--weights", weights_text, "standard | power:K | q:Q");
  sim_cmd->add_option("--format", format, "json | csv");
  sim_cmd->callback([&] {
    action = [&]() {
      const WalkPath path = simulate({n, y0, parse_weights(weights_text)}, seed);
      if (format == "csv") {
        out << "x,height\n";
        for (std::size_t x = 0; x < path.heights.size(); ++x)
          out << x << ',' << path.heights[x] << "\n";
      } else {
        out << to_json(path).dump() << "\n";
      }
      return 0;
    };
  });

  auto* dist_cmd = app.add_subcommand("distribution", "Exact marginal distribution per step");
  dist_cmd->add_option("--n", n, "Walk length")->required();
  dist_cmd->add_option("--y0", y0, "Starting height");
  dist_cmd->add_option("--format", format, "json | csv");
  dist_cmd->callback([&] {
    action = [&]() {
      const auto slices = evolve_distribution({n, y0, WeightModel::standard()});
      if (format == "csv") {
        out << "x,y,probability\n";
        for (const auto& s : slices)
          for (const auto& [y, p] : s.probs)
            out << s.x << ',' << y << ',' << to_fraction_string(p) << "\n";
      } else {
        json arr = json::array();
        for (const auto& s : slices) arr.push_back(to_json(s));
        out << arr.dump() << "\n";
      }
      return 0;
    };
  });

  auto* mom_cmd = app.add_subcommand("moments", "Exact moment table (CSV)");
  mom_cmd->add_option("--n", n, "Walk length")->required();
  mom_cmd->add_option("--y0", y0, "Starting height");
  mom_cmd->add_option("--order", order, "Highest moment order");
  mom_cmd->callback([&] {
    action = [&]() {
      write_moment_table_csv(out, MomentTable(n, y0, order));
      return 0;
    };
  });

  auto* cov_cmd = app.add_subcommand("covariance", "Exact covariance of two heights");
  cov_cmd->add_option("--n", n, "Walk length")->required();
  cov_cmd->add_option("--y0", y0, "Starting height");
  cov_cmd->add_option("--x1", x1, "First point")->required();
  cov_cmd->add_option("--x2", x2, "Second point")->required();
  cov_cmd->callback([&] {
    action = [&]() {
      const Rational c = covariance(n, y0, x1, x2);
      out << json{{"n", n}, {"y0", y0}, {"x1", x1}, {"x2", x2},
                  {"covariance", to_fraction_string(c)}, {"value", to_double(c)}}
                 .dump()
          << "\n";
      return 0;
    };
  });

  auto* vol_cmd = app.add_subcommand("volume", "Exact volume mean/variance");
  vol_cmd->add_option("--n", n, "Walk length")->required();
  vol_cmd->add_option("--y0", y0, "Starting height");
  vol_cmd->callback([&] {
    action = [&]() {
      json j{{"n", n}, {"y0", y0}, {"mean", to_fraction_string(volume_mean(n, y0))}};
      if (n >= 4) j["variance"] = to_fraction_string(volume_variance(n, y0));
      out << j.dump() << "\n";
      return 0;
    };
  });

  auto* limit_cmd = app.add_subcommand("limit", "Continuum kernel and matrix analysis on a grid");
  limit_cmd->add_option("--grid", grid_text, "Comma-separated points in (0,1)")->required();
  limit_cmd->add_option("--format", format, "json | csv");
  limit_cmd->callback([&] {
    action = [&]() {
      const auto pts = parse_grid(grid_text);
      const auto analysis = covariance_matrix_analysis(pts);
      if (format == "csv") {
        out << "x,mean_curve,variance\n";
        for (double x : pts)
          out << x << ',' << mean_curve(x, 0.0) << ',' << fluctuation_variance(x, 0.0) << "\n";
        out << "\nx1,x2,kernel\n";
        for (double a : pts)
          for (double b : pts) out << a << ',' << b << ',' << covariance_kernel(a, b) << "\n";
      } else {
        json matrix = json::array();
        json inverse = json::array();
        for (int i = 0; i < analysis.matrix.rows(); ++i) {
          json row = json::array(), irow = json::array();
          for (int j = 0; j < analysis.matrix.cols(); ++j) {
            row.push_back(analysis.matrix(i, j));
            irow.push_back(analysis.lemma_inverse(i, j));
          }
          matrix.push_back(std::move(row));
          inverse.push_back(std::move(irow));
        }
        json curve = json::array(), variance = json::array();
        for (double x : pts) {
          curve.push_back(mean_curve(x, 0.0));
          variance.push_back(fluctuation_variance(x, 0.0));
        }
        out << json{{"points", pts},
                    {"mean_curve", std::move(curve)},
                    {"variance", std::move(variance)},
                    {"kernel_matrix", std::move(matrix)},
                    {"lemma_inverse", std::move(inverse)},
                    {"lemma_det", analysis.lemma_det},
                    {"direct_det", analysis.direct_det},
                    {"min_eigenvalue", analysis.min_eigenvalue},
                    {"max_identity_residual", analysis.max_identity_residual}}
                   .dump()
            << "\n";
      }
      return 0;
    };
  });

  auto* verify_cmd = app.add_subcommand("verify", "Run the exact-oracle verification suite");
  verify_cmd->add_option("--max-n", max_n, "Brute-force bound for the path oracle");
  verify_cmd->callback([&] {
    action = [&]() { return run_verify(max_n, out); };
  });

  auto* camp_cmd = app.add_subcommand("campaign", "Run a Monte Carlo campaign from a config file");
  camp_cmd->add_option("--config", config_path, "Flat key=value config file")->required();
  camp_cmd->add_flag("--serial", serial, "Disable the parallel kernel");
  camp_cmd->add_option("--format", format, "json | csv");
  camp_cmd->callback([&] {
    action = [&]() {
      std::ifstream in(config_path);
      if (!in) throw std::invalid_argument("campaign: cannot open '" + config_path + "'");
      const Campaign campaign = parse_campaign_config(in);
      const auto report = run_campaign(campaign, serial ? ExecMode::Serial : ExecMode::Parallel);
      if (format == "csv")
        write_report_csv(out, report);
      else
        out << to_json(report).dump() << "\n";
      return 0;
    };
  });

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("oscwalk");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    return action ? action() : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace oscwalk
