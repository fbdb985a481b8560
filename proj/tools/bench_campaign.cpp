// Times the campaign kernel in serial and OpenMP modes on the same workload
// and checks that both produce identical reports.

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "oscwalk/stats.hpp"

using namespace oscwalk;

namespace {

double run_timed(const Campaign& campaign, ExecMode mode, EstimateReport& report) {
  const auto t0 = std::chrono::steady_clock::now();
  report = run_campaign(campaign, mode);
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

bool reports_equal(const EstimateReport& a, const EstimateReport& b) {
  if (a.estimates.size() != b.estimates.size()) return false;
  for (std::size_t i = 0; i < a.estimates.size(); ++i) {
    const auto& x = a.estimates[i];
    const auto& y = b.estimates[i];
    if (x.mean != y.mean || x.variance != y.variance || !(x.histogram == y.histogram))
      return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  Campaign campaign;
  campaign.cfg = {5000, 0, WeightModel::standard()};
  campaign.samples = argc > 1 ? std::atol(argv[1]) : 5000;
  campaign.seed = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 2024;
  campaign.observables = {ObservableSpec::scaled_fluctuation_at(2500),
                          ObservableSpec::scaled_volume()};

  EstimateReport serial_report, parallel_report;
  const double t_serial = run_timed(campaign, ExecMode::Serial, serial_report);
  const double t_parallel = run_timed(campaign, ExecMode::Parallel, parallel_report);

  std::cout << "samples        " << campaign.samples << "\n"
            << "serial     [s] " << t_serial << "\n"
            << "parallel   [s] " << t_parallel << "\n"
            << "speedup        " << t_serial / t_parallel << "\n";

  if (!reports_equal(serial_report, parallel_report)) {
    std::cout << "MISMATCH: serial and parallel reports differ\n";
    return 1;
  }
  std::cout << "reports identical\n";
  return 0;
}
