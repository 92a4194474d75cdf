// Times the serial reference path against the OpenMP drop kernel on a
// mid-size scenario and checks they serialize identically.

#include <chrono>
#include <iostream>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "dude/report.hpp"
#include "dude/scenario.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

double run_ms(const dude::NetworkConfig& cfg,
              std::span<const dude::PolicyCase> cases, int workers,
              std::string& json_out) {
  const auto t0 = clock_type::now();
  const auto report = workers == 0 ? dude::run_scenario_serial(cfg, cases)
                                   : dude::run_scenario(cfg, cases, workers);
  const auto t1 = clock_type::now();
  json_out = dude::report_json(dude::summarize(report));
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main() {
  dude::NetworkConfig cfg;
  cfg.window_side = 1500.0;  // ~11 macros, ~45 smalls, ~743 UEs
  cfg.num_drops = 24;
  const auto cases = dude::default_cases(cfg);

  int max_threads = 1;
#ifdef _OPENMP
  max_threads = omp_get_max_threads();
#endif

  std::string reference;
  const double serial_ms = run_ms(cfg, cases, 0, reference);
  std::cout << "drops " << cfg.num_drops << ", UEs " << dude::ue_count(cfg)
            << ", cases " << cases.size() << "\n";
  std::cout << "serial reference: " << serial_ms << " ms\n";

  std::vector<int> counts{1, 2, 4};
  if (max_threads > 4) counts.push_back(max_threads);
  for (int workers : counts) {
    std::string json;
    const double ms = run_ms(cfg, cases, workers, json);
    const bool identical = json == reference;
    std::cout << "omp workers " << workers << ": " << ms << " ms, speedup "
              << serial_ms / ms << (identical ? "" : "  << MISMATCH") << "\n";
    if (!identical) return 1;
  }
  std::cout << "all worker counts match the serial reference\n";
  return 0;
}
