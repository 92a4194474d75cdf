#include "dude/scenario.hpp"

#include <exception>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dude {

namespace {

ScenarioReport make_report(const NetworkConfig& config,
                           std::span<const PolicyCase> cases) {
  validate(config);
  if (ue_count(config) < 1) {
    throw ValidationError(
        "invalid config: field 'ue_density' yields zero UEs on this window");
  }
  if (cases.empty()) {
    throw ValidationError("run_scenario: no policy cases requested");
  }
  ScenarioReport report;
  report.version = kVersion;
  report.config = config;
  report.cases.resize(cases.size());
  const auto reserve = static_cast<std::size_t>(config.num_drops) *
                       static_cast<std::size_t>(ue_count(config));
  for (std::size_t c = 0; c < cases.size(); ++c) {
    report.cases[c].definition = cases[c];
    report.cases[c].tx_power_dbm.reserve(reserve);
    report.cases[c].sinr_std_db.reserve(reserve);
    report.cases[c].rate_bps.reserve(reserve);
    report.cases[c].serving_loss_db.reserve(reserve);
  }
  return report;
}

void merge_drop(ScenarioReport& report, std::vector<CaseResult>&& results) {
  for (std::size_t c = 0; c < results.size(); ++c) {
    report.cases[c].absorb(results[c]);
  }
}

}  // namespace

std::vector<std::string> preset_names() {
  return {"pico-bias0", "pico-bias6", "femto-bias0", "femto-bias8",
          "fig1-cases"};
}

ScenarioPreset preset_by_name(const std::string& name,
                              const NetworkConfig& config) {
  const auto decoupled_case = [&config](double baseline_bias) {
    return make_case(UlPolicy::decoupled,
                     config.decoupled_dl_uses_bias ? baseline_bias : 0.0);
  };
  if (name == "pico-bias0") {
    return {name, 30.0,
            {make_case(UlPolicy::coupled, 0.0), decoupled_case(0.0)}};
  }
  if (name == "pico-bias6") {
    return {name, 30.0,
            {make_case(UlPolicy::coupled, 6.0), decoupled_case(6.0)}};
  }
  if (name == "femto-bias0") {
    return {name, 20.0,
            {make_case(UlPolicy::coupled, 0.0), decoupled_case(0.0)}};
  }
  if (name == "femto-bias8") {
    return {name, 20.0,
            {make_case(UlPolicy::coupled, 8.0), decoupled_case(8.0)}};
  }
  if (name == "fig1-cases") {
    return {name, 30.0,
            {make_case(UlPolicy::coupled, 0.0),
             make_case(UlPolicy::coupled, 6.0), decoupled_case(6.0)}};
  }
  throw ValidationError("unknown preset '" + name + "'");
}

ScenarioReport run_scenario_serial(const NetworkConfig& config,
                                   std::span<const PolicyCase> cases) {
  ScenarioReport report = make_report(config, cases);
  for (std::int64_t drop = 0; drop < config.num_drops; ++drop) {
    merge_drop(report,
               std::move(run_drop(config, static_cast<std::uint64_t>(drop),
                                  cases)
                             .cases));
  }
  return report;
}

ScenarioReport run_scenario(const NetworkConfig& config,
                            std::span<const PolicyCase> cases, int workers) {
  if (workers == 1) return run_scenario_serial(config, cases);
#ifndef _OPENMP
  return run_scenario_serial(config, cases);
#else
  ScenarioReport report = make_report(config, cases);
  const int threads = workers > 0 ? workers : omp_get_max_threads();
  const std::int64_t drops = config.num_drops;
  std::vector<std::vector<CaseResult>> per_drop(
      static_cast<std::size_t>(drops));
  std::exception_ptr failure = nullptr;

#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::int64_t drop = 0; drop < drops; ++drop) {
    try {
      per_drop[static_cast<std::size_t>(drop)] =
          std::move(run_drop(config, static_cast<std::uint64_t>(drop), cases)
                        .cases);
    } catch (...) {
#pragma omp critical
      {
        if (!failure) failure = std::current_exception();
      }
    }
  }
  if (failure) std::rethrow_exception(failure);

  // merge strictly in drop order so the pooled samples are identical for
  // every worker count
  for (auto& results : per_drop) {
    merge_drop(report, std::move(results));
  }
  return report;
#endif
}

ScenarioReport run_scenario(const NetworkConfig& config, int workers) {
  const auto cases = default_cases(config);
  return run_scenario(config, cases, workers);
}

ScenarioReport compare_policies(NetworkConfig config,
                                const ScenarioPreset& preset, int workers) {
  config.small_power_dbm = preset.small_power_dbm;
  return run_scenario(config, preset.cases, workers);
}

}  // namespace dude
