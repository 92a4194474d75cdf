#pragma once

#include <span>
#include <string>
#include <vector>

#include "dude/config.hpp"
#include "dude/report.hpp"
#include "dude/uplink.hpp"

namespace dude {

// Named comparison setup: a small-cell power profile plus the cases run on
// shared randomness (baseline first).
struct ScenarioPreset {
  std::string name;
  double small_power_dbm = 30.0;
  std::vector<PolicyCase> cases;
};

std::vector<std::string> preset_names();
ScenarioPreset preset_by_name(const std::string& name,
                              const NetworkConfig& config);

// Executes num_drops independent drops and merges them in drop order.
// workers = 1 selects the serial reference path; workers <= 0 uses all
// available threads. Identical results for any worker count.
ScenarioReport run_scenario(const NetworkConfig& config,
                            std::span<const PolicyCase> cases, int workers = 0);
ScenarioReport run_scenario(const NetworkConfig& config, int workers = 0);

// Plain single-threaded loop, kept as the reference implementation the
// parallel path is checked against.
ScenarioReport run_scenario_serial(const NetworkConfig& config,
                                   std::span<const PolicyCase> cases);

// Applies the preset's small-cell power, then runs its cases on shared
// randomness.
ScenarioReport compare_policies(NetworkConfig config,
                                const ScenarioPreset& preset, int workers = 0);

}  // namespace dude
