#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "dude/config.hpp"
#include "dude/geometry.hpp"

namespace dude {

enum class Tier { macro, small };

struct BaseStation {
  Point position;
  Tier tier = Tier::macro;
  double tx_power_dbm = 0.0;
  double bias_db = 0.0;

  bool operator==(const BaseStation&) const = default;
};

// One sampled realization of BS and UE positions on the torus.
struct Deployment {
  double window_side = 0.0;
  std::vector<BaseStation> bs;
  std::vector<Point> ues;

  bool operator==(const Deployment&) const = default;
};

struct EmptyNetworkError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Poisson BS counts per tier, uniform positions; deterministic UE count
// round(ue_density * area), uniform positions. Resamples an all-empty BS
// field up to 100 times, then throws EmptyNetworkError. Deterministic in
// (config, drop_index).
Deployment sample_deployment(const NetworkConfig& config,
                             std::uint64_t drop_index);

}  // namespace dude
