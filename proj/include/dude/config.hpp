#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dude {

enum class UlPolicy { coupled, decoupled };

std::string to_string(UlPolicy policy);
UlPolicy ul_policy_from_string(const std::string& text);

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ParseError : ConfigError {
  using ConfigError::ConfigError;
};
struct ValidationError : ConfigError {
  using ConfigError::ConfigError;
};

// Full scenario parameterization. Distances in meters, densities per km^2,
// powers in dBm. Defaults reproduce the reference multi-tier scenario:
// 2 km x 2 km torus, 5 macro + 20 small cells and 330 UEs per km^2.
struct NetworkConfig {
  double window_side = 2000.0;  // square torus side, m
  double macro_density = 5.0;
  double small_density = 20.0;  // 4 small cells per macro cell
  double ue_density = 330.0;
  double macro_power_dbm = 46.0;
  double small_power_dbm = 30.0;  // 30 = picocell, 20 = femtocell
  double ue_max_power_dbm = 20.0;
  double small_bias_db = 0.0;  // DL selection bias, small tier only
  double pathloss_exponent = 3.5;
  double pathloss_intercept_db = 40.75;  // free-space loss at 1 m, 2.6 GHz
  double min_distance_m = 1.0;
  double shadowing_std_db = 8.0;
  double noise_figure_db = 5.0;
  double bandwidth_hz = 20e6;
  std::int64_t num_blocks = 100;  // frequency blocks sharing the band
  double pc_p0_dbm = -78.0;       // fractional power control target
  double pc_alpha = 0.8;          // fractional compensation in [0, 1]
  std::int64_t num_drops = 200;
  std::int64_t slots_per_drop = 50;
  std::uint64_t master_seed = 1;
  UlPolicy ul_policy = UlPolicy::decoupled;
  // Keep the small-cell DL bias active while the UL is decoupled. Off by
  // default: the decoupled UL choice never uses a bias, and its DL side is
  // plain max-RSRP unless this toggle is set.
  bool decoupled_dl_uses_bias = false;

  bool operator==(const NetworkConfig&) const = default;
};

// Throws ValidationError naming the offending field.
void validate(const NetworkConfig& config);

double area_km2(const NetworkConfig& config);
std::int64_t ue_count(const NetworkConfig& config);  // round(density * area)
double block_bandwidth_hz(const NetworkConfig& config);

// JSON object keyed by the snake_case field names; every key optional,
// unknown keys rejected. Empty input yields the defaults.
NetworkConfig config_from_json_text(const std::string& text);
std::string config_to_json_text(const NetworkConfig& config);
NetworkConfig load_config(const std::string& path);
void save_config(const NetworkConfig& config, const std::string& path);

// Assigns a numeric field by name (sweep support). Throws ValidationError
// for unknown or non-numeric fields.
void set_field(NetworkConfig& config, const std::string& name, double value);

}  // namespace dude
