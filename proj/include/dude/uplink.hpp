#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "dude/association.hpp"
#include "dude/channel.hpp"
#include "dude/config.hpp"
#include "dude/deployment.hpp"
#include "dude/rng.hpp"

namespace dude {

// Co-channel state of one slot on the reference frequency block.
// fading rows are populated for the UEs active this slot; other rows are
// unspecified.
struct UplinkSlotState {
  std::vector<int> active_ue;        // per BS; -1 = no UL transmission
  std::vector<double> tx_power_dbm;  // per UE
  Grid fading;                       // [ue][bs], this slot
};

struct UplinkMetricsPerUE {
  std::vector<double> sinr_db_series;  // slots where the UE was recorded
  double mean_rate_bps = 0.0;
  double sinr_std_db = 0.0;
  double tx_power_dbm = 0.0;

  bool operator==(const UplinkMetricsPerUE&) const = default;
};

// One association/bias variant evaluated on a shared drop realization.
struct PolicyCase {
  std::string name;
  UlPolicy policy = UlPolicy::coupled;
  double dl_small_bias_db = 0.0;  // bias applied to the DL selection metric

  bool operator==(const PolicyCase&) const = default;
};

std::string case_name(UlPolicy policy, double dl_small_bias_db);
PolicyCase make_case(UlPolicy policy, double dl_small_bias_db);

// Slot-by-slot record for small instances (oracle replay); regular slots
// first, completion slots after.
struct CaseTrace {
  std::int64_t regular_slots = 0;
  std::vector<UplinkSlotState> slots;
};

struct CaseResult {
  PolicyCase definition;
  AssociationMap assoc;
  std::vector<UplinkMetricsPerUE> per_ue;
  std::vector<double> serving_loss_db;  // coupling loss to the UL cell
  CellLoad load_dl;
  CellLoad load_ul;
  double decoupling = 0.0;
  std::optional<CaseTrace> trace;
};

struct DropResult {
  Deployment deployment;
  LinkState links;
  std::vector<CaseResult> cases;
};

struct NoActiveSlotsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Fractional power control: min(max power, P0 + alpha * serving loss).
double transmit_power_dbm(double serving_coupling_loss_db,
                          const NetworkConfig& config);

// Thermal noise on one frequency block, mW.
double noise_power_mw(const NetworkConfig& config);

// Each cell with attached UEs picks one uniformly at random for the
// reference block; empty cells stay silent (-1).
std::vector<int> schedule_slot(const std::vector<std::vector<int>>& attached,
                               RngKey slot_key);

// Linear SINR of the active UE at its serving BS against every other
// cell's active transmission plus block noise.
double uplink_sinr(int ue, int serving_bs, const UplinkSlotState& slot,
                   const LinkState& links, const NetworkConfig& config);

// Equipartition rate: (bandwidth / cell_load) * mean log2(1 + SINR).
// Throws NoActiveSlotsError on an empty series.
double uplink_rate_bps(std::span<const double> sinr_linear_series,
                       std::int64_t cell_load, const NetworkConfig& config);

// Evaluates every case on an existing drop realization. drop_key must be
// the key the link state was built from so fading and scheduling draws
// come from that drop's substreams.
std::vector<CaseResult> evaluate_cases(const NetworkConfig& config,
                                       const Deployment& deployment,
                                       const LinkState& links, RngKey drop_key,
                                       std::span<const PolicyCase> cases,
                                       bool keep_trace = false);

// One Monte Carlo realization: a deployment plus link state sampled once,
// every requested case evaluated on that shared randomness. A completion
// pass guarantees each UE at least one recorded slot.
DropResult run_drop(const NetworkConfig& config, std::uint64_t drop_index,
                    std::span<const PolicyCase> cases, bool keep_trace = false);

// Default pair: coupled baseline at the configured bias plus the configured
// policy (deduplicated when they coincide).
DropResult run_drop(const NetworkConfig& config, std::uint64_t drop_index);

std::vector<PolicyCase> default_cases(const NetworkConfig& config);

}  // namespace dude
