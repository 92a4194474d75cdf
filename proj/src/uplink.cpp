#include "dude/uplink.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "dude/metrics.hpp"
#include "dude/units.hpp"

namespace dude {

namespace {

// Shared SINR core: everything already linear, fading rows valid for the
// UEs named in active_ue.
double sinr_linear(int ue, int serving_bs, std::span<const int> active_ue,
                   std::span<const double> tx_power_mw, const Grid& fading,
                   const Grid& gain_linear, double noise_mw) {
  const auto u = static_cast<std::size_t>(ue);
  const auto s = static_cast<std::size_t>(serving_bs);
  const double signal = tx_power_mw[u] * fading(u, s) * gain_linear(u, s);
  double interference = 0.0;
  for (std::size_t bs = 0; bs < active_ue.size(); ++bs) {
    if (static_cast<int>(bs) == serving_bs) continue;
    const int other = active_ue[bs];
    if (other < 0) continue;
    const auto o = static_cast<std::size_t>(other);
    interference += tx_power_mw[o] * fading(o, s) * gain_linear(o, s);
  }
  return signal / (noise_mw + interference);
}

Grid linear_gain_grid(const LinkState& links) {
  const std::size_t n_ue = links.coupling_loss_db.ue_count();
  const std::size_t n_bs = links.coupling_loss_db.bs_count();
  Grid gain(n_ue, n_bs);
  for (std::size_t ue = 0; ue < n_ue; ++ue) {
    for (std::size_t bs = 0; bs < n_bs; ++bs) {
      gain(ue, bs) = db_to_linear(-links.coupling_loss_db(ue, bs));
    }
  }
  return gain;
}

Deployment with_small_bias(const Deployment& deployment, double bias_db) {
  Deployment biased = deployment;
  for (auto& bs : biased.bs) {
    bs.bias_db = bs.tier == Tier::small ? bias_db : 0.0;
  }
  return biased;
}

void fill_active_fading(UplinkSlotState& slot, RngKey drop_key,
                        std::int64_t slot_index, std::size_t n_bs) {
  for (std::size_t bs = 0; bs < n_bs; ++bs) {
    const int ue = slot.active_ue[bs];
    if (ue < 0) continue;
    const auto u = static_cast<std::size_t>(ue);
    for (std::size_t other = 0; other < n_bs; ++other) {
      slot.fading(u, other) = fading_gain(drop_key, slot_index, u, other, n_bs);
    }
  }
}

CaseResult evaluate_case(const NetworkConfig& config,
                         const Deployment& deployment, const LinkState& links,
                         const Grid& gain, double noise_mw, RngKey drop_key,
                         const PolicyCase& policy_case, bool keep_trace) {
  const std::size_t n_ue = deployment.ues.size();
  const std::size_t n_bs = deployment.bs.size();

  CaseResult result;
  result.definition = policy_case;
  result.assoc.policy = policy_case.policy;
  const Deployment biased = with_small_bias(deployment,
                                            policy_case.dl_small_bias_db);
  result.assoc.dl_cell = associate_dl(biased, links);
  result.assoc.ul_cell = associate_ul(policy_case.policy, deployment, links,
                                      result.assoc.dl_cell);

  const auto attached = group_ues_by_cell(result.assoc.ul_cell, n_bs);

  result.per_ue.resize(n_ue);
  result.serving_loss_db.resize(n_ue);
  std::vector<double> tx_power_mw(n_ue);
  std::vector<double> log2_sum(n_ue, 0.0);
  UplinkSlotState slot;
  slot.active_ue.assign(n_bs, -1);
  slot.tx_power_dbm.resize(n_ue);
  slot.fading = Grid(n_ue, n_bs);

  for (std::size_t ue = 0; ue < n_ue; ++ue) {
    const auto cell = static_cast<std::size_t>(result.assoc.ul_cell[ue]);
    const double loss = links.coupling_loss_db(ue, cell);
    const double power = transmit_power_dbm(loss, config);
    result.serving_loss_db[ue] = loss;
    result.per_ue[ue].tx_power_dbm = power;
    slot.tx_power_dbm[ue] = power;
    tx_power_mw[ue] = dbm_to_mw(power);
  }

  if (keep_trace) result.trace = CaseTrace{config.slots_per_drop, {}};

  const auto record = [&](int ue, double sinr) {
    const auto u = static_cast<std::size_t>(ue);
    result.per_ue[u].sinr_db_series.push_back(linear_to_db(sinr));
    log2_sum[u] += std::log2(1.0 + sinr);
  };

  const auto evaluate_slot = [&](std::int64_t slot_index, bool completion) {
    fill_active_fading(slot, drop_key, slot_index, n_bs);
    for (std::size_t bs = 0; bs < n_bs; ++bs) {
      const int ue = slot.active_ue[bs];
      if (ue < 0) continue;
      // Completion slots only record UEs that still lack a sample; already
      // served UEs picked as filler contribute interference only.
      if (completion &&
          !result.per_ue[static_cast<std::size_t>(ue)].sinr_db_series.empty()) {
        continue;
      }
      const double sinr =
          sinr_linear(ue, static_cast<int>(bs), slot.active_ue, tx_power_mw,
                      slot.fading, gain, noise_mw);
      record(ue, sinr);
    }
    if (result.trace) result.trace->slots.push_back(slot);
  };

  const RngKey schedule_key = drop_key.child(stream_tag::schedule);
  for (std::int64_t s = 0; s < config.slots_per_drop; ++s) {
    slot.active_ue =
        schedule_slot(attached, schedule_key.child(static_cast<std::uint64_t>(s)));
    evaluate_slot(s, false);
  }

  // Completion pass: every still-unserved UE gets exactly one slot, in
  // ascending UE order per cell; cells that finished early transmit filler
  // traffic so the interference field stays fully loaded.
  std::vector<std::vector<int>> unserved(n_bs);
  std::size_t passes = 0;
  for (std::size_t bs = 0; bs < n_bs; ++bs) {
    for (int ue : attached[bs]) {
      if (result.per_ue[static_cast<std::size_t>(ue)].sinr_db_series.empty()) {
        unserved[bs].push_back(ue);
      }
    }
    passes = std::max(passes, unserved[bs].size());
  }
  const RngKey filler_key = drop_key.child(stream_tag::filler);
  for (std::size_t pass = 0; pass < passes; ++pass) {
    for (std::size_t bs = 0; bs < n_bs; ++bs) {
      if (pass < unserved[bs].size()) {
        slot.active_ue[bs] = unserved[bs][pass];
      } else if (!attached[bs].empty()) {
        RngStream rng = filler_key.child(pass).child(bs).stream();
        slot.active_ue[bs] = attached[bs][rng.next_below(
            static_cast<std::uint32_t>(attached[bs].size()))];
      } else {
        slot.active_ue[bs] = -1;
      }
    }
    evaluate_slot(config.slots_per_drop + static_cast<std::int64_t>(pass), true);
  }

  for (std::size_t ue = 0; ue < n_ue; ++ue) {
    auto& metrics = result.per_ue[ue];
    const auto n = metrics.sinr_db_series.size();
    const auto cell = static_cast<std::size_t>(result.assoc.ul_cell[ue]);
    const double load = static_cast<double>(attached[cell].size());
    metrics.mean_rate_bps = (config.bandwidth_hz / load) *
                            (log2_sum[ue] / static_cast<double>(n));
    metrics.sinr_std_db = population_std(metrics.sinr_db_series);
  }

  result.load_dl = load_by_cell(result.assoc, deployment, Direction::dl);
  result.load_ul = load_by_cell(result.assoc, deployment, Direction::ul);
  result.decoupling = decoupling_fraction(result.assoc);
  return result;
}

}  // namespace

std::string case_name(UlPolicy policy, double dl_small_bias_db) {
  if (policy == UlPolicy::decoupled) {
    if (dl_small_bias_db == 0.0) return "decoupled";
    char buf[48];
    std::snprintf(buf, sizeof(buf), "decoupled-bias%g", dl_small_bias_db);
    return buf;
  }
  char buf[48];
  std::snprintf(buf, sizeof(buf), "coupled-bias%g", dl_small_bias_db);
  return buf;
}

PolicyCase make_case(UlPolicy policy, double dl_small_bias_db) {
  return {case_name(policy, dl_small_bias_db), policy, dl_small_bias_db};
}

double transmit_power_dbm(double serving_coupling_loss_db,
                          const NetworkConfig& config) {
  return std::min(config.ue_max_power_dbm,
                  config.pc_p0_dbm + config.pc_alpha * serving_coupling_loss_db);
}

double noise_power_mw(const NetworkConfig& config) {
  const double noise_dbm = -174.0 +
                           10.0 * std::log10(block_bandwidth_hz(config)) +
                           config.noise_figure_db;
  return dbm_to_mw(noise_dbm);
}

std::vector<int> schedule_slot(const std::vector<std::vector<int>>& attached,
                               RngKey slot_key) {
  std::vector<int> active(attached.size(), -1);
  for (std::size_t bs = 0; bs < attached.size(); ++bs) {
    const auto count = attached[bs].size();
    if (count == 0) continue;
    RngStream rng = slot_key.child(bs).stream();
    active[bs] = attached[bs][rng.next_below(static_cast<std::uint32_t>(count))];
  }
  return active;
}

double uplink_sinr(int ue, int serving_bs, const UplinkSlotState& slot,
                   const LinkState& links, const NetworkConfig& config) {
  std::vector<double> tx_power_mw(slot.tx_power_dbm.size());
  for (std::size_t i = 0; i < tx_power_mw.size(); ++i) {
    tx_power_mw[i] = dbm_to_mw(slot.tx_power_dbm[i]);
  }
  const Grid gain = linear_gain_grid(links);
  return sinr_linear(ue, serving_bs, slot.active_ue, tx_power_mw, slot.fading,
                     gain, noise_power_mw(config));
}

double uplink_rate_bps(std::span<const double> sinr_linear_series,
                       std::int64_t cell_load, const NetworkConfig& config) {
  if (sinr_linear_series.empty()) {
    throw NoActiveSlotsError("rate undefined: UE has no scheduled slots");
  }
  if (cell_load < 1) {
    throw std::invalid_argument("cell_load must be >= 1");
  }
  double sum = 0.0;
  for (double s : sinr_linear_series) sum += std::log2(1.0 + s);
  return (config.bandwidth_hz / static_cast<double>(cell_load)) *
         (sum / static_cast<double>(sinr_linear_series.size()));
}

std::vector<CaseResult> evaluate_cases(const NetworkConfig& config,
                                       const Deployment& deployment,
                                       const LinkState& links, RngKey drop_key,
                                       std::span<const PolicyCase> cases,
                                       bool keep_trace) {
  const Grid gain = linear_gain_grid(links);
  const double noise_mw = noise_power_mw(config);
  std::vector<CaseResult> results;
  results.reserve(cases.size());
  for (const auto& policy_case : cases) {
    results.push_back(evaluate_case(config, deployment, links, gain, noise_mw,
                                    drop_key, policy_case, keep_trace));
  }
  return results;
}

DropResult run_drop(const NetworkConfig& config, std::uint64_t drop_index,
                    std::span<const PolicyCase> cases, bool keep_trace) {
  validate(config);
  DropResult out;
  out.deployment = sample_deployment(config, drop_index);
  const RngKey drop_key = RngKey(config.master_seed).child(drop_index);
  out.links = build_link_state(out.deployment, config, drop_key);
  out.cases =
      evaluate_cases(config, out.deployment, out.links, drop_key, cases,
                     keep_trace);
  return out;
}

DropResult run_drop(const NetworkConfig& config, std::uint64_t drop_index) {
  const auto cases = default_cases(config);
  return run_drop(config, drop_index, cases);
}

std::vector<PolicyCase> default_cases(const NetworkConfig& config) {
  std::vector<PolicyCase> cases;
  cases.push_back(make_case(UlPolicy::coupled, config.small_bias_db));
  if (config.ul_policy == UlPolicy::decoupled) {
    const double dl_bias =
        config.decoupled_dl_uses_bias ? config.small_bias_db : 0.0;
    cases.push_back(make_case(UlPolicy::decoupled, dl_bias));
  }
  return cases;
}

}  // namespace dude
