#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "dude/config.hpp"
#include "dude/uplink.hpp"

namespace dude {

inline constexpr char kVersion[] = "0.1.0";

inline constexpr std::array<double, 5> kReportProbs{0.05, 0.25, 0.50, 0.75,
                                                    0.95};

struct MetricStats {
  std::uint64_t count = 0;
  double mean = 0.0;
  double min = 0.0;
  double max = 0.0;
  std::array<double, 5> pct{};  // at kReportProbs

  bool operator==(const MetricStats&) const = default;
};

MetricStats metric_stats(std::span<const double> samples);

struct TierLoadStats {
  double dl_macro = 0.0;
  double dl_small = 0.0;
  double ul_macro = 0.0;
  double ul_small = 0.0;
  std::uint64_t macro_drops = 0;  // drops with at least one BS in the tier
  std::uint64_t small_drops = 0;

  bool operator==(const TierLoadStats&) const = default;
};

// Pooled per-case samples across drops, appended in drop order so entries
// stay aligned UE-by-UE across cases.
struct CaseAggregate {
  PolicyCase definition;
  std::vector<double> tx_power_dbm;     // one per UE per drop
  std::vector<double> sinr_db;          // one per recorded slot
  std::vector<double> sinr_std_db;      // one per UE per drop
  std::vector<double> rate_bps;         // one per UE per drop
  std::vector<double> serving_loss_db;  // one per UE per drop
  double decoupling_sum = 0.0;
  double dl_macro_sum = 0.0;
  double dl_small_sum = 0.0;
  double ul_macro_sum = 0.0;
  double ul_small_sum = 0.0;
  std::uint64_t macro_drop_count = 0;
  std::uint64_t small_drop_count = 0;
  std::uint64_t drops = 0;

  void absorb(const CaseResult& result);
  TierLoadStats load_stats() const;
  double decoupling_mean() const;
};

struct ScenarioReport {
  std::string version;
  NetworkConfig config;
  std::vector<CaseAggregate> cases;
};

struct GainEntry {
  std::string test;
  std::string baseline;
  double rate_gain_percent_p05 = 0.0;
  double rate_gain_percent_p50 = 0.0;
  double tx_power_reduction_db_p50 = 0.0;  // baseline pct - test pct
  double tx_power_reduction_db_p95 = 0.0;

  bool operator==(const GainEntry&) const = default;
};

struct CaseSummary {
  std::string name;
  std::string policy;
  double dl_small_bias_db = 0.0;
  MetricStats tx_power_dbm;
  MetricStats sinr_db;
  MetricStats sinr_std_db;
  MetricStats rate_bps;
  MetricStats serving_loss_db;
  double decoupling_fraction = 0.0;
  TierLoadStats loads;

  bool operator==(const CaseSummary&) const = default;
};

// Everything that lands in report.json.
struct ReportSummary {
  std::string version;
  std::uint64_t seed = 0;
  NetworkConfig config;
  std::vector<CaseSummary> cases;
  std::vector<GainEntry> gains;  // every ordered pair (test after baseline)

  bool operator==(const ReportSummary&) const = default;
};

ReportSummary summarize(const ScenarioReport& report);

// Deterministic layout, all floating point with 17 significant digits.
std::string report_json(const ReportSummary& summary);
ReportSummary report_from_json_text(const std::string& text);

// report.json, cdf_<metric>_<case>.csv and gains.csv under out_dir.
// scenario_label names the gains.csv rows.
void write_report_files(const ScenarioReport& report, const std::string& out_dir,
                        const std::string& scenario_label);

std::string format_double(double v);  // %.17g

// "value,cum_prob" rows; at most max_points subsampled ECDF points.
void write_cdf_csv(std::span<const double> samples, const std::string& path,
                   std::size_t max_points = 2001);

}  // namespace dude
