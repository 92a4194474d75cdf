#include "dude/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "dude/metrics.hpp"

namespace dude {

namespace {

struct NamedMetric {
  const char* key;
  const std::vector<double> CaseAggregate::* samples;
  MetricStats CaseSummary::* stats;
};

const NamedMetric kMetrics[] = {
    {"ul_tx_power_dbm", &CaseAggregate::tx_power_dbm,
     &CaseSummary::tx_power_dbm},
    {"ul_sinr_db", &CaseAggregate::sinr_db, &CaseSummary::sinr_db},
    {"ul_sinr_std_db", &CaseAggregate::sinr_std_db, &CaseSummary::sinr_std_db},
    {"ul_rate_bps", &CaseAggregate::rate_bps, &CaseSummary::rate_bps},
    {"ul_serving_loss_db", &CaseAggregate::serving_loss_db,
     &CaseSummary::serving_loss_db},
};

// Metrics with one CDF file per case (the distribution outputs).
constexpr const char* kCdfMetrics[] = {"ul_tx_power_dbm", "ul_sinr_db",
                                       "ul_sinr_std_db", "ul_rate_bps"};

constexpr const char* kPctKeys[] = {"p05", "p25", "p50", "p75", "p95"};

class JsonWriter {
 public:
  std::string take() { return std::move(out_); }

  void begin_object() {
    separator();
    out_ += '{';
    push(true);
  }
  void end_object() {
    pop();
    out_ += '}';
  }
  void begin_array() {
    separator();
    out_ += '[';
    push(true);
  }
  void end_array() {
    pop();
    out_ += ']';
  }
  void key(const char* name) {
    separator();
    out_ += '"';
    out_ += name;
    out_ += "\": ";
    pending_value_ = true;
  }
  void value(double v) {
    separator();
    out_ += format_double(v);
  }
  void value(std::uint64_t v) {
    separator();
    out_ += std::to_string(v);
  }
  void value(const std::string& v) {
    separator();
    out_ += '"';
    out_ += v;  // names and enum labels only, never arbitrary text
    out_ += '"';
  }
  void raw(const std::string& text) {
    separator();
    out_ += text;
  }

 private:
  void push(bool fresh) {
    depth_ += 1;
    fresh_ = fresh;
  }
  void pop() {
    depth_ -= 1;
    newline();
  }
  void separator() {
    if (pending_value_) {
      pending_value_ = false;
      return;
    }
    if (!fresh_) out_ += ',';
    fresh_ = false;
    if (depth_ > 0) newline();
  }
  void newline() {
    out_ += '\n';
    out_.append(static_cast<std::size_t>(depth_) * 2, ' ');
  }

  std::string out_;
  int depth_ = 0;
  bool fresh_ = true;
  bool pending_value_ = false;
};

void write_metric_stats(JsonWriter& w, const MetricStats& s) {
  w.begin_object();
  w.key("count");
  w.value(s.count);
  w.key("mean");
  w.value(s.mean);
  w.key("min");
  w.value(s.min);
  w.key("max");
  w.value(s.max);
  for (std::size_t i = 0; i < s.pct.size(); ++i) {
    w.key(kPctKeys[i]);
    w.value(s.pct[i]);
  }
  w.end_object();
}

MetricStats metric_stats_from_json(const nlohmann::json& j) {
  MetricStats s;
  s.count = j.at("count").get<std::uint64_t>();
  s.mean = j.at("mean").get<double>();
  s.min = j.at("min").get<double>();
  s.max = j.at("max").get<double>();
  for (std::size_t i = 0; i < s.pct.size(); ++i) {
    s.pct[i] = j.at(kPctKeys[i]).get<double>();
  }
  return s;
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

MetricStats metric_stats(std::span<const double> samples) {
  MetricStats stats;
  if (samples.empty()) return stats;
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  stats.count = sorted.size();
  stats.mean = mean(sorted);
  stats.min = sorted.front();
  stats.max = sorted.back();
  for (std::size_t i = 0; i < kReportProbs.size(); ++i) {
    stats.pct[i] = percentile_sorted(sorted, kReportProbs[i]);
  }
  return stats;
}

void CaseAggregate::absorb(const CaseResult& result) {
  for (const auto& ue : result.per_ue) {
    tx_power_dbm.push_back(ue.tx_power_dbm);
    sinr_std_db.push_back(ue.sinr_std_db);
    rate_bps.push_back(ue.mean_rate_bps);
    sinr_db.insert(sinr_db.end(), ue.sinr_db_series.begin(),
                   ue.sinr_db_series.end());
  }
  serving_loss_db.insert(serving_loss_db.end(), result.serving_loss_db.begin(),
                         result.serving_loss_db.end());
  decoupling_sum += result.decoupling;
  if (result.load_ul.macro_cells > 0) {
    dl_macro_sum += result.load_dl.macro_mean;
    ul_macro_sum += result.load_ul.macro_mean;
    ++macro_drop_count;
  }
  if (result.load_ul.small_cells > 0) {
    dl_small_sum += result.load_dl.small_mean;
    ul_small_sum += result.load_ul.small_mean;
    ++small_drop_count;
  }
  ++drops;
}

TierLoadStats CaseAggregate::load_stats() const {
  TierLoadStats stats;
  stats.macro_drops = macro_drop_count;
  stats.small_drops = small_drop_count;
  if (macro_drop_count > 0) {
    stats.dl_macro = dl_macro_sum / static_cast<double>(macro_drop_count);
    stats.ul_macro = ul_macro_sum / static_cast<double>(macro_drop_count);
  }
  if (small_drop_count > 0) {
    stats.dl_small = dl_small_sum / static_cast<double>(small_drop_count);
    stats.ul_small = ul_small_sum / static_cast<double>(small_drop_count);
  }
  return stats;
}

double CaseAggregate::decoupling_mean() const {
  return drops == 0 ? 0.0 : decoupling_sum / static_cast<double>(drops);
}

ReportSummary summarize(const ScenarioReport& report) {
  ReportSummary summary;
  summary.version = report.version;
  summary.seed = report.config.master_seed;
  summary.config = report.config;
  summary.cases.reserve(report.cases.size());
  for (const auto& aggregate : report.cases) {
    CaseSummary cs;
    cs.name = aggregate.definition.name;
    cs.policy = to_string(aggregate.definition.policy);
    cs.dl_small_bias_db = aggregate.definition.dl_small_bias_db;
    for (const auto& metric : kMetrics) {
      cs.*(metric.stats) = metric_stats(aggregate.*(metric.samples));
    }
    cs.decoupling_fraction = aggregate.decoupling_mean();
    cs.loads = aggregate.load_stats();
    summary.cases.push_back(std::move(cs));
  }
  for (std::size_t test = 1; test < report.cases.size(); ++test) {
    for (std::size_t base = 0; base < test; ++base) {
      const auto& t = report.cases[test];
      const auto& b = report.cases[base];
      GainEntry gain;
      gain.test = t.definition.name;
      gain.baseline = b.definition.name;
      gain.rate_gain_percent_p05 =
          rate_gain_percent(t.rate_bps, b.rate_bps, 0.05);
      gain.rate_gain_percent_p50 =
          rate_gain_percent(t.rate_bps, b.rate_bps, 0.50);
      gain.tx_power_reduction_db_p50 = percentile(b.tx_power_dbm, 0.50) -
                                       percentile(t.tx_power_dbm, 0.50);
      gain.tx_power_reduction_db_p95 = percentile(b.tx_power_dbm, 0.95) -
                                       percentile(t.tx_power_dbm, 0.95);
      summary.gains.push_back(std::move(gain));
    }
  }
  return summary;
}

std::string report_json(const ReportSummary& summary) {
  JsonWriter w;
  w.begin_object();
  w.key("version");
  w.value(summary.version);
  w.key("seed");
  w.value(summary.seed);
  w.key("config");
  {
    // reuse the canonical config layout, re-indented
    std::istringstream cfg(config_to_json_text(summary.config));
    std::string line, block;
    while (std::getline(cfg, line)) {
      if (!block.empty()) block += "\n  ";
      block += line;
    }
    w.raw(block);
  }
  w.key("cases");
  w.begin_array();
  for (const auto& cs : summary.cases) {
    w.begin_object();
    w.key("name");
    w.value(cs.name);
    w.key("policy");
    w.value(cs.policy);
    w.key("dl_small_bias_db");
    w.value(cs.dl_small_bias_db);
    w.key("decoupling_fraction");
    w.value(cs.decoupling_fraction);
    w.key("mean_ues_per_cell");
    w.begin_object();
    w.key("dl_macro");
    w.value(cs.loads.dl_macro);
    w.key("dl_small");
    w.value(cs.loads.dl_small);
    w.key("ul_macro");
    w.value(cs.loads.ul_macro);
    w.key("ul_small");
    w.value(cs.loads.ul_small);
    w.key("macro_drops");
    w.value(cs.loads.macro_drops);
    w.key("small_drops");
    w.value(cs.loads.small_drops);
    w.end_object();
    w.key("metrics");
    w.begin_object();
    w.key("ul_tx_power_dbm");
    write_metric_stats(w, cs.tx_power_dbm);
    w.key("ul_sinr_db");
    write_metric_stats(w, cs.sinr_db);
    w.key("ul_sinr_std_db");
    write_metric_stats(w, cs.sinr_std_db);
    w.key("ul_rate_bps");
    write_metric_stats(w, cs.rate_bps);
    w.key("ul_serving_loss_db");
    write_metric_stats(w, cs.serving_loss_db);
    w.end_object();
    w.end_object();
  }
  w.end_array();
  w.key("gains");
  w.begin_array();
  for (const auto& gain : summary.gains) {
    w.begin_object();
    w.key("test");
    w.value(gain.test);
    w.key("baseline");
    w.value(gain.baseline);
    w.key("rate_gain_percent_p05");
    w.value(gain.rate_gain_percent_p05);
    w.key("rate_gain_percent_p50");
    w.value(gain.rate_gain_percent_p50);
    w.key("tx_power_reduction_db_p50");
    w.value(gain.tx_power_reduction_db_p50);
    w.key("tx_power_reduction_db_p95");
    w.value(gain.tx_power_reduction_db_p95);
    w.end_object();
  }
  w.end_array();
  w.end_object();
  std::string out = w.take();
  out += '\n';
  return out;
}

ReportSummary report_from_json_text(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  ReportSummary summary;
  summary.version = j.at("version").get<std::string>();
  summary.seed = j.at("seed").get<std::uint64_t>();
  summary.config = config_from_json_text(j.at("config").dump());
  for (const auto& jc : j.at("cases")) {
    CaseSummary cs;
    cs.name = jc.at("name").get<std::string>();
    cs.policy = jc.at("policy").get<std::string>();
    cs.dl_small_bias_db = jc.at("dl_small_bias_db").get<double>();
    cs.decoupling_fraction = jc.at("decoupling_fraction").get<double>();
    const auto& loads = jc.at("mean_ues_per_cell");
    cs.loads.dl_macro = loads.at("dl_macro").get<double>();
    cs.loads.dl_small = loads.at("dl_small").get<double>();
    cs.loads.ul_macro = loads.at("ul_macro").get<double>();
    cs.loads.ul_small = loads.at("ul_small").get<double>();
    cs.loads.macro_drops = loads.at("macro_drops").get<std::uint64_t>();
    cs.loads.small_drops = loads.at("small_drops").get<std::uint64_t>();
    const auto& metrics = jc.at("metrics");
    cs.tx_power_dbm = metric_stats_from_json(metrics.at("ul_tx_power_dbm"));
    cs.sinr_db = metric_stats_from_json(metrics.at("ul_sinr_db"));
    cs.sinr_std_db = metric_stats_from_json(metrics.at("ul_sinr_std_db"));
    cs.rate_bps = metric_stats_from_json(metrics.at("ul_rate_bps"));
    cs.serving_loss_db =
        metric_stats_from_json(metrics.at("ul_serving_loss_db"));
    summary.cases.push_back(std::move(cs));
  }
  for (const auto& jg : j.at("gains")) {
    GainEntry gain;
    gain.test = jg.at("test").get<std::string>();
    gain.baseline = jg.at("baseline").get<std::string>();
    gain.rate_gain_percent_p05 = jg.at("rate_gain_percent_p05").get<double>();
    gain.rate_gain_percent_p50 = jg.at("rate_gain_percent_p50").get<double>();
    gain.tx_power_reduction_db_p50 =
        jg.at("tx_power_reduction_db_p50").get<double>();
    gain.tx_power_reduction_db_p95 =
        jg.at("tx_power_reduction_db_p95").get<double>();
    summary.gains.push_back(std::move(gain));
  }
  return summary;
}

void write_cdf_csv(std::span<const double> samples, const std::string& path,
                   std::size_t max_points) {
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "value,cum_prob\n";
  const std::size_t n = sorted.size();
  if (n == 0) return;
  const double dn = static_cast<double>(n);
  if (n <= max_points) {
    for (std::size_t i = 0; i < n; ++i) {
      out << format_double(sorted[i]) << ','
          << format_double(static_cast<double>(i + 1) / dn) << '\n';
    }
    return;
  }
  std::size_t previous = n;  // sentinel
  for (std::size_t t = 0; t < max_points; ++t) {
    const std::size_t i = t * (n - 1) / (max_points - 1);
    if (i == previous) continue;
    previous = i;
    out << format_double(sorted[i]) << ','
        << format_double(static_cast<double>(i + 1) / dn) << '\n';
  }
}

void write_report_files(const ScenarioReport& report, const std::string& out_dir,
                        const std::string& scenario_label) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  const ReportSummary summary = summarize(report);
  {
    std::ofstream out(fs::path(out_dir) / "report.json");
    if (!out) throw std::runtime_error("cannot write report.json in " + out_dir);
    out << report_json(summary);
  }
  for (const auto& aggregate : report.cases) {
    for (const auto& metric : kMetrics) {
      bool wanted = false;
      for (const char* name : kCdfMetrics) {
        if (std::string_view(name) == metric.key) wanted = true;
      }
      if (!wanted) continue;
      const std::string file = std::string("cdf_") + metric.key + "_" +
                               aggregate.definition.name + ".csv";
      write_cdf_csv(aggregate.*(metric.samples),
                    (fs::path(out_dir) / file).string());
    }
  }
  {
    std::ofstream out(fs::path(out_dir) / "gains.csv");
    if (!out) throw std::runtime_error("cannot write gains.csv in " + out_dir);
    out << "preset,percentile,gain_percent\n";
    for (const auto& gain : summary.gains) {
      std::string label = scenario_label;
      if (summary.gains.size() > 1) {
        label += ":" + gain.test + "-vs-" + gain.baseline;
      }
      out << label << ",5,"
          << format_double(gain.rate_gain_percent_p05) << '\n';
      out << label << ",50,"
          << format_double(gain.rate_gain_percent_p50) << '\n';
    }
  }
}

}  // namespace dude
