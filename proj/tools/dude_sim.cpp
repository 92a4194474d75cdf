#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "dude/config.hpp"
#include "dude/metrics.hpp"
#include "dude/report.hpp"
#include "dude/scenario.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfigError = 2;
constexpr int kExitRuntimeError = 3;

struct CommonOpts {
  std::string config_path;
  std::string out_dir;
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> drops;
  int workers = 0;
};

dude::NetworkConfig resolve_config(const CommonOpts& opts) {
  dude::NetworkConfig cfg;
  if (!opts.config_path.empty()) cfg = dude::load_config(opts.config_path);
  if (opts.seed) cfg.master_seed = *opts.seed;
  if (opts.drops) cfg.num_drops = *opts.drops;
  dude::validate(cfg);
  return cfg;
}

void print_summary(const dude::ReportSummary& summary) {
  std::cout << "cases (" << summary.config.num_drops << " drops, seed "
            << summary.seed << "):\n";
  for (const auto& cs : summary.cases) {
    std::cout << "  " << cs.name << ": rate p05 "
              << cs.rate_bps.pct[0] / 1e6 << " Mbps, p50 "
              << cs.rate_bps.pct[2] / 1e6 << " Mbps | tx power p50 "
              << cs.tx_power_dbm.pct[2] << " dBm, p95 "
              << cs.tx_power_dbm.pct[4] << " dBm | sinr-std p50 "
              << cs.sinr_std_db.pct[2] << " dB | UEs/small-cell UL "
              << cs.loads.ul_small << " | decoupled "
              << 100.0 * cs.decoupling_fraction << "%\n";
  }
  for (const auto& gain : summary.gains) {
    std::cout << "  " << gain.test << " vs " << gain.baseline << ": rate gain "
              << gain.rate_gain_percent_p05 << "% (p05), "
              << gain.rate_gain_percent_p50 << "% (p50); tx power reduction "
              << gain.tx_power_reduction_db_p50 << " dB (p50), "
              << gain.tx_power_reduction_db_p95 << " dB (p95)\n";
  }
}

int cmd_run(const CommonOpts& opts) {
  const auto cfg = resolve_config(opts);
  const auto report = dude::run_scenario(cfg, opts.workers);
  dude::write_report_files(report, opts.out_dir, "run");
  print_summary(dude::summarize(report));
  std::cout << "wrote " << opts.out_dir << "/report.json\n";
  return kExitOk;
}

int cmd_compare(const CommonOpts& opts, const std::string& preset_name) {
  const auto cfg = resolve_config(opts);
  const auto preset = dude::preset_by_name(preset_name, cfg);
  const auto report = dude::compare_policies(cfg, preset, opts.workers);
  dude::write_report_files(report, opts.out_dir, preset.name);
  std::cout << "preset " << preset.name << " (small cells "
            << preset.small_power_dbm << " dBm)\n";
  print_summary(dude::summarize(report));
  std::cout << "wrote " << opts.out_dir << "/report.json\n";
  return kExitOk;
}

int cmd_sweep(const CommonOpts& opts, const std::string& param,
              const std::vector<double>& values) {
  const auto base_cfg = resolve_config(opts);
  namespace fs = std::filesystem;
  fs::create_directories(opts.out_dir);
  std::ofstream csv(fs::path(opts.out_dir) / "sweep.csv");
  if (!csv) throw std::runtime_error("cannot write sweep.csv");
  csv << "param,value,rate_gain_percent_p05,rate_gain_percent_p50,"
         "tx_power_reduction_db_p50,tx_power_reduction_db_p95,"
         "ul_load_small_baseline,ul_load_small_test,decoupling_fraction\n";
  for (double value : values) {
    dude::NetworkConfig cfg = base_cfg;
    dude::set_field(cfg, param, value);
    dude::validate(cfg);
    const std::vector<dude::PolicyCase> cases = {
        dude::make_case(dude::UlPolicy::coupled, cfg.small_bias_db),
        dude::make_case(dude::UlPolicy::decoupled,
                        cfg.decoupled_dl_uses_bias ? cfg.small_bias_db : 0.0),
    };
    const auto report = dude::run_scenario(cfg, cases, opts.workers);
    const auto summary = dude::summarize(report);
    const auto& gain = summary.gains.front();
    csv << param << ',' << dude::format_double(value) << ','
        << dude::format_double(gain.rate_gain_percent_p05) << ','
        << dude::format_double(gain.rate_gain_percent_p50) << ','
        << dude::format_double(gain.tx_power_reduction_db_p50) << ','
        << dude::format_double(gain.tx_power_reduction_db_p95) << ','
        << dude::format_double(summary.cases[0].loads.ul_small) << ','
        << dude::format_double(summary.cases[1].loads.ul_small) << ','
        << dude::format_double(summary.cases[1].decoupling_fraction) << '\n';
    std::cout << param << " = " << value << ": gain p05 "
              << gain.rate_gain_percent_p05 << "%, p50 "
              << gain.rate_gain_percent_p50 << "%\n";
  }
  std::cout << "wrote " << opts.out_dir << "/sweep.csv\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dude-sim: Monte Carlo simulator for downlink/uplink "
               "decoupled cell association in multi-tier cellular networks"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string preset_name;
  std::string sweep_param;
  std::vector<double> sweep_values;

  auto add_common = [&opts](CLI::App* cmd, bool config_required) {
    auto* config_opt =
        cmd->add_option("--config", opts.config_path, "config JSON file");
    if (config_required) config_opt->required();
    cmd->add_option("--seed", opts.seed, "override master_seed");
    cmd->add_option("--drops", opts.drops, "override num_drops");
    cmd->add_option("--workers", opts.workers,
                    "worker threads (1 = serial, 0 = all)");
    cmd->add_option("--out", opts.out_dir, "output directory")->required();
  };

  auto* run = app.add_subcommand("run", "run the configured scenario");
  add_common(run, true);

  auto* compare =
      app.add_subcommand("compare", "run a named baseline/test comparison");
  compare->add_option("--preset", preset_name, "scenario preset")
      ->required()
      ->check(CLI::IsMember(dude::preset_names()));
  add_common(compare, false);

  auto* sweep = app.add_subcommand("sweep", "sweep one numeric config field");
  sweep->add_option("--param", sweep_param, "config field name")->required();
  sweep->add_option("--values", sweep_values, "comma-separated values")
      ->required()
      ->delimiter(',');
  add_common(sweep, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfigError;
  }

  try {
    if (run->parsed()) return cmd_run(opts);
    if (compare->parsed()) return cmd_compare(opts, preset_name);
    return cmd_sweep(opts, sweep_param, sweep_values);
  } catch (const dude::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntimeError;
  }
}
