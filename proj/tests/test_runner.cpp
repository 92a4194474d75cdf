#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "dude/report.hpp"
#include "dude/scenario.hpp"

using dude::NetworkConfig;
using dude::UlPolicy;

namespace {

NetworkConfig tiny_world() {
  NetworkConfig cfg;
  cfg.window_side = 600.0;
  cfg.macro_density = 15.0;
  cfg.small_density = 50.0;
  cfg.ue_density = 350.0;
  cfg.num_drops = 6;
  cfg.slots_per_drop = 8;
  return cfg;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("defaults reproduce the reference scenario parameters") {
  NetworkConfig cfg;
  CHECK(cfg.window_side == 2000.0);
  CHECK(cfg.macro_density == 5.0);
  CHECK(cfg.small_density == 20.0);
  CHECK(cfg.ue_density == 330.0);
  CHECK(cfg.macro_power_dbm == 46.0);
  CHECK(cfg.small_power_dbm == 30.0);
  CHECK(cfg.ue_max_power_dbm == 20.0);
  CHECK(cfg.small_bias_db == 0.0);
  CHECK(cfg.pathloss_exponent == 3.5);
  CHECK(cfg.pathloss_intercept_db == 40.75);
  CHECK(cfg.shadowing_std_db == 8.0);
  CHECK(cfg.noise_figure_db == 5.0);
  CHECK(cfg.bandwidth_hz == 20e6);
  CHECK(cfg.num_blocks == 100);
  CHECK(cfg.pc_p0_dbm == -78.0);
  CHECK(cfg.pc_alpha == 0.8);
  CHECK(cfg.num_drops == 200);
  CHECK(cfg.slots_per_drop == 50);
  CHECK(dude::ue_count(cfg) == 1320);
}

TEST_CASE("empty config text yields the defaults") {
  CHECK(dude::config_from_json_text("") == NetworkConfig{});
  CHECK(dude::config_from_json_text("  \n\t ") == NetworkConfig{});
  CHECK(dude::config_from_json_text("{}") == NetworkConfig{});
}

TEST_CASE("config parsing applies known keys and rejects unknown ones") {
  const auto cfg = dude::config_from_json_text(
      R"({"small_bias_db": 6, "ul_policy": "coupled", "num_drops": 42})");
  CHECK(cfg.small_bias_db == 6.0);
  CHECK(cfg.ul_policy == UlPolicy::coupled);
  CHECK(cfg.num_drops == 42);

  CHECK_THROWS_WITH_AS(dude::config_from_json_text(R"({"warp_factor": 9})"),
                       doctest::Contains("warp_factor"),
                       dude::ValidationError);
}

TEST_CASE("config validation names the offending field") {
  CHECK_THROWS_WITH_AS(dude::config_from_json_text(R"({"pc_alpha": 1.5})"),
                       doctest::Contains("pc_alpha"), dude::ValidationError);
  CHECK_THROWS_WITH_AS(
      dude::config_from_json_text(R"({"pathloss_exponent": 2.0})"),
      doctest::Contains("pathloss_exponent"), dude::ValidationError);
  CHECK_THROWS_WITH_AS(dude::config_from_json_text(R"({"macro_density": -1})"),
                       doctest::Contains("macro_density"),
                       dude::ValidationError);
  CHECK_THROWS_WITH_AS(dude::config_from_json_text(R"({"num_blocks": 0})"),
                       doctest::Contains("num_blocks"), dude::ValidationError);
}

TEST_CASE("malformed JSON is a parse error") {
  CHECK_THROWS_AS(dude::config_from_json_text("{"), dude::ParseError);
  CHECK_THROWS_AS(dude::config_from_json_text("[1,2]"), dude::ParseError);
}

TEST_CASE("config text round-trips exactly") {
  NetworkConfig cfg = tiny_world();
  cfg.pc_alpha = 0.73;
  cfg.master_seed = 0x8000000000000003ULL;  // past the double-exact range
  cfg.ul_policy = UlPolicy::coupled;
  cfg.decoupled_dl_uses_bias = true;
  cfg.pathloss_intercept_db = 40.750000000000007;
  const auto text = dude::config_to_json_text(cfg);
  CHECK(dude::config_from_json_text(text) == cfg);
}

TEST_CASE("config file save/load round-trip") {
  const auto dir = std::filesystem::temp_directory_path() / "dude_cfg_test";
  std::filesystem::create_directories(dir);
  NetworkConfig cfg = tiny_world();
  cfg.small_bias_db = 2.5;
  const auto path = (dir / "cfg.json").string();
  dude::save_config(cfg, path);
  CHECK(dude::load_config(path) == cfg);
  CHECK_THROWS_AS(dude::load_config((dir / "missing.json").string()),
                  dude::ParseError);
}

TEST_CASE("set_field covers numeric fields only") {
  NetworkConfig cfg;
  dude::set_field(cfg, "small_bias_db", 4.0);
  CHECK(cfg.small_bias_db == 4.0);
  dude::set_field(cfg, "num_drops", 17.0);
  CHECK(cfg.num_drops == 17);
  CHECK_THROWS_AS(dude::set_field(cfg, "ul_policy", 1.0),
                  dude::ValidationError);
  CHECK_THROWS_AS(dude::set_field(cfg, "nope", 1.0), dude::ValidationError);
}

TEST_CASE("one-drop scenario equals the wrapped drop result") {
  auto cfg = tiny_world();
  cfg.num_drops = 1;
  const auto cases = dude::default_cases(cfg);
  const auto report = dude::run_scenario(cfg, cases, 1);
  const auto drop = dude::run_drop(cfg, 0, cases);
  REQUIRE(report.cases.size() == drop.cases.size());
  for (std::size_t c = 0; c < drop.cases.size(); ++c) {
    dude::CaseAggregate expected;
    expected.definition = cases[c];
    expected.absorb(drop.cases[c]);
    CHECK(report.cases[c].tx_power_dbm == expected.tx_power_dbm);
    CHECK(report.cases[c].sinr_db == expected.sinr_db);
    CHECK(report.cases[c].sinr_std_db == expected.sinr_std_db);
    CHECK(report.cases[c].rate_bps == expected.rate_bps);
    CHECK(report.cases[c].serving_loss_db == expected.serving_loss_db);
  }
}

TEST_CASE("serial and parallel scenario runs serialize identically") {
  const auto cfg = tiny_world();
  const auto cases = dude::default_cases(cfg);
  const auto serial = dude::run_scenario_serial(cfg, cases);
  const auto parallel1 = dude::run_scenario(cfg, cases, 1);
  const auto parallel4 = dude::run_scenario(cfg, cases, 4);
  const auto text_serial = dude::report_json(dude::summarize(serial));
  CHECK(text_serial == dude::report_json(dude::summarize(parallel1)));
  CHECK(text_serial == dude::report_json(dude::summarize(parallel4)));
}

TEST_CASE("repeat runs with one seed are byte-identical") {
  const auto cfg = tiny_world();
  const auto a = dude::run_scenario(cfg, 0);
  const auto b = dude::run_scenario(cfg, 0);
  CHECK(dude::report_json(dude::summarize(a)) ==
        dude::report_json(dude::summarize(b)));
}

TEST_CASE("report summary round-trips through JSON exactly") {
  const auto cfg = tiny_world();
  const auto report = dude::run_scenario(cfg, 0);
  const auto summary = dude::summarize(report);
  const auto text = dude::report_json(summary);
  const auto parsed = dude::report_from_json_text(text);
  CHECK(parsed == summary);
}

TEST_CASE("per-UE sample counts stay aligned across cases") {
  const auto cfg = tiny_world();
  const auto report = dude::run_scenario(cfg, 0);
  REQUIRE(report.cases.size() == 2);
  CHECK(report.cases[0].tx_power_dbm.size() ==
        report.cases[1].tx_power_dbm.size());
  CHECK(report.cases[0].rate_bps.size() == report.cases[1].rate_bps.size());
  CHECK(report.cases[0].sinr_std_db.size() ==
        report.cases[1].sinr_std_db.size());
  const auto expected = static_cast<std::size_t>(cfg.num_drops) *
                        static_cast<std::size_t>(dude::ue_count(cfg));
  CHECK(report.cases[0].tx_power_dbm.size() == expected);
}

TEST_CASE("report files land on disk with the promised layout") {
  const auto dir =
      std::filesystem::temp_directory_path() / "dude_report_test";
  std::filesystem::remove_all(dir);
  const auto cfg = tiny_world();
  const auto report = dude::run_scenario(cfg, 0);
  dude::write_report_files(report, dir.string(), "tiny");

  CHECK(std::filesystem::exists(dir / "report.json"));
  CHECK(std::filesystem::exists(dir / "gains.csv"));
  for (const char* metric :
       {"ul_tx_power_dbm", "ul_sinr_db", "ul_sinr_std_db", "ul_rate_bps"}) {
    for (const auto& aggregate : report.cases) {
      const auto file = dir / (std::string("cdf_") + metric + "_" +
                               aggregate.definition.name + ".csv");
      REQUIRE(std::filesystem::exists(file));
      const auto text = slurp(file);
      CHECK(text.rfind("value,cum_prob\n", 0) == 0);
    }
  }
  const auto gains = slurp(dir / "gains.csv");
  CHECK(gains.rfind("preset,percentile,gain_percent\n", 0) == 0);
  CHECK(gains.find("tiny") != std::string::npos);

  // parsing the emitted report reproduces the in-memory aggregates
  const auto parsed = dude::report_from_json_text(slurp(dir / "report.json"));
  CHECK(parsed == dude::summarize(report));
}

TEST_CASE("cdf csv subsampling preserves endpoints and monotonicity") {
  const auto dir = std::filesystem::temp_directory_path() / "dude_cdf_test";
  std::filesystem::create_directories(dir);
  std::vector<double> samples;
  dude::RngStream rng(dude::RngKey(40).value());
  for (int i = 0; i < 5000; ++i) samples.push_back(rng.next_gaussian(3.0));
  const auto path = (dir / "cdf.csv").string();
  dude::write_cdf_csv(samples, path, 101);
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == "value,cum_prob");
  double value = 0.0, prob = 0.0, last_value = -1e300, last_prob = -1.0;
  char comma = 0;
  std::size_t rows = 0;
  while (in >> value >> comma >> prob) {
    REQUIRE(value >= last_value);
    REQUIRE(prob > last_prob);
    last_value = value;
    last_prob = prob;
    ++rows;
  }
  CHECK(rows == 101);
  CHECK(last_prob == 1.0);
}

TEST_CASE("presets carry the documented powers and cases") {
  NetworkConfig cfg;
  const auto pico0 = dude::preset_by_name("pico-bias0", cfg);
  CHECK(pico0.small_power_dbm == 30.0);
  REQUIRE(pico0.cases.size() == 2);
  CHECK(pico0.cases[0].policy == UlPolicy::coupled);
  CHECK(pico0.cases[0].dl_small_bias_db == 0.0);
  CHECK(pico0.cases[1].policy == UlPolicy::decoupled);

  const auto femto8 = dude::preset_by_name("femto-bias8", cfg);
  CHECK(femto8.small_power_dbm == 20.0);
  CHECK(femto8.cases[0].dl_small_bias_db == 8.0);
  CHECK(femto8.cases[1].dl_small_bias_db == 0.0);

  const auto fig1 = dude::preset_by_name("fig1-cases", cfg);
  REQUIRE(fig1.cases.size() == 3);
  CHECK(fig1.cases[1].dl_small_bias_db == 6.0);

  cfg.decoupled_dl_uses_bias = true;
  const auto pico6 = dude::preset_by_name("pico-bias6", cfg);
  CHECK(pico6.cases[1].dl_small_bias_db == 6.0);

  CHECK_THROWS_AS(dude::preset_by_name("nope", cfg), dude::ValidationError);
}

TEST_CASE("a self-comparison preset reports zero gains") {
  auto cfg = tiny_world();
  const dude::ScenarioPreset preset{
      "self", 30.0,
      {dude::make_case(UlPolicy::coupled, 0.0),
       {"coupled-again", UlPolicy::coupled, 0.0}}};
  const auto summary =
      dude::summarize(dude::compare_policies(cfg, preset, 0));
  REQUIRE(summary.gains.size() == 1);
  CHECK(summary.gains[0].rate_gain_percent_p05 == 0.0);
  CHECK(summary.gains[0].rate_gain_percent_p50 == 0.0);
  CHECK(summary.gains[0].tx_power_reduction_db_p50 == 0.0);
  CHECK(summary.gains[0].tx_power_reduction_db_p95 == 0.0);
}

TEST_CASE("compare_policies applies the preset power profile") {
  auto cfg = tiny_world();
  const auto preset = dude::preset_by_name("femto-bias0", cfg);
  const auto report = dude::compare_policies(cfg, preset, 0);
  CHECK(report.config.small_power_dbm == 20.0);
  const auto summary = dude::summarize(report);
  REQUIRE(summary.cases.size() == 2);
  REQUIRE(summary.gains.size() == 1);
  CHECK(summary.gains[0].test == "decoupled");
  CHECK(summary.gains[0].baseline == "coupled-bias0");
}

TEST_CASE("scenario rejects an empty UE population") {
  NetworkConfig cfg = tiny_world();
  cfg.ue_density = 0.0;
  CHECK_THROWS_AS(dude::run_scenario(cfg, 1), dude::ValidationError);
}
