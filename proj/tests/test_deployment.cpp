#include <cmath>

#include "doctest.h"
#include "dude/deployment.hpp"

using dude::NetworkConfig;
using dude::sample_deployment;
using dude::Tier;

namespace {

NetworkConfig km1_config() {
  NetworkConfig cfg;
  cfg.window_side = 1000.0;  // 1 km^2: expected 5 macros, 20 smalls, 330 UEs
  return cfg;
}

}  // namespace

TEST_CASE("deployment is deterministic in (config, drop index)") {
  const auto cfg = km1_config();
  const auto a = sample_deployment(cfg, 3);
  const auto b = sample_deployment(cfg, 3);
  CHECK(a == b);
  const auto c = sample_deployment(cfg, 4);
  CHECK(a.bs != c.bs);
}

TEST_CASE("UE count is deterministic and rounded from the density") {
  const auto cfg = km1_config();
  for (std::uint64_t drop = 0; drop < 5; ++drop) {
    CHECK(sample_deployment(cfg, drop).ues.size() == 330);
  }
}

TEST_CASE("positions stay inside the window and tiers carry config values") {
  const auto cfg = km1_config();
  const auto dep = sample_deployment(cfg, 11);
  for (const auto& bs : dep.bs) {
    REQUIRE(bs.position.x >= 0.0);
    REQUIRE(bs.position.x < cfg.window_side);
    REQUIRE(bs.position.y >= 0.0);
    REQUIRE(bs.position.y < cfg.window_side);
    if (bs.tier == Tier::macro) {
      REQUIRE(bs.tx_power_dbm == cfg.macro_power_dbm);
      REQUIRE(bs.bias_db == 0.0);
    } else {
      REQUIRE(bs.tx_power_dbm == cfg.small_power_dbm);
      REQUIRE(bs.bias_db == cfg.small_bias_db);
    }
  }
  for (const auto& ue : dep.ues) {
    REQUIRE(ue.x >= 0.0);
    REQUIRE(ue.x < cfg.window_side);
  }
}

TEST_CASE("empty small tier is fine as long as macros exist") {
  auto cfg = km1_config();
  cfg.small_density = 0.0;
  const auto dep = sample_deployment(cfg, 0);
  for (const auto& bs : dep.bs) CHECK(bs.tier == Tier::macro);
  CHECK(!dep.bs.empty());
}

TEST_CASE("an impossible BS field raises EmptyNetworkError") {
  auto cfg = km1_config();
  cfg.macro_density = 0.0;
  cfg.small_density = 0.0;
  CHECK_THROWS_AS(sample_deployment(cfg, 0), dude::EmptyNetworkError);
}

TEST_CASE("a sparse-but-nonzero field resolves through retries") {
  auto cfg = km1_config();
  cfg.window_side = 200.0;      // area 0.04 km^2
  cfg.macro_density = 2.0;      // lambda = 0.08: empty most drops
  cfg.small_density = 0.0;
  cfg.ue_density = 100.0;
  int total = 0;
  for (std::uint64_t drop = 0; drop < 20; ++drop) {
    const auto dep = sample_deployment(cfg, drop);
    REQUIRE(!dep.bs.empty());
    total += static_cast<int>(dep.bs.size());
  }
  CHECK(total >= 20);
}

TEST_CASE("tier counts are Poisson with the configured mean") {
  const auto cfg = km1_config();
  const int drops = 1000;
  double macro_sum = 0.0;
  double small_sum = 0.0;
  for (int drop = 0; drop < drops; ++drop) {
    const auto dep = sample_deployment(cfg, static_cast<std::uint64_t>(drop));
    for (const auto& bs : dep.bs) {
      if (bs.tier == Tier::macro) {
        macro_sum += 1.0;
      } else {
        small_sum += 1.0;
      }
    }
  }
  CHECK(macro_sum / drops == doctest::Approx(5.0).epsilon(0.05));
  CHECK(small_sum / drops == doctest::Approx(20.0).epsilon(0.05));
}

TEST_CASE("count distributions depend only on the expected counts") {
  // same expected counts from two window/density pairs
  auto small_window = km1_config();
  auto large_window = km1_config();
  large_window.window_side = 2000.0;
  large_window.macro_density /= 4.0;
  large_window.small_density /= 4.0;
  large_window.ue_density /= 4.0;

  const int drops = 1000;
  double mean_a = 0.0, mean_b = 0.0, sq_a = 0.0, sq_b = 0.0;
  for (int drop = 0; drop < drops; ++drop) {
    double a = 0.0, b = 0.0;
    for (const auto& bs :
         sample_deployment(small_window, static_cast<std::uint64_t>(drop)).bs) {
      a += bs.tier == Tier::macro;
    }
    for (const auto& bs :
         sample_deployment(large_window, static_cast<std::uint64_t>(drop)).bs) {
      b += bs.tier == Tier::macro;
    }
    mean_a += a;
    mean_b += b;
    sq_a += a * a;
    sq_b += b * b;
  }
  mean_a /= drops;
  mean_b /= drops;
  const double var_a = sq_a / drops - mean_a * mean_a;
  const double var_b = sq_b / drops - mean_b * mean_b;
  CHECK(std::fabs(mean_a - mean_b) < 0.4);
  CHECK(std::fabs(var_a - var_b) < 1.2);
}
