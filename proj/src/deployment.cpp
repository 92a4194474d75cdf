#include "dude/deployment.hpp"

#include "dude/rng.hpp"

namespace dude {

namespace {

constexpr int kRetryBudget = 100;

Point sample_point(RngStream& rng, double side) {
  const double x = rng.next_double() * side;
  const double y = rng.next_double() * side;
  return {x, y};
}

}  // namespace

Deployment sample_deployment(const NetworkConfig& config,
                             std::uint64_t drop_index) {
  validate(config);
  const double area = area_km2(config);
  const std::int64_t n_ue = ue_count(config);
  const RngKey drop_key = RngKey(config.master_seed).child(drop_index);
  const RngKey deploy_key = drop_key.child(stream_tag::deployment);

  for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
    RngStream rng = deploy_key.child(static_cast<std::uint64_t>(attempt)).stream();
    const std::int64_t n_macro = rng.next_poisson(config.macro_density * area);
    const std::int64_t n_small = rng.next_poisson(config.small_density * area);
    if (n_macro + n_small == 0) continue;

    Deployment dep;
    dep.window_side = config.window_side;
    dep.bs.reserve(static_cast<std::size_t>(n_macro + n_small));
    for (std::int64_t i = 0; i < n_macro; ++i) {
      dep.bs.push_back({sample_point(rng, config.window_side), Tier::macro,
                        config.macro_power_dbm, 0.0});
    }
    for (std::int64_t i = 0; i < n_small; ++i) {
      dep.bs.push_back({sample_point(rng, config.window_side), Tier::small,
                        config.small_power_dbm, config.small_bias_db});
    }
    dep.ues.reserve(static_cast<std::size_t>(n_ue));
    for (std::int64_t i = 0; i < n_ue; ++i) {
      dep.ues.push_back(sample_point(rng, config.window_side));
    }
    return dep;
  }
  throw EmptyNetworkError(
      "no base stations sampled after 100 attempts; densities too low for "
      "the window");
}

}  // namespace dude
