#include "dude/channel.hpp"

#include <cmath>

namespace dude {

double path_loss_db(double distance_m, const NetworkConfig& config) {
  const double d = std::max(distance_m, config.min_distance_m);
  return config.pathloss_intercept_db +
         10.0 * config.pathloss_exponent * std::log10(d);
}

double sample_shadowing_db(RngStream& rng, double stddev_db) {
  return rng.next_gaussian(stddev_db);
}

double sample_fading(RngStream& rng) { return rng.next_exp(); }

LinkState build_link_state(const Deployment& deployment,
                           const NetworkConfig& config, RngKey drop_key) {
  const std::size_t n_ue = deployment.ues.size();
  const std::size_t n_bs = deployment.bs.size();
  LinkState links{Grid(n_ue, n_bs), Grid(n_ue, n_bs), Grid(n_ue, n_bs)};
  const RngKey shadow_key = drop_key.child(stream_tag::shadowing);
  for (std::size_t ue = 0; ue < n_ue; ++ue) {
    for (std::size_t bs = 0; bs < n_bs; ++bs) {
      const double d = toroidal_distance(deployment.ues[ue],
                                         deployment.bs[bs].position,
                                         deployment.window_side);
      const double pl = path_loss_db(d, config);
      RngStream rng = shadow_key.child(ue * n_bs + bs).stream();
      const double sh = sample_shadowing_db(rng, config.shadowing_std_db);
      links.pathloss_db(ue, bs) = pl;
      links.shadowing_db(ue, bs) = sh;
      links.coupling_loss_db(ue, bs) = pl - sh;
    }
  }
  return links;
}

double fading_gain(RngKey drop_key, std::int64_t slot, std::size_t ue,
                   std::size_t bs, std::size_t bs_count) {
  RngStream rng = drop_key.child(stream_tag::fading)
                      .child(static_cast<std::uint64_t>(slot))
                      .child(ue * bs_count + bs)
                      .stream();
  return sample_fading(rng);
}

}  // namespace dude
