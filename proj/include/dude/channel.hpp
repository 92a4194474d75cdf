#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dude/config.hpp"
#include "dude/deployment.hpp"
#include "dude/rng.hpp"

namespace dude {

// Dense row-major matrix indexed [ue][bs].
class Grid {
 public:
  Grid() = default;
  Grid(std::size_t ue_count, std::size_t bs_count, double fill = 0.0)
      : rows_(ue_count), cols_(bs_count), v_(ue_count * bs_count, fill) {}

  double& operator()(std::size_t ue, std::size_t bs) {
    return v_[ue * cols_ + bs];
  }
  double operator()(std::size_t ue, std::size_t bs) const {
    return v_[ue * cols_ + bs];
  }

  std::size_t ue_count() const { return rows_; }
  std::size_t bs_count() const { return cols_; }
  const std::vector<double>& values() const { return v_; }

  bool operator==(const Grid&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> v_;
};

// Large-scale state of every UE-BS link for one drop. Shadowing is drawn
// once per link per drop; fast fading is sampled per slot elsewhere.
struct LinkState {
  Grid pathloss_db;
  Grid shadowing_db;
  Grid coupling_loss_db;  // pathloss_db - shadowing_db, element-wise
};

// Power-law loss with the distance clamped below at min_distance_m:
// intercept + 10 * exponent * log10(d / 1 m).
double path_loss_db(double distance_m, const NetworkConfig& config);

// Gaussian in dB, mean zero.
double sample_shadowing_db(RngStream& rng, double stddev_db);

// Rayleigh amplitude as a unit-mean exponential power gain.
double sample_fading(RngStream& rng);

// Assembles the loss matrices for a deployment. drop_key is the per-drop
// derivation root; links read independent substreams, so the result does
// not depend on traversal order.
LinkState build_link_state(const Deployment& deployment,
                           const NetworkConfig& config, RngKey drop_key);

// Per-slot fading gain for one link, independent across slots and links.
double fading_gain(RngKey drop_key, std::int64_t slot, std::size_t ue,
                   std::size_t bs, std::size_t bs_count);

}  // namespace dude
