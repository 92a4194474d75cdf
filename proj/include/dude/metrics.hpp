#pragma once

#include <span>
#include <stdexcept>
#include <vector>

namespace dude {

struct CdfPoint {
  double value = 0.0;
  double cum_prob = 0.0;

  bool operator==(const CdfPoint&) const = default;
};

struct EmptySamplesError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct InvalidPercentileError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct ZeroBaselineError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Sorted sample values with step probabilities k/n.
std::vector<CdfPoint> empirical_cdf(std::span<const double> samples);

// Linear interpolation between order statistics at rank (n-1)*p; endpoints
// clamp to min/max. Input need not be sorted.
double percentile(std::span<const double> samples, double p);
double percentile_sorted(std::span<const double> sorted, double p);

// 100 * (percentile(test, p) / percentile(baseline, p) - 1).
double rate_gain_percent(std::span<const double> rates_test,
                         std::span<const double> rates_baseline, double p);

double mean(std::span<const double> samples);

// Population standard deviation (divides by n); 0 for a single sample.
double population_std(std::span<const double> samples);

struct SinrStdSummary {
  std::vector<double> std_db;  // per UE
  std::vector<CdfPoint> cdf;
};

SinrStdSummary sinr_std_summary(
    const std::vector<std::vector<double>>& per_ue_series);

}  // namespace dude
