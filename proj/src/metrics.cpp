#include "dude/metrics.hpp"

#include <algorithm>
#include <cmath>

namespace dude {

std::vector<CdfPoint> empirical_cdf(std::span<const double> samples) {
  if (samples.empty()) throw EmptySamplesError("empirical_cdf: no samples");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<CdfPoint> cdf(sorted.size());
  const double n = static_cast<double>(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    cdf[i] = {sorted[i], static_cast<double>(i + 1) / n};
  }
  return cdf;
}

double percentile_sorted(std::span<const double> sorted, double p) {
  if (sorted.empty()) throw EmptySamplesError("percentile: no samples");
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InvalidPercentileError("percentile: p must be in [0, 1]");
  }
  const double rank = p * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(rank);
  if (lo + 1 >= sorted.size()) return sorted.back();
  const double frac = rank - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

double percentile(std::span<const double> samples, double p) {
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  return percentile_sorted(sorted, p);
}

double rate_gain_percent(std::span<const double> rates_test,
                         std::span<const double> rates_baseline, double p) {
  const double baseline = percentile(rates_baseline, p);
  if (baseline == 0.0) {
    throw ZeroBaselineError("rate_gain_percent: baseline percentile is zero");
  }
  return 100.0 * (percentile(rates_test, p) / baseline - 1.0);
}

double mean(std::span<const double> samples) {
  if (samples.empty()) throw EmptySamplesError("mean: no samples");
  double sum = 0.0;
  for (double v : samples) sum += v;
  return sum / static_cast<double>(samples.size());
}

double population_std(std::span<const double> samples) {
  if (samples.empty()) throw EmptySamplesError("population_std: no samples");
  const double m = mean(samples);
  double acc = 0.0;
  for (double v : samples) acc += (v - m) * (v - m);
  return std::sqrt(std::max(0.0, acc / static_cast<double>(samples.size())));
}

SinrStdSummary sinr_std_summary(
    const std::vector<std::vector<double>>& per_ue_series) {
  SinrStdSummary summary;
  summary.std_db.reserve(per_ue_series.size());
  for (const auto& series : per_ue_series) {
    summary.std_db.push_back(population_std(series));
  }
  summary.cdf = empirical_cdf(summary.std_db);
  return summary;
}

}  // namespace dude
