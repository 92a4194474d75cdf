#include <algorithm>
#include <vector>

#include "doctest.h"
#include "dude/metrics.hpp"
#include "dude/rng.hpp"

TEST_CASE("empirical cdf of tiny sample sets") {
  const std::vector<double> one{5.0};
  auto cdf = dude::empirical_cdf(one);
  REQUIRE(cdf.size() == 1);
  CHECK(cdf[0] == dude::CdfPoint{5.0, 1.0});

  const std::vector<double> two{2.0, 1.0};
  cdf = dude::empirical_cdf(two);
  REQUIRE(cdf.size() == 2);
  CHECK(cdf[0] == dude::CdfPoint{1.0, 0.5});
  CHECK(cdf[1] == dude::CdfPoint{2.0, 1.0});

  CHECK_THROWS_AS(dude::empirical_cdf({}), dude::EmptySamplesError);
}

TEST_CASE("cdf is nondecreasing and ends at one") {
  dude::RngStream rng(dude::RngKey(3).value());
  std::vector<double> samples;
  for (int i = 0; i < 500; ++i) samples.push_back(rng.next_gaussian(4.0));
  const auto cdf = dude::empirical_cdf(samples);
  for (std::size_t i = 1; i < cdf.size(); ++i) {
    REQUIRE(cdf[i].value >= cdf[i - 1].value);
    REQUIRE(cdf[i].cum_prob > cdf[i - 1].cum_prob);
  }
  CHECK(cdf.back().cum_prob == 1.0);
}

TEST_CASE("percentile interpolates between order statistics") {
  const std::vector<double> samples{10.0, 20.0, 30.0, 40.0};
  CHECK(dude::percentile(samples, 0.05) == doctest::Approx(11.5).epsilon(1e-12));
  CHECK(dude::percentile(samples, 0.0) == 10.0);
  CHECK(dude::percentile(samples, 1.0) == 40.0);
  const std::vector<double> odd{3.0, 1.0, 2.0};
  CHECK(dude::percentile(odd, 0.5) == 2.0);
}

TEST_CASE("percentile rejects bad input") {
  CHECK_THROWS_AS(dude::percentile({}, 0.5), dude::EmptySamplesError);
  const std::vector<double> samples{1.0};
  CHECK_THROWS_AS(dude::percentile(samples, -0.1),
                  dude::InvalidPercentileError);
  CHECK_THROWS_AS(dude::percentile(samples, 1.1), dude::InvalidPercentileError);
}

TEST_CASE("percentile is monotone in p and affine-equivariant") {
  dude::RngStream rng(dude::RngKey(12).value());
  std::vector<double> samples;
  for (int i = 0; i < 257; ++i) samples.push_back(rng.next_exp() * 7.0);
  std::vector<double> scaled;
  for (double v : samples) scaled.push_back(2.5 * v - 3.0);
  double previous = -1e300;
  for (double p = 0.0; p <= 1.0; p += 0.05) {
    const double q = dude::percentile(samples, p);
    REQUIRE(q >= previous);
    previous = q;
    CHECK(dude::percentile(scaled, p) ==
          doctest::Approx(2.5 * q - 3.0).epsilon(1e-12));
  }
}

TEST_CASE("rate gain doubles and cancels as expected") {
  const std::vector<double> base{1e6, 1e6, 1e6};
  const std::vector<double> twice{2e6, 2e6, 2e6};
  CHECK(dude::rate_gain_percent(twice, base, 0.5) ==
        doctest::Approx(100.0).epsilon(1e-12));
  CHECK(dude::rate_gain_percent(base, base, 0.05) == 0.0);
  CHECK(dude::rate_gain_percent(base, base, 0.95) == 0.0);
}

TEST_CASE("rate gain ignores sample order") {
  dude::RngStream rng(dude::RngKey(14).value());
  std::vector<double> test, baseline;
  for (int i = 0; i < 99; ++i) {
    test.push_back(rng.next_exp() * 5e6);
    baseline.push_back(rng.next_exp() * 3e6);
  }
  const double gain = dude::rate_gain_percent(test, baseline, 0.5);
  std::vector<double> shuffled_test = test;
  std::vector<double> shuffled_base = baseline;
  std::reverse(shuffled_test.begin(), shuffled_test.end());
  std::rotate(shuffled_base.begin(), shuffled_base.begin() + 31,
              shuffled_base.end());
  CHECK(dude::rate_gain_percent(shuffled_test, shuffled_base, 0.5) == gain);
}

TEST_CASE("zero baseline percentile is an error") {
  const std::vector<double> base{0.0, 0.0};
  const std::vector<double> test{1.0, 2.0};
  CHECK_THROWS_AS(dude::rate_gain_percent(test, base, 0.5),
                  dude::ZeroBaselineError);
}

TEST_CASE("population std of hand series") {
  const std::vector<double> constant{4.0, 4.0, 4.0};
  CHECK(dude::population_std(constant) == 0.0);
  const std::vector<double> pair{0.0, 2.0};
  CHECK(dude::population_std(pair) == doctest::Approx(1.0).epsilon(1e-12));
  const std::vector<double> single{-3.5};
  CHECK(dude::population_std(single) == 0.0);
}

TEST_CASE("sinr std summary covers every UE") {
  const std::vector<std::vector<double>> series{
      {0.0, 2.0}, {5.0}, {1.0, 1.0, 1.0}};
  const auto summary = dude::sinr_std_summary(series);
  REQUIRE(summary.std_db.size() == 3);
  CHECK(summary.std_db[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(summary.std_db[1] == 0.0);
  CHECK(summary.std_db[2] == 0.0);
  CHECK(summary.cdf.size() == 3);
  CHECK(summary.cdf.back().cum_prob == 1.0);
}
