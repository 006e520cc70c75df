#include <cmath>

#include "doctest.h"
#include "tsa/decomposition.hpp"

using namespace tsa;

TEST_SUITE_BEGIN("decomposition");

TEST_CASE("recovers a linear trend plus pure seasonal pattern") {
  // y_t = 3 + 0.5 t + s_{t mod 4} with a zero-sum seasonal pattern: the
  // centered moving average reproduces the trend exactly in the interior and
  // the seasonal indices come out exactly.
  const int period = 4;
  const double pattern[] = {2.0, -1.0, -3.0, 2.0};
  const int n = 41;
  Eigen::VectorXd y(n);
  for (int t = 0; t < n; ++t) {
    y[t] = 3.0 + 0.5 * t + pattern[t % period];
  }
  // start 2012-01: serial divisible by 4, so position(t) == t mod 4
  REQUIRE(MonthIndex{2012, 1}.serial() % 4 == 0);
  const Decomposition dec = decompose({MonthIndex{2012, 1}, y}, period);

  CHECK(dec.period == period);
  CHECK(dec.seasonal_indices.sum() == doctest::Approx(0.0).epsilon(1e-12));
  for (int k = 0; k < period; ++k) {
    CHECK(dec.seasonal_indices[k] == doctest::Approx(pattern[k]).epsilon(1e-10));
  }
  const int half = period / 2;
  for (int t = 0; t < n; ++t) {
    CAPTURE(t);
    if (t < half || t >= n - half) {
      CHECK(std::isnan(dec.trend[t]));
      CHECK(std::isnan(dec.remainder[t]));
    } else {
      CHECK(dec.trend[t] == doctest::Approx(3.0 + 0.5 * t).epsilon(1e-10));
      CHECK(dec.remainder[t] == doctest::Approx(0.0).epsilon(1e-9));
    }
    CHECK(dec.seasonal[t] == doctest::Approx(pattern[t % period]).epsilon(1e-10));
  }
}

TEST_CASE("additive identity holds wherever trend is defined") {
  Eigen::VectorXd y(40);
  for (int t = 0; t < 40; ++t) {
    y[t] = 10 + 0.3 * t + 2 * std::sin(2 * M_PI * t / 12.0) + 0.1 * std::cos(3.7 * t);
  }
  const Decomposition dec = decompose({MonthIndex{2005, 1}, y}, 12);
  for (int t = 0; t < 40; ++t) {
    if (std::isfinite(dec.trend[t])) {
      CHECK(dec.observed[t] ==
            doctest::Approx(dec.trend[t] + dec.seasonal[t] + dec.remainder[t]).epsilon(1e-12));
    }
  }
  // NaN edges span exactly period/2 points on each side
  for (int t = 0; t < 6; ++t) CHECK(std::isnan(dec.trend[t]));
  for (int t = 34; t < 40; ++t) CHECK(std::isnan(dec.trend[t]));
  CHECK(std::isfinite(dec.trend[6]));
  CHECK(std::isfinite(dec.trend[33]));
}

TEST_CASE("seasonal assignment follows the calendar, not the array offset") {
  // Two series over the same months but different starts must agree on the
  // seasonal index attached to a given calendar month.
  Eigen::VectorXd y(48);
  for (int t = 0; t < 48; ++t) {
    y[t] = 5.0 * ((MonthIndex{2010, 1}.serial() + t) % 12 == 6) + 0.01 * t;
  }
  const Decomposition full = decompose({MonthIndex{2010, 1}, y}, 12);
  const Decomposition offset = decompose({MonthIndex{2010, 4}, Eigen::VectorXd(y.tail(45))}, 12);
  // July spike lands in the same seasonal position either way
  int spike_full = 0, spike_offset = 0;
  full.seasonal_indices.maxCoeff(&spike_full);
  offset.seasonal_indices.maxCoeff(&spike_offset);
  CHECK(spike_full == spike_offset);
}

TEST_CASE("constant series decomposes to zero seasonality") {
  const Decomposition dec = decompose({MonthIndex{2010, 1}, Eigen::VectorXd::Constant(30, 7.5)}, 12);
  CHECK(dec.seasonal_indices.lpNorm<Eigen::Infinity>() < 1e-12);
  CHECK(dec.trend[10] == doctest::Approx(7.5));
  CHECK(std::abs(dec.remainder[10]) < 1e-12);
}

TEST_CASE("decomposition input guards") {
  const MonthlySeries s{MonthIndex{2010, 1}, Eigen::VectorXd::LinSpaced(24, 0, 23)};
  CHECK_THROWS_AS(decompose(s, 1), RangeError);
  CHECK_THROWS_AS(decompose(s, 12), LengthError);  // needs 25 observations
  CHECK_NOTHROW(decompose({MonthIndex{2010, 1}, Eigen::VectorXd::LinSpaced(25, 0, 24)}, 12));
}

TEST_SUITE_END();
