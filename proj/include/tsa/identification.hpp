#pragma once

#include <Eigen/Core>
#include <vector>

#include "tsa/series.hpp"

namespace tsa {

/// Sample ACF or PACF with the +/- z / sqrt(n) white-noise band.
struct CorrelogramResult {
  std::vector<int> lags;       // 1..max_lag
  Eigen::VectorXd values;      // correlation at each lag
  double band = 0;             // half-width of the white-noise confidence band
};

/// Sample autocorrelations r_1..r_max_lag with the biased (divide-by-n)
/// covariance estimator.
CorrelogramResult acf(const MonthlySeries& series, int max_lag, double level = 0.95);

/// Partial autocorrelations via Durbin-Levinson applied to the sample ACF.
CorrelogramResult pacf(const MonthlySeries& series, int max_lag, double level = 0.95);

/// Deterministic regressors of the augmented Dickey-Fuller regression.
enum class AdfType {
  NoDriftNoTrend = 1,
  DriftNoTrend = 2,
  DriftAndTrend = 3,
};

struct AdfResult {
  AdfType type;
  int lag;
  double statistic;
  double p_value;    // clamped to [0.01, 0.99]
  bool p_clamped;    // true when the statistic fell outside the table range
};

/// ADF unit-root tests for lags 0..max_lag. The statistic is the t-ratio of
/// the lagged-level coefficient; p-values interpolate the Dickey-Fuller
/// response-surface tables for the requested deterministic-term type.
std::vector<AdfResult> adf_test(const MonthlySeries& series, int max_lag, AdfType type);

}  // namespace tsa
