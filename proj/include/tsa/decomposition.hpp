#pragma once

#include <Eigen/Core>

#include "tsa/series.hpp"

namespace tsa {

/// Classical additive decomposition. Trend and remainder are NaN on the
/// first/last period/2 points where the centered moving average is undefined;
/// seasonal indices are recentered to sum to zero.
struct Decomposition {
  MonthIndex start;
  int period = 0;
  Eigen::VectorXd observed;
  Eigen::VectorXd trend;      // NaN at the undefined edges
  Eigen::VectorXd seasonal;   // repeating seasonal indices
  Eigen::VectorXd remainder;  // NaN where trend is undefined
  Eigen::VectorXd seasonal_indices;  // length = period, sums to zero
};

Decomposition decompose(const MonthlySeries& series, int period);

}  // namespace tsa
