#pragma once

#include <Eigen/Core>
#include <vector>

#include "tsa/sarima.hpp"

namespace tsa {

struct IntervalBand {
  double level = 0;        // e.g. 0.95
  Eigen::VectorXd lower;   // per horizon step
  Eigen::VectorXd upper;
};

/// Point forecasts with per-step standard errors and interval bands, all on
/// the original (integrated) scale.
struct ForecastResult {
  std::vector<MonthIndex> months;
  Eigen::VectorXd point;
  Eigen::VectorXd se;                  // forecast standard error per step
  std::vector<IntervalBand> intervals; // one band per requested level
};

/// Minimum-MSE linear forecasts of the fitted SARIMA: the ARMA forecast on
/// the differenced scale is integrated through the model's differencing
/// context, and interval half-widths come from the psi weights of the full
/// integrated model. Gaussian innovations; parameter uncertainty ignored.
ForecastResult forecast(const FittedModel& model, int h, const std::vector<double>& levels = {0.80, 0.95});

struct AccuracyRow {
  std::string model_label;
  double mse = 0;
  double rmse = 0;
  double mae = 0;
};

struct AccuracyTable {
  MonthIndex window_start, window_end;
  std::vector<AccuracyRow> rows;
};

/// Forecast-accuracy comparison of fitted models over a common truth window.
/// Every model must have been trained up to the month before truth starts.
AccuracyTable accuracy(const std::vector<FittedModel>& models, const MonthlySeries& truth);

}  // namespace tsa
