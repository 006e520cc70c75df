#pragma once

#include <Eigen/Core>
#include <vector>

#include "tsa/forecasting.hpp"
#include "tsa/sarima.hpp"

namespace tsa {

/// Counterfactual event-loss report: the model is refit on pre-event data,
/// its forecast over the event window is compared with what actually
/// happened, and the difference is attributed to the event.
struct LossReport {
  std::vector<MonthIndex> months;
  Eigen::VectorXd actual;
  Eigen::VectorXd predicted;  // counterfactual forecast
  Eigen::VectorXd loss;       // predicted - actual
  Eigen::VectorXd retained;   // actual / predicted
  double aggregate_actual = 0;
  double aggregate_predicted = 0;
  double aggregate_retained = 0;
  CoefficientSet refit_coef;
  CoefficientSet refit_se;
  FittedModel refit;
};

/// Refits `spec` on full_series up to train_end, forecasts `horizon` months,
/// and assembles the loss report against the actual observations.
LossReport quantify_impact(const SarimaSpec& spec, const MonthlySeries& full_series,
                           MonthIndex train_end, int horizon);

}  // namespace tsa
