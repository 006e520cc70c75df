#pragma once

#include <Eigen/Core>
#include <vector>

#include "tsa/identification.hpp"
#include "tsa/sarima.hpp"

namespace tsa {

/// Ljung-Box portmanteau statistics across lags 1..L with the fitted-model
/// degrees-of-freedom correction. p-values are defined only for lag > fitdf.
struct LjungBoxCurve {
  std::vector<int> lags;
  Eigen::VectorXd statistics;
  Eigen::VectorXd p_values;  // NaN where undefined (lag <= fitdf)
  int fitdf = 0;
};

LjungBoxCurve ljung_box(const MonthlySeries& residuals, int max_lag, int fitdf);

/// Shapiro-Wilk W and its p-value (Royston's approximation, 3 <= n <= 5000).
std::pair<double, double> shapiro_wilk(const Eigen::VectorXd& sample);

/// Jarque-Bera statistic and chi-square(2) upper-tail p-value.
std::pair<double, double> jarque_bera(const Eigen::VectorXd& sample);

struct NormalityReport {
  double shapiro_w = 0, shapiro_p = 0;
  double jb_stat = 0, jb_p = 0;
  double skewness = 0;
  double kurtosis = 0;  // not excess
};

/// Full residual-adequacy bundle for a fitted model.
struct DiagnosticsBundle {
  LjungBoxCurve ljung_box;
  NormalityReport normality;
  CorrelogramResult residual_acf;
  Eigen::VectorXd qq_theoretical;  // standard-normal quantiles at (i-0.5)/n
  Eigen::VectorXd qq_empirical;    // sorted residuals
};

DiagnosticsBundle residual_diagnostics(const FittedModel& model, int max_lag = 24);

}  // namespace tsa
