#include "tsa/decomposition.hpp"

#include <cmath>
#include <limits>

namespace tsa {

Decomposition decompose(const MonthlySeries& series, int period) {
  if (period < 2) {
    throw RangeError("decomposition period must be >= 2");
  }
  const int n = static_cast<int>(series.size());
  if (n < 2 * period + 1) {
    throw LengthError("decomposition needs at least 2*period + 1 observations");
  }
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const Eigen::VectorXd& y = series.values();

  Decomposition dec;
  dec.start = series.start();
  dec.period = period;
  dec.observed = y;
  dec.trend = Eigen::VectorXd::Constant(n, nan);

  // Centered moving average; half-weights at both ends for even periods.
  const int half = period / 2;
  if (period % 2 == 0) {
    for (int t = half; t < n - half; ++t) {
      double sum = 0.5 * y[t - half] + 0.5 * y[t + half];
      for (int j = -half + 1; j <= half - 1; ++j) sum += y[t + j];
      dec.trend[t] = sum / period;
    }
  } else {
    for (int t = half; t < n - half; ++t) {
      double sum = 0;
      for (int j = -half; j <= half; ++j) sum += y[t + j];
      dec.trend[t] = sum / period;
    }
  }

  // Calendar position of observation i; for period 12 this is month-1.
  auto position = [&](int i) { return ((series.start().serial() + i) % period + period) % period; };

  Eigen::VectorXd sums = Eigen::VectorXd::Zero(period);
  Eigen::VectorXi counts = Eigen::VectorXi::Zero(period);
  for (int t = half; t < n - half; ++t) {
    sums[position(t)] += y[t] - dec.trend[t];
    counts[position(t)] += 1;
  }
  dec.seasonal_indices.resize(period);
  for (int k = 0; k < period; ++k) {
    dec.seasonal_indices[k] = counts[k] > 0 ? sums[k] / counts[k] : 0.0;
  }
  dec.seasonal_indices.array() -= dec.seasonal_indices.mean();

  dec.seasonal.resize(n);
  dec.remainder = Eigen::VectorXd::Constant(n, nan);
  for (int t = 0; t < n; ++t) {
    dec.seasonal[t] = dec.seasonal_indices[position(t)];
    if (std::isfinite(dec.trend[t])) {
      dec.remainder[t] = y[t] - dec.trend[t] - dec.seasonal[t];
    }
  }
  return dec;
}

}  // namespace tsa
