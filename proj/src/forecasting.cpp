#include "tsa/forecasting.hpp"

#include <cmath>

#include "tsa/arma_filter.hpp"
#include "tsa/spec_format.hpp"
#include "tsa/stats.hpp"

namespace tsa {

namespace {

// Coefficients delta_0..delta_J of (1-B)^d (1-B^s)^D, delta_0 = 1.
Eigen::VectorXd difference_polynomial(int d, int D, int s) {
  Eigen::VectorXd poly(1);
  poly[0] = 1;
  auto multiply = [&](const Eigen::VectorXd& q) {
    Eigen::VectorXd out = Eigen::VectorXd::Zero(poly.size() + q.size() - 1);
    for (Eigen::Index i = 0; i < poly.size(); ++i) {
      for (Eigen::Index j = 0; j < q.size(); ++j) out[i + j] += poly[i] * q[j];
    }
    poly = out;
  };
  Eigen::VectorXd ordinary(2);
  ordinary << 1, -1;
  Eigen::VectorXd seasonal = Eigen::VectorXd::Zero(s + 1);
  seasonal[0] = 1;
  seasonal[s] = -1;
  for (int i = 0; i < d; ++i) multiply(ordinary);
  for (int i = 0; i < D; ++i) multiply(seasonal);
  return poly;
}

}  // namespace

ForecastResult forecast(const FittedModel& model, int h, const std::vector<double>& levels) {
  if (h <= 0) {
    throw RangeError("forecast horizon must be positive");
  }
  for (double level : levels) {
    if (!(level > 0 && level < 1)) {
      throw RangeError("confidence levels must lie in (0,1)");
    }
  }

  const auto [ar_full, ma_full] = expand_polynomials(model.spec, model.coef);
  const int p = static_cast<int>(ar_full.size());
  const int q = static_cast<int>(ma_full.size());
  const Eigen::VectorXd& x = model.diffed.values();
  const int n = static_cast<int>(x.size());

  // Innovations from the exact filter stand in for the model's epsilons.
  const ArmaFilterResult filt = arma_innovations_filter(ar_full, ma_full, x);

  // ARMA forecasts on the differenced scale.
  Eigen::VectorXd xf(h);
  auto x_at = [&](int t) { return t < n ? x[t] : xf[t - n]; };          // t 0-based
  auto eps_at = [&](int t) { return t < n ? filt.innovations[t] : 0.0; };
  for (int step = 0; step < h; ++step) {
    const int t = n + step;
    double value = 0;
    for (int i = 1; i <= p; ++i) {
      if (t - i < 0) break;
      value += ar_full[i - 1] * x_at(t - i);
    }
    for (int j = 1; j <= q; ++j) {
      if (t - j < 0) break;
      value += ma_full[j - 1] * eps_at(t - j);
    }
    xf[step] = value;
  }

  // Undo differencing with the training tail.
  const MonthlySeries train = integrate(model.diffed, model.ctx);
  const Eigen::VectorXd delta =
      difference_polynomial(model.spec.d, model.spec.D, model.spec.s);
  const int J = static_cast<int>(delta.size()) - 1;
  const Eigen::VectorXd& y = train.values();
  const int ny = static_cast<int>(y.size());
  Eigen::VectorXd yf(h);
  auto y_at = [&](int t) { return t < ny ? y[t] : yf[t - ny]; };
  for (int step = 0; step < h; ++step) {
    const int t = ny + step;
    double value = xf[step];
    for (int j = 1; j <= J; ++j) {
      value -= delta[j] * y_at(t - j);
    }
    yf[step] = value;
  }

  // Psi weights of the integrated model accumulate the forecast variance.
  Eigen::VectorXd phi_total = convolve_lag_polynomials(ar_full, -delta.tail(J), true);
  const Eigen::VectorXd psi = psi_weights(phi_total, ma_full, h - 1);
  ForecastResult out;
  out.point = yf;
  out.se.resize(h);
  double acc = 0;
  for (int step = 0; step < h; ++step) {
    acc += psi[step] * psi[step];
    out.se[step] = std::sqrt(model.sigma2 * acc);
  }
  out.months.reserve(h);
  const MonthIndex last = train.end();
  for (int step = 1; step <= h; ++step) out.months.push_back(last.plus(step));
  for (double level : levels) {
    IntervalBand band;
    band.level = level;
    const double z = normal_quantile((1 + level) / 2);
    band.lower = out.point - z * out.se;
    band.upper = out.point + z * out.se;
    out.intervals.push_back(std::move(band));
  }
  return out;
}

AccuracyTable accuracy(const std::vector<FittedModel>& models, const MonthlySeries& truth) {
  AccuracyTable table;
  table.window_start = truth.start();
  table.window_end = truth.end();
  const int h = static_cast<int>(truth.size());
  for (const FittedModel& model : models) {
    const MonthlySeries train = integrate(model.diffed, model.ctx);
    if (train.end().plus(1) != truth.start()) {
      throw RangeError("model trained through " + train.end().str() +
                       " cannot be scored on a window starting " + truth.start().str());
    }
    const ForecastResult fc = forecast(model, h, {});
    const Eigen::ArrayXd err = truth.values().array() - fc.point.array();
    AccuracyRow row;
    row.model_label = render_spec(model.spec);
    row.mse = err.square().mean();
    row.rmse = std::sqrt(row.mse);
    row.mae = err.abs().mean();
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace tsa
