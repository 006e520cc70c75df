#include "tsa/identification.hpp"

#include <Eigen/Dense>
#include <array>
#include <cmath>

#include "tsa/stats.hpp"

namespace tsa {

namespace {

Eigen::VectorXd sample_acf(const Eigen::VectorXd& x, int max_lag) {
  const Eigen::Index n = x.size();
  const double mean = x.mean();
  const Eigen::VectorXd c = x.array() - mean;
  const double denom = c.squaredNorm();
  if (denom <= 0) {
    throw DegenerateError("zero-variance series has no correlogram");
  }
  Eigen::VectorXd r(max_lag);
  for (int k = 1; k <= max_lag; ++k) {
    r[k - 1] = c.head(n - k).dot(c.tail(n - k)) / denom;
  }
  return r;
}

}  // namespace

CorrelogramResult acf(const MonthlySeries& series, int max_lag, double level) {
  if (max_lag < 1 || max_lag >= series.size()) {
    throw RangeError("acf needs 1 <= max_lag < n");
  }
  CorrelogramResult out;
  out.values = sample_acf(series.values(), max_lag);
  out.lags.resize(max_lag);
  for (int k = 0; k < max_lag; ++k) out.lags[k] = k + 1;
  out.band = normal_quantile((1 + level) / 2) / std::sqrt(static_cast<double>(series.size()));
  return out;
}

CorrelogramResult pacf(const MonthlySeries& series, int max_lag, double level) {
  CorrelogramResult out = acf(series, max_lag, level);
  const Eigen::VectorXd& r = out.values;
  Eigen::VectorXd phi_prev(max_lag), phi_cur(max_lag), pac(max_lag);

  // Durbin-Levinson; pac[k-1] is the last coefficient of the order-k fit.
  pac[0] = r[0];
  phi_prev[0] = r[0];
  for (int k = 2; k <= max_lag; ++k) {
    double num = r[k - 1];
    double den = 1.0;
    for (int j = 1; j < k; ++j) {
      num -= phi_prev[j - 1] * r[k - 1 - j];
      den -= phi_prev[j - 1] * r[j - 1];
    }
    if (std::abs(den) < 1e-14) {
      throw NumericError("Durbin-Levinson breakdown at lag " + std::to_string(k));
    }
    const double phikk = num / den;
    for (int j = 1; j < k; ++j) {
      phi_cur[j - 1] = phi_prev[j - 1] - phikk * phi_prev[k - 1 - j];
    }
    phi_cur[k - 1] = phikk;
    pac[k - 1] = phikk;
    phi_prev.head(k) = phi_cur.head(k);
  }
  out.values = pac;
  return out;
}

namespace {

// Dickey-Fuller tau percentiles (Fuller 1976), one block per deterministic
// specification, rows for n = 25, 50, 100, 250, 500, inf.
constexpr std::array<double, 8> kTableProbs = {0.01, 0.025, 0.05, 0.10, 0.90, 0.95, 0.975, 0.99};
constexpr std::array<double, 6> kTableN = {25, 50, 100, 250, 500, 1e9};

constexpr double kTauNone[6][8] = {
    {-2.66, -2.26, -1.95, -1.60, 0.92, 1.33, 1.70, 2.16},
    {-2.62, -2.25, -1.95, -1.61, 0.91, 1.31, 1.66, 2.08},
    {-2.60, -2.24, -1.95, -1.61, 0.90, 1.29, 1.64, 2.03},
    {-2.58, -2.23, -1.95, -1.62, 0.89, 1.29, 1.63, 2.01},
    {-2.58, -2.23, -1.95, -1.62, 0.89, 1.28, 1.62, 2.00},
    {-2.58, -2.23, -1.95, -1.62, 0.89, 1.28, 1.62, 2.00},
};
constexpr double kTauDrift[6][8] = {
    {-3.75, -3.33, -3.00, -2.63, -0.37, 0.00, 0.34, 0.72},
    {-3.58, -3.22, -2.93, -2.60, -0.40, -0.03, 0.29, 0.66},
    {-3.51, -3.17, -2.89, -2.58, -0.42, -0.05, 0.26, 0.63},
    {-3.46, -3.14, -2.88, -2.57, -0.42, -0.06, 0.24, 0.62},
    {-3.44, -3.13, -2.87, -2.57, -0.43, -0.07, 0.24, 0.61},
    {-3.43, -3.12, -2.86, -2.57, -0.44, -0.07, 0.23, 0.60},
};
constexpr double kTauTrend[6][8] = {
    {-4.38, -3.95, -3.60, -3.24, -1.14, -0.80, -0.50, -0.15},
    {-4.15, -3.80, -3.50, -3.18, -1.19, -0.87, -0.58, -0.24},
    {-4.04, -3.73, -3.45, -3.15, -1.22, -0.90, -0.62, -0.28},
    {-3.99, -3.69, -3.43, -3.13, -1.23, -0.92, -0.64, -0.31},
    {-3.98, -3.68, -3.42, -3.13, -1.24, -0.93, -0.65, -0.32},
    {-3.96, -3.66, -3.41, -3.12, -1.25, -0.94, -0.66, -0.33},
};

std::pair<double, bool> adf_p_value(double stat, double n, AdfType type) {
  const auto& table = type == AdfType::NoDriftNoTrend ? kTauNone
                     : type == AdfType::DriftNoTrend  ? kTauDrift
                                                      : kTauTrend;
  // Size-adjust each percentile by linear interpolation in n.
  std::array<double, 8> cv{};
  std::size_t hi = 1;
  while (hi < kTableN.size() - 1 && kTableN[hi] < n) ++hi;
  const double n0 = kTableN[hi - 1];
  const double n1 = kTableN[hi];
  const double w = std::clamp((n - n0) / (n1 - n0), 0.0, 1.0);
  for (std::size_t j = 0; j < cv.size(); ++j) {
    cv[j] = (1 - w) * table[hi - 1][j] + w * table[hi][j];
  }
  if (stat <= cv.front()) return {0.01, true};
  if (stat >= cv.back()) return {0.99, true};
  std::size_t k = 1;
  while (stat > cv[k]) ++k;
  const double t = (stat - cv[k - 1]) / (cv[k] - cv[k - 1]);
  return {kTableProbs[k - 1] + t * (kTableProbs[k] - kTableProbs[k - 1]), false};
}

}  // namespace

std::vector<AdfResult> adf_test(const MonthlySeries& series, int max_lag, AdfType type) {
  if (max_lag < 0) {
    throw RangeError("adf_test needs max_lag >= 0");
  }
  const Eigen::VectorXd& y = series.values();
  const Eigen::Index n = y.size();
  const int det_terms = type == AdfType::NoDriftNoTrend ? 0 : type == AdfType::DriftNoTrend ? 1 : 2;
  if (n <= max_lag + 2 + det_terms) {
    throw LengthError("series too short for ADF with max_lag " + std::to_string(max_lag));
  }
  if ((y.array() - y.mean()).abs().maxCoeff() == 0) {
    throw DegenerateError("zero-variance series");
  }

  Eigen::VectorXd dy = y.tail(n - 1) - y.head(n - 1);

  std::vector<AdfResult> results;
  results.reserve(max_lag + 1);
  for (int lag = 0; lag <= max_lag; ++lag) {
    // Rows are dy[t] for t = lag .. n-2 (dy indexed from y[1]-y[0]).
    const Eigen::Index rows = dy.size() - lag;
    const Eigen::Index cols = 1 + lag + det_terms;
    Eigen::MatrixXd X(rows, cols);
    Eigen::VectorXd b = dy.tail(rows);
    X.col(0) = y.segment(lag, rows);  // level lagged one step behind each dy row
    for (int j = 1; j <= lag; ++j) {
      X.col(j) = dy.segment(lag - j, rows);
    }
    if (det_terms >= 1) X.col(1 + lag).setOnes();
    if (det_terms == 2) {
      X.col(2 + lag) = Eigen::VectorXd::LinSpaced(rows, 1, static_cast<double>(rows));
    }

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(X);
    if (qr.rank() < cols) {
      throw NumericError("singular ADF regression at lag " + std::to_string(lag));
    }
    const Eigen::VectorXd beta = qr.solve(b);
    const Eigen::VectorXd resid = b - X * beta;
    const double s2 = resid.squaredNorm() / static_cast<double>(rows - cols);
    const Eigen::MatrixXd xtx_inv =
        (X.transpose() * X).ldlt().solve(Eigen::MatrixXd::Identity(cols, cols));
    const double se = std::sqrt(s2 * xtx_inv(0, 0));
    const double stat = beta[0] / se;

    AdfResult r;
    r.type = type;
    r.lag = lag;
    r.statistic = stat;
    std::tie(r.p_value, r.p_clamped) = adf_p_value(stat, static_cast<double>(rows), type);
    results.push_back(r);
  }
  return results;
}

}  // namespace tsa
