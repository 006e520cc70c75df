#include "tsa/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tsa/stats.hpp"

namespace tsa {

LjungBoxCurve ljung_box(const MonthlySeries& residuals, int max_lag, int fitdf) {
  if (max_lag < 1 || max_lag >= residuals.size()) {
    throw RangeError("ljung_box needs 1 <= max_lag < n");
  }
  if (fitdf < 0) {
    throw RangeError("fitdf must be non-negative");
  }
  const double n = static_cast<double>(residuals.size());
  const Eigen::VectorXd r = acf(residuals, max_lag).values;  // throws on zero variance

  LjungBoxCurve curve;
  curve.fitdf = fitdf;
  curve.lags.resize(max_lag);
  curve.statistics.resize(max_lag);
  curve.p_values.resize(max_lag);
  double q = 0;
  for (int L = 1; L <= max_lag; ++L) {
    q += r[L - 1] * r[L - 1] / (n - L);
    curve.lags[L - 1] = L;
    curve.statistics[L - 1] = n * (n + 2) * q;
    curve.p_values[L - 1] =
        L > fitdf ? chi_square_upper_tail(curve.statistics[L - 1], L - fitdf)
                  : std::numeric_limits<double>::quiet_NaN();
  }
  return curve;
}

std::pair<double, double> shapiro_wilk(const Eigen::VectorXd& sample) {
  const int n = static_cast<int>(sample.size());
  if (n < 3 || n > 5000) {
    throw RangeError("Shapiro-Wilk requires 3 <= n <= 5000");
  }
  Eigen::VectorXd x = sample;
  std::sort(x.data(), x.data() + n);
  if (x[n - 1] - x[0] <= 0) {
    throw DegenerateError("Shapiro-Wilk undefined for a constant sample");
  }

  // Royston's AS R94 weights.
  Eigen::VectorXd m(n);
  for (int i = 1; i <= n; ++i) {
    m[i - 1] = normal_quantile((i - 0.375) / (n + 0.25));
  }
  const double ssq = m.squaredNorm();
  Eigen::VectorXd a(n);
  if (n == 3) {
    a[0] = -std::sqrt(0.5);
    a[1] = 0;
    a[2] = std::sqrt(0.5);
  } else {
    const double u = 1.0 / std::sqrt(static_cast<double>(n));
    const double cn = m[n - 1] / std::sqrt(ssq);
    const double an =
        cn + 0.221157 * u - 0.147981 * u * u - 2.071190 * u * u * u +
        4.434685 * u * u * u * u - 2.706056 * u * u * u * u * u;
    if (n <= 5) {
      const double phi = (ssq - 2 * m[n - 1] * m[n - 1]) / (1 - 2 * an * an);
      for (int i = 1; i < n - 1; ++i) a[i] = m[i] / std::sqrt(phi);
      a[n - 1] = an;
      a[0] = -an;
    } else {
      const double cn1 = m[n - 2] / std::sqrt(ssq);
      const double an1 =
          cn1 + 0.042981 * u - 0.293762 * u * u - 1.752461 * u * u * u +
          5.682633 * u * u * u * u - 3.582633 * u * u * u * u * u;
      const double phi = (ssq - 2 * m[n - 1] * m[n - 1] - 2 * m[n - 2] * m[n - 2]) /
                         (1 - 2 * an * an - 2 * an1 * an1);
      for (int i = 2; i < n - 2; ++i) a[i] = m[i] / std::sqrt(phi);
      a[n - 1] = an;
      a[n - 2] = an1;
      a[0] = -an;
      a[1] = -an1;
    }
  }

  const double mean = x.mean();
  const double num = a.dot(x);
  const double den = (x.array() - mean).square().sum();
  double w = num * num / den;
  w = std::min(w, 1.0);

  double p;
  if (n == 3) {
    p = 6.0 / M_PI * (std::asin(std::sqrt(w)) - std::asin(std::sqrt(0.75)));
    p = std::clamp(p, 0.0, 1.0);
  } else if (n <= 11) {
    const double g = -2.273 + 0.459 * n;
    const double wl = -std::log(g - std::log1p(-w));
    const double mu = 0.5440 - 0.39978 * n + 0.025054 * n * n - 0.0006714 * n * n * n;
    const double sigma = std::exp(1.3822 - 0.77857 * n + 0.062767 * n * n - 0.0020322 * n * n * n);
    p = 1 - normal_cdf((wl - mu) / sigma);
  } else {
    const double u = std::log(static_cast<double>(n));
    const double wl = std::log1p(-w);
    const double mu = -1.5861 - 0.31082 * u - 0.083751 * u * u + 0.0038915 * u * u * u;
    const double sigma = std::exp(-0.4803 - 0.082676 * u + 0.0030302 * u * u);
    p = 1 - normal_cdf((wl - mu) / sigma);
  }
  return {w, p};
}

std::pair<double, double> jarque_bera(const Eigen::VectorXd& sample) {
  const int n = static_cast<int>(sample.size());
  if (n < 8) {
    throw RangeError("Jarque-Bera requires n >= 8");
  }
  const Moments m = sample_moments(sample);
  if (m.variance <= 0) {
    throw DegenerateError("Jarque-Bera undefined for a constant sample");
  }
  const double jb =
      n / 6.0 * (m.skewness * m.skewness + 0.25 * (m.kurtosis - 3) * (m.kurtosis - 3));
  return {jb, chi_square_upper_tail(jb, 2)};
}

DiagnosticsBundle residual_diagnostics(const FittedModel& model, int max_lag) {
  const MonthlySeries& resid = model.residuals;
  const int n = static_cast<int>(resid.size());
  const int fitdf = model.spec.free_count();

  DiagnosticsBundle bundle{ljung_box(resid, max_lag, fitdf),
                           NormalityReport{},
                           acf(resid, max_lag),
                           Eigen::VectorXd(n),
                           Eigen::VectorXd(n)};

  const auto [w, wp] = shapiro_wilk(resid.values());
  const auto [jb, jbp] = jarque_bera(resid.values());
  const Moments m = sample_moments(resid.values());
  bundle.normality = NormalityReport{w, wp, jb, jbp, m.skewness, m.kurtosis};

  bundle.qq_empirical = resid.values();
  std::sort(bundle.qq_empirical.data(), bundle.qq_empirical.data() + n);
  for (int i = 1; i <= n; ++i) {
    bundle.qq_theoretical[i - 1] = normal_quantile((i - 0.5) / n);
  }
  return bundle;
}

}  // namespace tsa
