#include "tsa/arma_filter.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <vector>

#include "tsa/error.hpp"
#include "tsa/sarima.hpp"

namespace tsa {

double ArmaFilterResult::loglik_at(double sigma2) const {
  const double n = static_cast<double>(innovations.size());
  return -0.5 * n * std::log(2 * M_PI * sigma2) - 0.5 * sum_log_v - css / (2 * sigma2);
}

double ArmaFilterResult::loglik_concentrated() const {
  const double n = static_cast<double>(innovations.size());
  return -0.5 * n * (std::log(2 * M_PI * sigma2_hat) + 1.0) - 0.5 * sum_log_v;
}

bool polynomial_stationary(const Eigen::VectorXd& phi) {
  // Inverse Durbin-Levinson: stationary iff every implied partial
  // autocorrelation lies strictly inside (-1, 1).
  const int p = static_cast<int>(phi.size());
  Eigen::VectorXd work = phi;
  for (int k = p; k >= 1; --k) {
    const double pac = work[k - 1];
    if (!(std::abs(pac) < 1.0) || !std::isfinite(pac)) return false;
    if (k == 1) break;
    Eigen::VectorXd prev(k - 1);
    const double denom = 1.0 - pac * pac;
    for (int j = 1; j < k; ++j) {
      prev[j - 1] = (work[j - 1] + pac * work[k - 1 - j]) / denom;
    }
    work.head(k - 1) = prev;
  }
  return true;
}

Eigen::VectorXd psi_weights(const Eigen::VectorXd& phi, const Eigen::VectorXd& theta, int n) {
  const int p = static_cast<int>(phi.size());
  const int q = static_cast<int>(theta.size());
  Eigen::VectorXd psi = Eigen::VectorXd::Zero(n + 1);
  psi[0] = 1;
  for (int j = 1; j <= n; ++j) {
    double v = j <= q ? theta[j - 1] : 0.0;
    for (int i = 1; i <= std::min(j, p); ++i) {
      v += phi[i - 1] * psi[j - i];
    }
    psi[j] = v;
  }
  return psi;
}

Eigen::VectorXd convolve_lag_polynomials(const Eigen::VectorXd& a, const Eigen::VectorXd& b,
                                         bool ar_convention) {
  const double sign = ar_convention ? -1.0 : 1.0;
  Eigen::VectorXd c = Eigen::VectorXd::Zero(a.size() + b.size());
  c.head(a.size()) += a;
  c.segment(0, b.size()) += b;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    for (Eigen::Index j = 0; j < b.size(); ++j) {
      c[i + j + 1] += sign * a[i] * b[j];
    }
  }
  return c;
}

Eigen::VectorXd arma_autocovariance(const Eigen::VectorXd& phi, const Eigen::VectorXd& theta,
                                    double sigma2, int nlags) {
  if (!polynomial_stationary(phi)) {
    throw NumericError("AR polynomial is not stationary; autocovariances undefined");
  }
  const int p = static_cast<int>(phi.size());
  const int q = static_cast<int>(theta.size());
  const Eigen::VectorXd psi = psi_weights(phi, theta, q);

  // RHS of gamma_k - sum_i phi_i gamma_{k-i} = sigma2 * sum_{j>=k} theta_j psi_{j-k}.
  auto rhs = [&](int k) {
    double v = 0;
    for (int j = k; j <= q; ++j) {
      const double th = j == 0 ? 1.0 : theta[j - 1];
      v += th * psi[j - k];
    }
    return sigma2 * v;
  };

  Eigen::VectorXd gamma(std::max(nlags + 1, p + 1));
  if (p == 0) {
    for (int k = 0; k <= std::min(nlags, q); ++k) gamma[k] = rhs(k);
    for (int k = q + 1; k <= nlags; ++k) gamma[k] = 0;
  } else {
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(p + 1, p + 1);
    Eigen::VectorXd b(p + 1);
    for (int k = 0; k <= p; ++k) {
      A(k, k) += 1.0;
      for (int i = 1; i <= p; ++i) {
        A(k, std::abs(k - i)) -= phi[i - 1];
      }
      b[k] = rhs(k);
    }
    const Eigen::VectorXd head = A.partialPivLu().solve(b);
    gamma.head(p + 1) = head;
    for (int k = p + 1; k <= nlags; ++k) {
      double v = k <= q ? rhs(k) : 0.0;
      for (int i = 1; i <= p; ++i) {
        v += phi[i - 1] * gamma[k - i];
      }
      gamma[k] = v;
    }
  }
  return gamma.head(nlags + 1);
}

ArmaFilterResult arma_innovations_filter(const Eigen::VectorXd& phi, const Eigen::VectorXd& theta,
                                         const Eigen::VectorXd& x) {
  const int p = static_cast<int>(phi.size());
  const int q = static_cast<int>(theta.size());
  const int n = static_cast<int>(x.size());
  const int m = std::max(p, q);

  const Eigen::VectorXd gamma = arma_autocovariance(phi, theta, 1.0, std::max(m, p + q) + 1);
  std::vector<double> th(q + 1);
  th[0] = 1;
  for (int j = 1; j <= q; ++j) th[j] = theta[j - 1];

  // Covariance kernel of the AR-filtered (Ansley) process, 1-based, i >= j.
  auto kappa = [&](int i, int j) -> double {
    const int h = i - j;
    if (i <= m) return gamma[h];
    if (j <= m) {
      if (h > q) return 0.0;
      double v = gamma[h];
      for (int r = 1; r <= p; ++r) v -= phi[r - 1] * gamma[std::abs(h - r)];
      return v;
    }
    if (h > q) return 0.0;
    double v = 0;
    for (int r = 0; r + h <= q; ++r) v += th[r] * th[r + h];
    return v;
  };

  // Innovations recursion; row t keeps Theta_{t,1..}, truncated to the MA
  // bandwidth once t >= m.
  std::vector<std::vector<double>> Theta(n);
  Eigen::VectorXd v(n);
  v[0] = kappa(1, 1);
  if (!(v[0] > 0)) {
    throw NumericError("innovations recursion: non-positive initial variance");
  }
  for (int t = 1; t < n; ++t) {
    const int lo = t >= m ? std::max(0, t - q) : 0;
    Theta[t].assign(t - lo, 0.0);
    for (int k = lo; k < t; ++k) {
      double sum = 0;
      const int klo = k >= m ? std::max(0, k - q) : 0;
      for (int j = std::max(lo, klo); j < k; ++j) {
        sum += Theta[k][j - klo] * Theta[t][j - lo] * v[j];
      }
      Theta[t][k - lo] = (kappa(t + 1, k + 1) - sum) / v[k];
    }
    double vt = kappa(t + 1, t + 1);
    for (int j = lo; j < t; ++j) {
      vt -= Theta[t][j - lo] * Theta[t][j - lo] * v[j];
    }
    if (!(vt > 0) || !std::isfinite(vt)) {
      throw NumericError("innovations recursion: prediction variance collapsed");
    }
    v[t] = vt;
  }

  // Transformed observations.
  Eigen::VectorXd w(n);
  for (int t = 1; t <= n; ++t) {
    if (t <= m) {
      w[t - 1] = x[t - 1];
    } else {
      double val = x[t - 1];
      for (int r = 1; r <= p; ++r) val -= phi[r - 1] * x[t - 1 - r];
      w[t - 1] = val;
    }
  }

  ArmaFilterResult out;
  out.innovations.resize(n);
  out.v = v;
  out.innovations[0] = w[0];
  for (int t = 1; t < n; ++t) {
    const int lo = t >= m ? std::max(0, t - q) : 0;
    double pred = 0;
    for (int k = lo; k < t; ++k) {
      // Theta_{t, t-k} multiplies innovation k (0-based).
      pred += Theta[t][k - lo] * out.innovations[k];
    }
    out.innovations[t] = w[t] - pred;
  }
  out.sum_log_v = v.array().log().sum();
  out.css = (out.innovations.array().square() / v.array()).sum();
  out.sigma2_hat = out.css / n;
  return out;
}

}  // namespace tsa
