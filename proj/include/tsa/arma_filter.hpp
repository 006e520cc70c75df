#pragma once

#include <Eigen/Core>

namespace tsa {

/// Output of the exact innovations recursion for a zero-mean stationary ARMA
/// process, run with unit innovation variance. `v` holds the one-step
/// prediction error variances (in units of sigma2), `innovations` the raw
/// one-step errors x_t - x_hat_t.
struct ArmaFilterResult {
  Eigen::VectorXd innovations;
  Eigen::VectorXd v;
  double sum_log_v = 0;
  double sigma2_hat = 0;  // concentrated MLE of the innovation variance
  double css = 0;         // sum of innovations^2 / v

  /// Log-likelihood at a given innovation variance.
  [[nodiscard]] double loglik_at(double sigma2) const;
  /// Log-likelihood with sigma2 concentrated out (evaluated at sigma2_hat).
  [[nodiscard]] double loglik_concentrated() const;
};

/// Exact finite-sample innovations recursion (Ansley-transformed process) for
/// the ARMA model (1 - sum phi B) x = (1 + sum theta B) z with stationary
/// initialization. Throws NumericError when the AR polynomial is not
/// stationary.
ArmaFilterResult arma_innovations_filter(const Eigen::VectorXd& phi, const Eigen::VectorXd& theta,
                                         const Eigen::VectorXd& x);

/// Psi weights psi_0..psi_n of theta(B)/phi(B) (MA-infinity representation);
/// phi may be non-stationary here, the expansion is formal.
Eigen::VectorXd psi_weights(const Eigen::VectorXd& phi, const Eigen::VectorXd& theta, int n);

/// Coefficient vector of the product of two lag polynomials, both written in
/// the 1 - sum a_i B^i convention when ar_convention is true, or 1 + sum
/// otherwise. The result uses the same convention.
Eigen::VectorXd convolve_lag_polynomials(const Eigen::VectorXd& a, const Eigen::VectorXd& b,
                                         bool ar_convention);

}  // namespace tsa
