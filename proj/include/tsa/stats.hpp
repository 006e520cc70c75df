#pragma once

#include <Eigen/Core>

#include "tsa/error.hpp"

namespace tsa {

/// Standard normal CDF.
double normal_cdf(double x);

/// Inverse standard normal CDF. Rational approximation refined with one
/// Halley step; absolute error well below 1e-9 across (0,1).
double normal_quantile(double p);

/// Upper tail of the chi-square distribution with df degrees of freedom.
double chi_square_upper_tail(double x, double df);

/// Regularized lower incomplete gamma P(a, x).
double gamma_p(double a, double x);

/// Sample moments of a vector: mean, biased variance (divide by n),
/// skewness, and kurtosis (not excess).
struct Moments {
  double mean = 0;
  double variance = 0;
  double skewness = 0;
  double kurtosis = 0;
};
Moments sample_moments(const Eigen::VectorXd& x);

}  // namespace tsa
