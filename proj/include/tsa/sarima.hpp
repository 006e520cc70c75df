#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tsa/series.hpp"

namespace tsa {

enum class CoefKind { Ar, Ma, Sar, Sma };

std::string coef_name(CoefKind kind, int index);

/// One coefficient slot, e.g. {Sar, 3} for sar3.
struct CoefId {
  CoefKind kind;
  int index;  // 1-based within its factor

  friend bool operator==(const CoefId&, const CoefId&) = default;
};

/// Multiplicative seasonal ARIMA orders plus a sparsity mask of coefficient
/// slots pinned to exactly zero.
struct SarimaSpec {
  int p = 0, d = 0, q = 0;
  int P = 0, D = 0, Q = 0;
  int s = 1;
  std::vector<CoefId> mask;

  /// Throws if orders are negative, s < 1, or a mask entry names a slot
  /// outside the orders.
  void validate() const;

  [[nodiscard]] bool is_masked(CoefKind kind, int index) const;
  [[nodiscard]] int coefficient_count() const { return p + q + P + Q; }
  [[nodiscard]] int free_count() const {
    return coefficient_count() - static_cast<int>(mask.size());
  }
};

/// Factor coefficients; masked entries are held at exactly zero.
struct CoefficientSet {
  Eigen::VectorXd ar, ma, sar, sma;

  static CoefficientSet zeros(const SarimaSpec& spec);
};

/// Coefficients of the expanded polynomials phi(B)*PHI(B^s) and
/// theta(B)*THETA(B^s). Convention: AR polynomial 1 - sum phi_i B^i,
/// MA polynomial 1 + sum theta_j B^j; the returned vectors hold phi_i and
/// theta_j for i = 1..p+s*P, j = 1..q+s*Q.
std::pair<Eigen::VectorXd, Eigen::VectorXd> expand_polynomials(const SarimaSpec& spec,
                                                               const CoefficientSet& coef);

/// Stationary autocovariances gamma_0..gamma_nlags of the ARMA process
/// (1 - sum phi B) x = (1 + sum theta B) z with Var(z) = sigma2.
Eigen::VectorXd arma_autocovariance(const Eigen::VectorXd& phi, const Eigen::VectorXd& theta,
                                    double sigma2, int nlags);

/// True when the polynomial 1 - sum phi_i B^i has all roots outside the unit
/// circle.
bool polynomial_stationary(const Eigen::VectorXd& phi);

/// Exact Gaussian log-likelihood of the differenced series under the ARMA
/// implied by (spec, coef) with innovation variance sigma2, evaluated by the
/// innovations recursion with exact stationary initialization.
double log_likelihood(const SarimaSpec& spec, const CoefficientSet& coef, double sigma2,
                      const MonthlySeries& diffed);

struct FittedModel {
  SarimaSpec spec;
  CoefficientSet coef;
  CoefficientSet se;         // masked slots reported as 0
  bool se_available = true;  // false when the observed information was not PD
  double sigma2 = 0;
  double loglik = 0;
  double aic = 0, bic = 0, aicc = 0;
  MonthlySeries residuals;   // standardized innovations on the differenced scale
  MonthlySeries diffed;      // differenced training series entering the likelihood
  DiffContext ctx;
  int n_effective = 0;

  /// |coef| >= 2 se and not masked.
  [[nodiscard]] bool significant(CoefKind kind, int index) const;
};

/// Exact maximum-likelihood fit; sigma2 is concentrated out, masked slots are
/// excluded from the search and the information matrix, and no mean term is
/// included (d + D >= 1 throughout this toolkit's use).
FittedModel fit(const SarimaSpec& spec, const MonthlySeries& train);

struct InformationCriteria {
  double aic, bic, aicc;
};
InformationCriteria information_criteria(double loglik, int k, int n);

/// Deterministic SARIMA sample path: ARMA on the differenced scale with a
/// burn-in, then integrated per d, D from zero initial levels.
MonthlySeries simulate(const SarimaSpec& spec, const CoefficientSet& coef, double sigma2, int n,
                       std::uint64_t seed, MonthIndex start = MonthIndex{2000, 1});

/// The persisted view of a fit: everything except the training data itself.
struct ModelDocument {
  SarimaSpec spec;
  CoefficientSet coef;
  CoefficientSet se;
  bool se_available = true;
  double sigma2 = 0;
  double loglik = 0;
  int n_effective = 0;
  DiffContext ctx;
  MonthIndex train_start, train_end;

  static ModelDocument from_fit(const FittedModel& model);
};

/// Serialize to the versioned text document format (full precision).
std::string render_model(const ModelDocument& doc);

/// Parse the text document back; exact round-trip of every stored number.
ModelDocument parse_model(const std::string& text);

/// Rebuild a usable FittedModel from a persisted document plus a series
/// covering its training window; residuals are recomputed at the stored
/// coefficients, everything else is taken from the document.
FittedModel rehydrate(const ModelDocument& doc, const MonthlySeries& series);

}  // namespace tsa
