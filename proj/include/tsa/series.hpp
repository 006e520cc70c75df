#pragma once

#include <Eigen/Core>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "tsa/error.hpp"

namespace tsa {

/// Calendar month on a Gregorian (year, month) axis with a total ordering.
struct MonthIndex {
  int year = 0;
  int month = 1;  // 1..12

  static MonthIndex of(int year, int month);

  /// Months since year 0; the series index arithmetic runs on this.
  [[nodiscard]] int serial() const { return year * 12 + (month - 1); }
  static MonthIndex from_serial(int serial);

  [[nodiscard]] MonthIndex plus(int months) const { return from_serial(serial() + months); }

  friend auto operator<=>(const MonthIndex& a, const MonthIndex& b) {
    return a.serial() <=> b.serial();
  }
  friend bool operator==(const MonthIndex& a, const MonthIndex& b) {
    return a.serial() == b.serial();
  }

  /// "YYYY-MM"
  [[nodiscard]] std::string str() const;
  static MonthIndex parse(std::string_view text);
};

/// Gap-free monthly series of finite real observations. Immutable after
/// construction; all operations below are pure functions.
class MonthlySeries {
public:
  MonthlySeries(MonthIndex start, Eigen::VectorXd values);
  MonthlySeries(MonthIndex start, const std::vector<double>& values);

  [[nodiscard]] Eigen::Index size() const { return values_.size(); }
  [[nodiscard]] MonthIndex start() const { return start_; }
  [[nodiscard]] MonthIndex end() const { return start_.plus(static_cast<int>(size()) - 1); }
  [[nodiscard]] const Eigen::VectorXd& values() const { return values_; }
  double operator[](Eigen::Index i) const { return values_[i]; }

  [[nodiscard]] MonthIndex month_at(Eigen::Index i) const {
    return start_.plus(static_cast<int>(i));
  }
  [[nodiscard]] bool contains(MonthIndex m) const {
    return m >= start_ && m <= end();
  }
  [[nodiscard]] double at(MonthIndex m) const;

private:
  MonthIndex start_;
  Eigen::VectorXd values_;
};

/// Bookkeeping needed to undo a differencing chain exactly. Ordinary passes
/// are applied first (each consuming one leading observation), then seasonal
/// passes (each consuming `period` observations); `retained_prefixes` holds
/// the consumed values in application order.
struct DiffContext {
  int ordinary_order = 0;
  int seasonal_order = 0;
  int period = 1;
  MonthIndex origin;  // start of the original, undifferenced series
  std::vector<Eigen::VectorXd> retained_prefixes;

  [[nodiscard]] int consumed() const { return ordinary_order + seasonal_order * period; }
};

/// Lagged difference: out[k] = in[k+lag] - in[k].
MonthlySeries difference(const MonthlySeries& series, int lag);

/// Applies d ordinary differences then D seasonal differences at `period`,
/// recording the context needed for exact inversion.
std::pair<MonthlySeries, DiffContext> difference_chain(const MonthlySeries& series, int d, int D,
                                                       int period);

/// Exact inverse of difference_chain.
MonthlySeries integrate(const MonthlySeries& diffed, const DiffContext& ctx);

/// Inclusive sub-series.
MonthlySeries slice(const MonthlySeries& series, MonthIndex from, MonthIndex to);

}  // namespace tsa
