#include "tsa/impact.hpp"

namespace tsa {

LossReport quantify_impact(const SarimaSpec& spec, const MonthlySeries& full_series,
                           MonthIndex train_end, int horizon) {
  if (horizon <= 0) {
    throw RangeError("impact horizon must be positive");
  }
  if (!full_series.contains(train_end)) {
    throw RangeError("train_end " + train_end.str() + " outside the series");
  }
  const MonthIndex last_needed = train_end.plus(horizon);
  if (!full_series.contains(last_needed)) {
    throw RangeError("horizon extends to " + last_needed.str() +
                     " but actuals stop at " + full_series.end().str());
  }

  const MonthlySeries train = slice(full_series, full_series.start(), train_end);
  FittedModel model = fit(spec, train);
  const ForecastResult fc = forecast(model, horizon, {});
  const MonthlySeries actual = slice(full_series, train_end.plus(1), last_needed);

  LossReport report{fc.months,
                    actual.values(),
                    fc.point,
                    fc.point - actual.values(),
                    actual.values().array() / fc.point.array(),
                    actual.values().sum(),
                    fc.point.sum(),
                    0,
                    model.coef,
                    model.se,
                    std::move(model)};
  report.aggregate_retained = report.aggregate_actual / report.aggregate_predicted;
  return report;
}

}  // namespace tsa
