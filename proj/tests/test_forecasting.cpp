#include <cmath>

#include "doctest.h"
#include "fixtures.hpp"
#include "tsa/forecasting.hpp"
#include "tsa/sarima.hpp"
#include "tsa/spec_format.hpp"
#include "tsa/stats.hpp"

using namespace tsa;

namespace {

// Builds a model by hand at known coefficients, bypassing estimation.
FittedModel manual_model(const SarimaSpec& spec, const CoefficientSet& coef, double sigma2,
                         const MonthlySeries& train) {
  auto [diffed, ctx] = difference_chain(train, spec.d, spec.D, spec.s);
  const double ll = log_likelihood(spec, coef, sigma2, diffed);
  return FittedModel{spec,
                     coef,
                     CoefficientSet::zeros(spec),
                     false,
                     sigma2,
                     ll,
                     0,
                     0,
                     0,
                     diffed,  // stands in for residuals; unused by forecast()
                     diffed,
                     ctx,
                     static_cast<int>(diffed.size())};
}

}  // namespace

TEST_SUITE_BEGIN("forecasting");

TEST_CASE("AR(1) forecasts decay geometrically with exact variances") {
  const SarimaSpec spec = parse_spec("(1,0,0)x(0,0,0)1");
  CoefficientSet coef = CoefficientSet::zeros(spec);
  const double phi = 0.6;
  const double s2 = 2.0;
  coef.ar << phi;
  const MonthlySeries train{MonthIndex{2010, 1}, fixtures::x50};
  const FittedModel model = manual_model(spec, coef, s2, train);
  const ForecastResult fc = forecast(model, 5);

  const double xn = fixtures::x50.back();
  double var = 0;
  for (int h = 1; h <= 5; ++h) {
    CAPTURE(h);
    CHECK(fc.point[h - 1] == doctest::Approx(std::pow(phi, h) * xn).epsilon(1e-12));
    var += s2 * std::pow(phi, 2 * (h - 1));
    CHECK(fc.se[h - 1] == doctest::Approx(std::sqrt(var)).epsilon(1e-12));
    CHECK(fc.months[h - 1] == train.end().plus(h));
  }
  CHECK(fc.se[0] == doctest::Approx(std::sqrt(s2)).epsilon(1e-13));
}

TEST_CASE("random-walk forecasts are flat with sqrt-h standard errors") {
  const SarimaSpec spec = parse_spec("(0,1,0)x(0,0,0)1");
  const CoefficientSet coef = CoefficientSet::zeros(spec);
  const MonthlySeries train{MonthIndex{2015, 6}, fixtures::y100};
  const FittedModel model = manual_model(spec, coef, 1.7, train);
  const ForecastResult fc = forecast(model, 8);
  const double last = fixtures::y100.back();
  for (int h = 1; h <= 8; ++h) {
    CHECK(fc.point[h - 1] == doctest::Approx(last).epsilon(1e-12));
    CHECK(fc.se[h - 1] == doctest::Approx(std::sqrt(1.7 * h)).epsilon(1e-12));
  }
}

TEST_CASE("seasonal random-walk repeats the last seasonal cycle") {
  const SarimaSpec spec = parse_spec("(0,0,0)x(0,1,0)4");
  const CoefficientSet coef = CoefficientSet::zeros(spec);
  const MonthlySeries train{MonthIndex{2018, 1}, fixtures::r60};
  const FittedModel model = manual_model(spec, coef, 1.0, train);
  const ForecastResult fc = forecast(model, 6);
  const int n = static_cast<int>(fixtures::r60.size());
  for (int h = 1; h <= 6; ++h) {
    const int src = n - 4 + (h - 1) % 4;
    CHECK(fc.point[h - 1] == doctest::Approx(fixtures::r60[src]).epsilon(1e-12));
  }
}

TEST_CASE("interval bands are symmetric, nested, and normal-scaled") {
  const SarimaSpec spec = parse_spec("(0,1,1)x(1,1,0)12");
  CoefficientSet truth = CoefficientSet::zeros(spec);
  truth.ma << -0.5;
  truth.sar << -0.4;
  const MonthlySeries path = simulate(spec, truth, 1.0, 150, 4);
  const FittedModel model = fit(spec, path);
  const ForecastResult fc = forecast(model, 12, {0.80, 0.95});
  REQUIRE(fc.intervals.size() == 2);
  const IntervalBand& b80 = fc.intervals[0];
  const IntervalBand& b95 = fc.intervals[1];
  const double z80 = normal_quantile(0.90);
  const double z95 = normal_quantile(0.975);
  for (int h = 0; h < 12; ++h) {
    CAPTURE(h);
    CHECK(b80.lower[h] < b95.upper[h]);
    CHECK(b95.lower[h] <= b80.lower[h]);
    CHECK(b80.upper[h] <= b95.upper[h]);
    CHECK(b80.upper[h] - b80.lower[h] ==
          doctest::Approx(2 * z80 * fc.se[h]).epsilon(1e-10));
    CHECK(b95.upper[h] - fc.point[h] == doctest::Approx(z95 * fc.se[h]).epsilon(1e-10));
    if (h > 0) CHECK(fc.se[h] >= fc.se[h - 1]);
  }
}

TEST_CASE("interval coverage matches the nominal level") {
  // Known-parameter model, repeated fresh sample paths: the h-step truth
  // should land inside the bands at close to the nominal rate.
  const SarimaSpec spec = parse_spec("(0,1,1)x(0,0,0)1");
  CoefficientSet coef = CoefficientSet::zeros(spec);
  coef.ma << -0.4;
  const int n_train = 80;
  const int h = 3;
  const int reps = 1500;
  int in80 = 0, in95 = 0;
  for (int r = 0; r < reps; ++r) {
    const MonthlySeries path = simulate(spec, coef, 1.0, n_train + h, 10000 + r);
    const MonthlySeries train = slice(path, path.start(), path.start().plus(n_train - 1));
    auto [diffed, ctx] = difference_chain(train, 1, 0, 1);
    const FittedModel model{spec,
                            coef,
                            CoefficientSet::zeros(spec),
                            false,
                            1.0,
                            0,
                            0,
                            0,
                            0,
                            diffed,
                            diffed,
                            ctx,
                            static_cast<int>(diffed.size())};
    const ForecastResult fc = forecast(model, h, {0.80, 0.95});
    const double truth = path[n_train + h - 1];
    if (truth >= fc.intervals[0].lower[h - 1] && truth <= fc.intervals[0].upper[h - 1]) ++in80;
    if (truth >= fc.intervals[1].lower[h - 1] && truth <= fc.intervals[1].upper[h - 1]) ++in95;
  }
  CHECK(static_cast<double>(in80) / reps == doctest::Approx(0.80).epsilon(0.035));
  CHECK(static_cast<double>(in95) / reps == doctest::Approx(0.95).epsilon(0.02));
}

TEST_CASE("accuracy table arithmetic") {
  const SarimaSpec spec = parse_spec("(0,1,0)x(0,0,0)1");
  const CoefficientSet coef = CoefficientSet::zeros(spec);
  const MonthlySeries train{MonthIndex{2019, 1}, std::vector<double>{5, 6, 7, 8, 9, 10}};
  const FittedModel model = manual_model(spec, coef, 1.0, train);
  // flat forecast at 10; truths 12, 7, 13
  const MonthlySeries truth{MonthIndex{2019, 7}, std::vector<double>{12, 7, 13}};
  const AccuracyTable table = accuracy({model}, truth);
  REQUIRE(table.rows.size() == 1);
  CHECK(table.rows[0].model_label == "(0,1,0)x(0,0,0)1");
  CHECK(table.rows[0].mse == doctest::Approx((4.0 + 9.0 + 9.0) / 3));
  CHECK(table.rows[0].rmse == doctest::Approx(std::sqrt((4.0 + 9.0 + 9.0) / 3)));
  CHECK(table.rows[0].mae == doctest::Approx((2.0 + 3.0 + 3.0) / 3));
  CHECK(table.window_start == truth.start());
  CHECK(table.window_end == truth.end());

  const MonthlySeries misaligned{MonthIndex{2019, 8}, std::vector<double>{1, 2}};
  CHECK_THROWS_AS(accuracy({model}, misaligned), RangeError);
}

TEST_CASE("forecast input guards") {
  const SarimaSpec spec = parse_spec("(0,1,0)x(0,0,0)1");
  const MonthlySeries train{MonthIndex{2019, 1}, fixtures::s12};
  const FittedModel model = manual_model(spec, CoefficientSet::zeros(spec), 1.0, train);
  CHECK_THROWS_AS(forecast(model, 0), RangeError);
  CHECK_THROWS_AS(forecast(model, 5, {1.5}), RangeError);
  CHECK_THROWS_AS(forecast(model, 5, {0.0}), RangeError);
}

TEST_SUITE_END();
