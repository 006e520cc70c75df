// Command-line surface over the tsa library: identification, fitting,
// diagnostics, forecasting, accuracy comparison, decomposition, event-impact
// quantification, and simulation, all driven by delimited monthly CSV input.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tsa/decomposition.hpp"
#include "tsa/diagnostics.hpp"
#include "tsa/forecasting.hpp"
#include "tsa/identification.hpp"
#include "tsa/impact.hpp"
#include "tsa/ingest.hpp"
#include "tsa/sarima.hpp"
#include "tsa/spec_format.hpp"

using json = nlohmann::ordered_json;
using namespace tsa;

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

struct CommonOpts {
  std::string input;
  std::string column = "total";
  std::string train;  // "YYYY-MM:YYYY-MM", empty = full series
  std::string format = "text";
};

void add_common(CLI::App* cmd, CommonOpts& o, bool need_input = true) {
  auto* in = cmd->add_option("--input", o.input, "CSV file with year/month traffic columns");
  if (need_input) in->required();
  cmd->add_option("--column", o.column, "Traffic column: total, arrivals, or departures")
      ->capture_default_str();
  cmd->add_option("--train", o.train, "Training window as YYYY-MM:YYYY-MM (default: all rows)");
  cmd->add_option("--format", o.format, "Output format: text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

MonthlySeries load_series(const CommonOpts& o) {
  const auto records = load_csv(o.input);
  MonthlySeries s = to_series(records, parse_column_name(o.column));
  if (!o.train.empty()) {
    const auto colon = o.train.find(':');
    if (colon == std::string::npos) {
      throw ParseError("--train expects YYYY-MM:YYYY-MM, got '" + o.train + "'");
    }
    s = slice(s, MonthIndex::parse(o.train.substr(0, colon)),
              MonthIndex::parse(o.train.substr(colon + 1)));
  }
  return s;
}

std::vector<double> parse_levels(const std::string& text) {
  std::vector<double> levels;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    levels.push_back(std::stod(item));
  }
  if (levels.empty()) {
    throw ParseError("--levels expects a comma-separated list such as 0.80,0.95");
  }
  return levels;
}

void emit(const std::string& format, const json& doc, const std::string& text) {
  if (format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

struct CoefRow {
  std::string name;
  double value, se;
  bool masked, significant;
};

std::vector<CoefRow> coef_rows(const FittedModel& m) {
  std::vector<CoefRow> rows;
  auto family = [&](CoefKind kind, const Eigen::VectorXd& c, const Eigen::VectorXd& se) {
    for (Eigen::Index i = 0; i < c.size(); ++i) {
      const int idx = static_cast<int>(i) + 1;
      rows.push_back({coef_name(kind, idx), c[i], se[i], m.spec.is_masked(kind, idx),
                      m.significant(kind, idx)});
    }
  };
  family(CoefKind::Ar, m.coef.ar, m.se.ar);
  family(CoefKind::Ma, m.coef.ma, m.se.ma);
  family(CoefKind::Sar, m.coef.sar, m.se.sar);
  family(CoefKind::Sma, m.coef.sma, m.se.sma);
  return rows;
}

void render_fit(std::ostream& os, json& j, const FittedModel& m) {
  os << "spec\t" << render_spec(m.spec) << "\n";
  os << "coefficient\tvalue\tse\tflags\n";
  json jc = json::array();
  for (const CoefRow& r : coef_rows(m)) {
    std::string flags = r.masked ? "masked" : (r.significant ? "significant" : "insignificant");
    if (!m.se_available && !r.masked) flags = "se-unavailable";
    os << r.name << "\t" << num(r.value) << "\t" << num(r.se) << "\t" << flags << "\n";
    jc.push_back({{"name", r.name},
                  {"value", r.value},
                  {"se", r.se},
                  {"masked", r.masked},
                  {"significant", r.significant}});
  }
  os << "sigma2\t" << num(m.sigma2) << "\n";
  os << "loglik\t" << num(m.loglik) << "\n";
  os << "aic\t" << num(m.aic) << "\n";
  os << "bic\t" << num(m.bic) << "\n";
  os << "aicc\t" << num(m.aicc) << "\n";
  os << "n_effective\t" << m.n_effective << "\n";
  j["spec"] = render_spec(m.spec);
  j["coefficients"] = jc;
  j["se_available"] = m.se_available;
  j["sigma2"] = m.sigma2;
  j["loglik"] = m.loglik;
  j["aic"] = m.aic;
  j["bic"] = m.bic;
  j["aicc"] = m.aicc;
  j["n_effective"] = m.n_effective;
}

FittedModel model_from_opts(const CommonOpts& common, const std::string& spec_text,
                            const std::string& model_path) {
  if (!model_path.empty()) {
    std::ifstream in(model_path);
    if (!in) throw IngestError("cannot open model document '" + model_path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    const ModelDocument doc = parse_model(buf.str());
    const auto records = load_csv(common.input);
    return rehydrate(doc, to_series(records, parse_column_name(common.column)));
  }
  if (spec_text.empty()) {
    throw ParseError("either --spec (with --input/--train) or --model is required");
  }
  return fit(parse_spec(spec_text), load_series(common));
}

int run(int argc, char** argv) {
  CLI::App app{"Seasonal ARIMA toolkit for monthly air-traffic series"};
  app.require_subcommand(1);
  // long-form help only, so `--h` stays available as the horizon flag
  app.set_help_flag("--help", "Print help");
  auto add_sub = [&app](const char* name, const char* desc) {
    CLI::App* cmd = app.add_subcommand(name, desc);
    cmd->set_help_flag("--help", "Print help");
    return cmd;
  };

  // identify ---------------------------------------------------------------
  CommonOpts id_common;
  int id_max_lag = 24, id_adf_lag = 4, id_d = 0, id_D = 0;
  auto* identify = add_sub("identify", "Correlograms and ADF unit-root tests");
  add_common(identify, id_common);
  identify->add_option("--max-lag", id_max_lag, "Correlogram lags")->capture_default_str();
  identify->add_option("--adf-lags", id_adf_lag, "ADF augmentation lags 0..L")
      ->capture_default_str();
  identify->add_option("--d", id_d, "Ordinary differences applied first")->capture_default_str();
  identify->add_option("--D", id_D, "Seasonal differences (period 12) applied first")
      ->capture_default_str();

  // fit --------------------------------------------------------------------
  CommonOpts fit_common;
  std::string fit_spec, fit_save;
  auto* fit_cmd = add_sub("fit", "Exact maximum-likelihood SARIMA fit");
  add_common(fit_cmd, fit_common);
  fit_cmd->add_option("--spec", fit_spec, "Model spec, e.g. (0,1,1)x(4,1,0)12[sar3=0]")
      ->required();
  fit_cmd->add_option("--save-model", fit_save, "Write the fitted model document here");

  // diagnose ---------------------------------------------------------------
  CommonOpts diag_common;
  std::string diag_spec, diag_model;
  int diag_max_lag = 24;
  auto* diagnose = add_sub("diagnose", "Residual adequacy checks");
  add_common(diagnose, diag_common);
  diagnose->add_option("--spec", diag_spec, "Fit this spec on the training window");
  diagnose->add_option("--model", diag_model, "Reuse a saved model document instead");
  diagnose->add_option("--max-lag", diag_max_lag, "Ljung-Box / ACF lags")->capture_default_str();

  // forecast ---------------------------------------------------------------
  CommonOpts fc_common;
  std::string fc_spec, fc_model, fc_levels = "0.80,0.95";
  int fc_h = 12;
  auto* fc_cmd = add_sub("forecast", "Point and interval forecasts");
  add_common(fc_cmd, fc_common);
  fc_cmd->add_option("--spec", fc_spec, "Fit this spec on the training window");
  fc_cmd->add_option("--model", fc_model, "Reuse a saved model document instead");
  fc_cmd->add_option("--h", fc_h, "Forecast horizon in months")->capture_default_str();
  fc_cmd->add_option("--levels", fc_levels, "Comma-separated confidence levels")
      ->capture_default_str();

  // accuracy ---------------------------------------------------------------
  CommonOpts acc_common;
  std::vector<std::string> acc_specs;
  std::string acc_test;
  auto* acc_cmd = add_sub("accuracy", "Out-of-sample comparison of candidate specs");
  add_common(acc_cmd, acc_common);
  acc_cmd->add_option("--spec", acc_specs, "Candidate spec (repeatable)")->required();
  acc_cmd->add_option("--test", acc_test, "Truth window as YYYY-MM:YYYY-MM")->required();

  // decompose --------------------------------------------------------------
  CommonOpts dec_common;
  int dec_period = 12;
  auto* dec_cmd = add_sub("decompose", "Classical additive decomposition");
  add_common(dec_cmd, dec_common);
  dec_cmd->add_option("--period", dec_period, "Seasonal period")->capture_default_str();

  // impact -----------------------------------------------------------------
  CommonOpts imp_common;
  std::string imp_spec, imp_train_end;
  int imp_h = 11;
  auto* imp_cmd = add_sub("impact", "Counterfactual event-loss quantification");
  add_common(imp_cmd, imp_common);
  imp_cmd->add_option("--spec", imp_spec, "Model spec to refit on pre-event data")->required();
  imp_cmd->add_option("--train-end", imp_train_end, "Last pre-event month YYYY-MM")->required();
  imp_cmd->add_option("--h", imp_h, "Event window length in months")->capture_default_str();

  // simulate ---------------------------------------------------------------
  std::string sim_spec, sim_coef, sim_start = "2000-01", sim_format = "text";
  int sim_n = 120;
  std::uint64_t sim_seed = 1;
  double sim_sigma2 = 1.0;
  auto* sim_cmd = add_sub("simulate", "Deterministic SARIMA sample path");
  sim_cmd->add_option("--spec", sim_spec, "Model spec")->required();
  sim_cmd->add_option("--coef", sim_coef, "Coefficients, e.g. ma1=-0.7,sar1=-0.65");
  sim_cmd->add_option("--sigma2", sim_sigma2, "Innovation variance")->capture_default_str();
  sim_cmd->add_option("--n", sim_n, "Series length")->capture_default_str();
  sim_cmd->add_option("--seed", sim_seed, "RNG seed")->capture_default_str();
  sim_cmd->add_option("--start", sim_start, "First month YYYY-MM")->capture_default_str();
  sim_cmd->add_option("--format", sim_format, "Output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;  // usage error
  }

  std::ostringstream os;
  json j;

  if (identify->parsed()) {
    MonthlySeries s = load_series(id_common);
    auto [work, ctx] = difference_chain(s, id_d, id_D, 12);
    j["window"] = {{"start", work.start().str()}, {"end", work.end().str()}};
    os << "window\t" << work.start().str() << "\t" << work.end().str() << "\n";

    const CorrelogramResult a = acf(work, id_max_lag);
    const CorrelogramResult p = pacf(work, id_max_lag);
    os << "section\tcorrelogram\n";
    os << "lag\tacf\tpacf\tband\n";
    json jc = json::array();
    for (int k = 0; k < id_max_lag; ++k) {
      os << a.lags[k] << "\t" << num(a.values[k]) << "\t" << num(p.values[k]) << "\t"
         << num(a.band) << "\n";
      jc.push_back({{"lag", a.lags[k]}, {"acf", a.values[k]}, {"pacf", p.values[k]}});
    }
    j["correlogram"] = jc;
    j["band"] = a.band;

    json ja = json::array();
    for (AdfType type : {AdfType::NoDriftNoTrend, AdfType::DriftNoTrend, AdfType::DriftAndTrend}) {
      os << "section\tadf\ttype\t" << static_cast<int>(type) << "\n";
      os << "lag\tstatistic\tp_value\tclamped\n";
      for (const AdfResult& r : adf_test(work, id_adf_lag, type)) {
        os << r.lag << "\t" << num(r.statistic) << "\t" << num(r.p_value) << "\t"
           << (r.p_clamped ? 1 : 0) << "\n";
        ja.push_back({{"type", static_cast<int>(type)},
                      {"lag", r.lag},
                      {"statistic", r.statistic},
                      {"p_value", r.p_value},
                      {"p_clamped", r.p_clamped}});
      }
    }
    j["adf"] = ja;
    emit(id_common.format, j, os.str());
  } else if (fit_cmd->parsed()) {
    const FittedModel m = fit(parse_spec(fit_spec), load_series(fit_common));
    render_fit(os, j, m);
    if (!fit_save.empty()) {
      std::ofstream out(fit_save);
      if (!out) throw IngestError("cannot write model document '" + fit_save + "'");
      out << render_model(ModelDocument::from_fit(m));
    }
    emit(fit_common.format, j, os.str());
  } else if (diagnose->parsed()) {
    const FittedModel m = model_from_opts(diag_common, diag_spec, diag_model);
    const DiagnosticsBundle d = residual_diagnostics(m, diag_max_lag);
    os << "spec\t" << render_spec(m.spec) << "\n";
    os << "section\tljung_box\tfitdf\t" << d.ljung_box.fitdf << "\n";
    os << "lag\tstatistic\tp_value\n";
    json jl = json::array();
    for (std::size_t i = 0; i < d.ljung_box.lags.size(); ++i) {
      os << d.ljung_box.lags[i] << "\t" << num(d.ljung_box.statistics[i]) << "\t"
         << num(d.ljung_box.p_values[i]) << "\n";
      jl.push_back({{"lag", d.ljung_box.lags[i]},
                    {"statistic", d.ljung_box.statistics[i]},
                    {"p_value", std::isnan(d.ljung_box.p_values[i])
                                    ? json(nullptr)
                                    : json(d.ljung_box.p_values[i])}});
    }
    os << "section\tnormality\n";
    os << "shapiro_w\t" << num(d.normality.shapiro_w) << "\n";
    os << "shapiro_p\t" << num(d.normality.shapiro_p) << "\n";
    os << "jarque_bera\t" << num(d.normality.jb_stat) << "\n";
    os << "jarque_bera_p\t" << num(d.normality.jb_p) << "\n";
    os << "skewness\t" << num(d.normality.skewness) << "\n";
    os << "kurtosis\t" << num(d.normality.kurtosis) << "\n";
    os << "section\tresidual_acf\tband\t" << num(d.residual_acf.band) << "\n";
    os << "lag\tacf\n";
    for (std::size_t i = 0; i < d.residual_acf.lags.size(); ++i) {
      os << d.residual_acf.lags[i] << "\t" << num(d.residual_acf.values[i]) << "\n";
    }
    os << "section\tqq\n";
    os << "theoretical\tempirical\n";
    for (Eigen::Index i = 0; i < d.qq_theoretical.size(); ++i) {
      os << num(d.qq_theoretical[i]) << "\t" << num(d.qq_empirical[i]) << "\n";
    }
    j["spec"] = render_spec(m.spec);
    j["ljung_box"] = jl;
    j["fitdf"] = d.ljung_box.fitdf;
    j["normality"] = {{"shapiro_w", d.normality.shapiro_w},
                      {"shapiro_p", d.normality.shapiro_p},
                      {"jarque_bera", d.normality.jb_stat},
                      {"jarque_bera_p", d.normality.jb_p},
                      {"skewness", d.normality.skewness},
                      {"kurtosis", d.normality.kurtosis}};
    emit(diag_common.format, j, os.str());
  } else if (fc_cmd->parsed()) {
    const FittedModel m = model_from_opts(fc_common, fc_spec, fc_model);
    const std::vector<double> levels = parse_levels(fc_levels);
    const ForecastResult fc = forecast(m, fc_h, levels);
    os << "spec\t" << render_spec(m.spec) << "\n";
    os << "month\tpoint\tse";
    for (double level : levels) {
      os << "\tlower" << num(100 * level) << "\tupper" << num(100 * level);
    }
    os << "\n";
    json jf = json::array();
    for (int h = 0; h < fc_h; ++h) {
      os << fc.months[h].str() << "\t" << num(fc.point[h]) << "\t" << num(fc.se[h]);
      json bands = json::array();
      for (const IntervalBand& band : fc.intervals) {
        os << "\t" << num(band.lower[h]) << "\t" << num(band.upper[h]);
        bands.push_back(
            {{"level", band.level}, {"lower", band.lower[h]}, {"upper", band.upper[h]}});
      }
      os << "\n";
      jf.push_back({{"month", fc.months[h].str()},
                    {"point", fc.point[h]},
                    {"se", fc.se[h]},
                    {"intervals", bands}});
    }
    j["spec"] = render_spec(m.spec);
    j["forecast"] = jf;
    emit(fc_common.format, j, os.str());
  } else if (acc_cmd->parsed()) {
    const auto records = load_csv(acc_common.input);
    const MonthlySeries full = to_series(records, parse_column_name(acc_common.column));
    const MonthlySeries train = load_series(acc_common);
    const auto colon = acc_test.find(':');
    if (colon == std::string::npos) {
      throw ParseError("--test expects YYYY-MM:YYYY-MM, got '" + acc_test + "'");
    }
    const MonthlySeries truth = slice(full, MonthIndex::parse(acc_test.substr(0, colon)),
                                      MonthIndex::parse(acc_test.substr(colon + 1)));
    std::vector<FittedModel> models;
    models.reserve(acc_specs.size());
    for (const std::string& text : acc_specs) {
      models.push_back(fit(parse_spec(text), train));
    }
    const AccuracyTable table = accuracy(models, truth);
    os << "window\t" << table.window_start.str() << "\t" << table.window_end.str() << "\n";
    os << "spec\tmse\trmse\tmae\n";
    json jr = json::array();
    for (const AccuracyRow& row : table.rows) {
      os << row.model_label << "\t" << num(row.mse) << "\t" << num(row.rmse) << "\t"
         << num(row.mae) << "\n";
      jr.push_back(
          {{"spec", row.model_label}, {"mse", row.mse}, {"rmse", row.rmse}, {"mae", row.mae}});
    }
    j["window"] = {{"start", table.window_start.str()}, {"end", table.window_end.str()}};
    j["rows"] = jr;
    emit(acc_common.format, j, os.str());
  } else if (dec_cmd->parsed()) {
    const MonthlySeries s = load_series(dec_common);
    const Decomposition d = decompose(s, dec_period);
    os << "section\tseasonal_indices\n";
    os << "position\tindex\n";
    json ji = json::array();
    for (int k = 0; k < d.period; ++k) {
      os << k + 1 << "\t" << num(d.seasonal_indices[k]) << "\n";
      ji.push_back(d.seasonal_indices[k]);
    }
    os << "section\tcomponents\n";
    os << "month\tobserved\ttrend\tseasonal\tremainder\n";
    json jc = json::array();
    for (Eigen::Index t = 0; t < d.observed.size(); ++t) {
      const MonthIndex m = d.start.plus(static_cast<int>(t));
      os << m.str() << "\t" << num(d.observed[t]) << "\t" << num(d.trend[t]) << "\t"
         << num(d.seasonal[t]) << "\t" << num(d.remainder[t]) << "\n";
      jc.push_back({{"month", m.str()},
                    {"observed", d.observed[t]},
                    {"trend", std::isnan(d.trend[t]) ? json(nullptr) : json(d.trend[t])},
                    {"seasonal", d.seasonal[t]},
                    {"remainder",
                     std::isnan(d.remainder[t]) ? json(nullptr) : json(d.remainder[t])}});
    }
    j["seasonal_indices"] = ji;
    j["components"] = jc;
    emit(dec_common.format, j, os.str());
  } else if (imp_cmd->parsed()) {
    const auto records = load_csv(imp_common.input);
    const MonthlySeries full = to_series(records, parse_column_name(imp_common.column));
    const LossReport rep =
        quantify_impact(parse_spec(imp_spec), full, MonthIndex::parse(imp_train_end), imp_h);
    os << "section\trefit\n";
    json jfit;
    render_fit(os, jfit, rep.refit);
    os << "section\tloss\n";
    os << "month\tactual\tpredicted\tloss\tretained\n";
    json jl = json::array();
    for (std::size_t i = 0; i < rep.months.size(); ++i) {
      os << rep.months[i].str() << "\t" << num(rep.actual[i]) << "\t" << num(rep.predicted[i])
         << "\t" << num(rep.loss[i]) << "\t" << num(rep.retained[i]) << "\n";
      jl.push_back({{"month", rep.months[i].str()},
                    {"actual", rep.actual[i]},
                    {"predicted", rep.predicted[i]},
                    {"loss", rep.loss[i]},
                    {"retained", rep.retained[i]}});
    }
    os << "aggregate_actual\t" << num(rep.aggregate_actual) << "\n";
    os << "aggregate_predicted\t" << num(rep.aggregate_predicted) << "\n";
    os << "aggregate_retained\t" << num(rep.aggregate_retained) << "\n";
    j["refit"] = jfit;
    j["loss"] = jl;
    j["aggregate_actual"] = rep.aggregate_actual;
    j["aggregate_predicted"] = rep.aggregate_predicted;
    j["aggregate_retained"] = rep.aggregate_retained;
    emit(imp_common.format, j, os.str());
  } else if (sim_cmd->parsed()) {
    const SarimaSpec spec = parse_spec(sim_spec);
    CoefficientSet coef = CoefficientSet::zeros(spec);
    if (!sim_coef.empty()) {
      std::stringstream ss(sim_coef);
      std::string item;
      while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) {
          throw ParseError("--coef expects name=value pairs, got '" + item + "'");
        }
        const std::string name = item.substr(0, eq);
        const double value = std::stod(item.substr(eq + 1));
        auto put = [&](Eigen::VectorXd& v, int idx) {
          if (idx < 1 || idx > v.size()) {
            throw RangeError("coefficient " + name + " outside the spec orders");
          }
          v[idx - 1] = value;
        };
        if (name.rfind("sar", 0) == 0) put(coef.sar, std::stoi(name.substr(3)));
        else if (name.rfind("sma", 0) == 0) put(coef.sma, std::stoi(name.substr(3)));
        else if (name.rfind("ar", 0) == 0) put(coef.ar, std::stoi(name.substr(2)));
        else if (name.rfind("ma", 0) == 0) put(coef.ma, std::stoi(name.substr(2)));
        else throw ParseError("unknown coefficient '" + name + "'");
      }
    }
    const MonthlySeries path =
        simulate(spec, coef, sim_sigma2, sim_n, sim_seed, MonthIndex::parse(sim_start));
    os << "year\tmonth\tvalue\n";
    json jp = json::array();
    for (Eigen::Index i = 0; i < path.size(); ++i) {
      const MonthIndex m = path.month_at(i);
      os << m.year << "\t" << m.month << "\t" << num(path[i]) << "\n";
      jp.push_back({{"month", m.str()}, {"value", path[i]}});
    }
    j["series"] = jp;
    emit(sim_format, j, os.str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
