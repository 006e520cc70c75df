#include "tsa/sarima.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "tsa/arma_filter.hpp"
#include "tsa/spec_format.hpp"

namespace tsa {

std::string coef_name(CoefKind kind, int index) {
  switch (kind) {
    case CoefKind::Ar: return "ar" + std::to_string(index);
    case CoefKind::Ma: return "ma" + std::to_string(index);
    case CoefKind::Sar: return "sar" + std::to_string(index);
    case CoefKind::Sma: return "sma" + std::to_string(index);
  }
  return "?";
}

void SarimaSpec::validate() const {
  if (p < 0 || d < 0 || q < 0 || P < 0 || D < 0 || Q < 0) {
    throw RangeError("spec orders must be non-negative");
  }
  if (s < 1) {
    throw RangeError("seasonal period must be >= 1");
  }
  for (const CoefId& id : mask) {
    const int order = id.kind == CoefKind::Ar   ? p
                      : id.kind == CoefKind::Ma ? q
                      : id.kind == CoefKind::Sar ? P
                                                 : Q;
    if (id.index < 1 || id.index > order) {
      throw RangeError("mask entry " + coef_name(id.kind, id.index) +
                       " names a slot outside the model orders");
    }
  }
}

bool SarimaSpec::is_masked(CoefKind kind, int index) const {
  for (const CoefId& id : mask) {
    if (id.kind == kind && id.index == index) return true;
  }
  return false;
}

CoefficientSet CoefficientSet::zeros(const SarimaSpec& spec) {
  CoefficientSet c;
  c.ar = Eigen::VectorXd::Zero(spec.p);
  c.ma = Eigen::VectorXd::Zero(spec.q);
  c.sar = Eigen::VectorXd::Zero(spec.P);
  c.sma = Eigen::VectorXd::Zero(spec.Q);
  return c;
}

namespace {

Eigen::VectorXd seasonal_dense(const Eigen::VectorXd& coef, int s) {
  Eigen::VectorXd dense = Eigen::VectorXd::Zero(coef.size() * s);
  for (Eigen::Index j = 0; j < coef.size(); ++j) {
    dense[(j + 1) * s - 1] = coef[j];
  }
  return dense;
}

void check_coef_shape(const SarimaSpec& spec, const CoefficientSet& coef) {
  if (coef.ar.size() != spec.p || coef.ma.size() != spec.q || coef.sar.size() != spec.P ||
      coef.sma.size() != spec.Q) {
    throw RangeError("coefficient set does not match spec orders");
  }
}

}  // namespace

std::pair<Eigen::VectorXd, Eigen::VectorXd> expand_polynomials(const SarimaSpec& spec,
                                                               const CoefficientSet& coef) {
  spec.validate();
  check_coef_shape(spec, coef);
  Eigen::VectorXd ar_full =
      convolve_lag_polynomials(coef.ar, seasonal_dense(coef.sar, spec.s), true);
  Eigen::VectorXd ma_full =
      convolve_lag_polynomials(coef.ma, seasonal_dense(coef.sma, spec.s), false);
  return {std::move(ar_full), std::move(ma_full)};
}

double log_likelihood(const SarimaSpec& spec, const CoefficientSet& coef, double sigma2,
                      const MonthlySeries& diffed) {
  if (!(sigma2 > 0)) {
    throw RangeError("sigma2 must be positive");
  }
  const auto [ar_full, ma_full] = expand_polynomials(spec, coef);
  const ArmaFilterResult f = arma_innovations_filter(ar_full, ma_full, diffed.values());
  return f.loglik_at(sigma2);
}

InformationCriteria information_criteria(double loglik, int k, int n) {
  if (k < 0 || n < 1) {
    throw RangeError("information criteria need k >= 0 and n >= 1");
  }
  InformationCriteria ic{};
  ic.aic = -2 * loglik + 2.0 * k;
  ic.bic = -2 * loglik + k * std::log(static_cast<double>(n));
  if (n <= k + 1) {
    throw RangeError("AICc undefined for n <= k + 1");
  }
  ic.aicc = ic.aic + 2.0 * k * (k + 1) / (n - k - 1);
  return ic;
}

bool FittedModel::significant(CoefKind kind, int index) const {
  if (spec.is_masked(kind, index)) return false;
  auto pick = [&](const CoefficientSet& c) -> double {
    switch (kind) {
      case CoefKind::Ar: return c.ar[index - 1];
      case CoefKind::Ma: return c.ma[index - 1];
      case CoefKind::Sar: return c.sar[index - 1];
      case CoefKind::Sma: return c.sma[index - 1];
    }
    return 0;
  };
  return std::abs(pick(coef)) >= 2.0 * pick(se);
}

MonthlySeries simulate(const SarimaSpec& spec, const CoefficientSet& coef, double sigma2, int n,
                       std::uint64_t seed, MonthIndex start) {
  spec.validate();
  check_coef_shape(spec, coef);
  if (n < 1) {
    throw RangeError("simulate needs n >= 1");
  }
  const int consumed = spec.d + spec.D * spec.s;
  if (n <= consumed) {
    throw LengthError("simulate needs n > d + D*s");
  }
  const auto [ar_full, ma_full] = expand_polynomials(spec, coef);
  if (!polynomial_stationary(ar_full)) {
    throw NumericError("cannot simulate from a non-stationary AR polynomial");
  }
  const int p = static_cast<int>(ar_full.size());
  const int q = static_cast<int>(ma_full.size());
  const int n_arma = n - consumed;
  const int burn = 10 * (p + q + 1);

  std::mt19937_64 rng(seed);
  auto gauss = [&rng]() {
    // Box-Muller on explicit uniforms; keeps output identical across
    // standard-library implementations.
    std::uniform_real_distribution<double> unif(std::numeric_limits<double>::min(), 1.0);
    const double u1 = unif(rng);
    const double u2 = unif(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  };

  const double sd = std::sqrt(sigma2);
  const int total = burn + n_arma;
  Eigen::VectorXd eps(total), x(total);
  for (int t = 0; t < total; ++t) {
    eps[t] = sd * gauss();
    double value = eps[t];
    for (int j = 1; j <= std::min(q, t); ++j) value += ma_full[j - 1] * eps[t - j];
    for (int i = 1; i <= std::min(p, t); ++i) value += ar_full[i - 1] * x[t - i];
    x[t] = value;
  }

  DiffContext ctx;
  ctx.ordinary_order = spec.d;
  ctx.seasonal_order = spec.D;
  ctx.period = spec.s;
  ctx.origin = start;
  for (int i = 0; i < spec.d; ++i) ctx.retained_prefixes.emplace_back(Eigen::VectorXd::Zero(1));
  for (int i = 0; i < spec.D; ++i) {
    ctx.retained_prefixes.emplace_back(Eigen::VectorXd::Zero(spec.s));
  }
  MonthlySeries arma_part(start.plus(consumed), Eigen::VectorXd(x.tail(n_arma)));
  return integrate(arma_part, ctx);
}

// ---------------------------------------------------------------------------
// Model document

namespace {

std::string fmt_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void render_coef_block(std::ostream& os, const char* tag, const SarimaSpec& spec,
                       const CoefficientSet& c) {
  auto row = [&](CoefKind kind, const Eigen::VectorXd& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      os << tag << " " << coef_name(kind, static_cast<int>(i) + 1) << " " << fmt_full(v[i])
         << "\n";
    }
  };
  row(CoefKind::Ar, c.ar);
  row(CoefKind::Ma, c.ma);
  row(CoefKind::Sar, c.sar);
  row(CoefKind::Sma, c.sma);
  (void)spec;
}

}  // namespace

ModelDocument ModelDocument::from_fit(const FittedModel& model) {
  ModelDocument doc;
  doc.spec = model.spec;
  doc.coef = model.coef;
  doc.se = model.se;
  doc.se_available = model.se_available;
  doc.sigma2 = model.sigma2;
  doc.loglik = model.loglik;
  doc.n_effective = model.n_effective;
  doc.ctx = model.ctx;
  doc.train_start = model.ctx.origin;
  doc.train_end = model.diffed.end();
  return doc;
}

std::string render_model(const ModelDocument& doc) {
  std::ostringstream os;
  os << "tsa-model v1\n";
  os << "spec " << render_spec(doc.spec) << "\n";
  os << "train " << doc.train_start.str() << " " << doc.train_end.str() << "\n";
  os << "n_effective " << doc.n_effective << "\n";
  os << "sigma2 " << fmt_full(doc.sigma2) << "\n";
  os << "loglik " << fmt_full(doc.loglik) << "\n";
  os << "se_available " << (doc.se_available ? 1 : 0) << "\n";
  render_coef_block(os, "coef", doc.spec, doc.coef);
  render_coef_block(os, "se", doc.spec, doc.se);
  for (std::size_t i = 0; i < doc.ctx.retained_prefixes.size(); ++i) {
    os << "prefix " << i;
    const Eigen::VectorXd& pv = doc.ctx.retained_prefixes[i];
    for (Eigen::Index j = 0; j < pv.size(); ++j) os << " " << fmt_full(pv[j]);
    os << "\n";
  }
  return os.str();
}

ModelDocument parse_model(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || line != "tsa-model v1") {
    throw ParseError("not a tsa-model v1 document");
  }
  ModelDocument doc;
  bool have_spec = false;
  std::vector<Eigen::VectorXd> prefixes;
  auto set_coef = [&](CoefficientSet& c, const std::string& name, double value) {
    auto put = [&](Eigen::VectorXd& v, int idx) {
      if (idx < 1 || idx > v.size()) throw ParseError("coefficient " + name + " out of range");
      v[idx - 1] = value;
    };
    if (name.rfind("sar", 0) == 0) put(c.sar, std::stoi(name.substr(3)));
    else if (name.rfind("sma", 0) == 0) put(c.sma, std::stoi(name.substr(3)));
    else if (name.rfind("ar", 0) == 0) put(c.ar, std::stoi(name.substr(2)));
    else if (name.rfind("ma", 0) == 0) put(c.ma, std::stoi(name.substr(2)));
    else throw ParseError("unknown coefficient '" + name + "'");
  };
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (key == "spec") {
      std::string s;
      ls >> s;
      doc.spec = parse_spec(s);
      doc.coef = CoefficientSet::zeros(doc.spec);
      doc.se = CoefficientSet::zeros(doc.spec);
      have_spec = true;
    } else if (key == "train") {
      std::string a, b;
      ls >> a >> b;
      doc.train_start = MonthIndex::parse(a);
      doc.train_end = MonthIndex::parse(b);
    } else if (key == "n_effective") {
      ls >> doc.n_effective;
    } else if (key == "sigma2") {
      ls >> doc.sigma2;
    } else if (key == "loglik") {
      ls >> doc.loglik;
    } else if (key == "se_available") {
      int flag = 1;
      ls >> flag;
      doc.se_available = flag != 0;
    } else if (key == "coef" || key == "se") {
      if (!have_spec) throw ParseError("coefficient line before spec line");
      std::string name;
      double value;
      ls >> name >> value;
      set_coef(key == "coef" ? doc.coef : doc.se, name, value);
    } else if (key == "prefix") {
      std::size_t idx;
      ls >> idx;
      std::vector<double> vals;
      double v;
      while (ls >> v) vals.push_back(v);
      if (idx != prefixes.size()) throw ParseError("prefix lines out of order");
      prefixes.emplace_back(
          Eigen::Map<const Eigen::VectorXd>(vals.data(), static_cast<Eigen::Index>(vals.size())));
      if (ls.eof()) ls.clear();  // value loop legitimately stops at end of line
    } else {
      throw ParseError("unknown model-document key '" + key + "'");
    }
    if (ls.fail()) throw ParseError("malformed model-document line: " + line);
  }
  if (!have_spec) throw ParseError("model document has no spec line");
  doc.ctx.ordinary_order = doc.spec.d;
  doc.ctx.seasonal_order = doc.spec.D;
  doc.ctx.period = doc.spec.s;
  doc.ctx.origin = doc.train_start;
  doc.ctx.retained_prefixes = std::move(prefixes);
  return doc;
}

FittedModel rehydrate(const ModelDocument& doc, const MonthlySeries& series) {
  const MonthlySeries train = slice(series, doc.train_start, doc.train_end);
  auto [diffed, ctx] = difference_chain(train, doc.spec.d, doc.spec.D, doc.spec.s);
  if (diffed.size() != doc.n_effective) {
    throw Error("training window yields " + std::to_string(diffed.size()) +
                " effective observations, document says " + std::to_string(doc.n_effective));
  }
  const auto [ar_full, ma_full] = expand_polynomials(doc.spec, doc.coef);
  const ArmaFilterResult f = arma_innovations_filter(ar_full, ma_full, diffed.values());
  Eigen::VectorXd resid = f.innovations.array() / f.v.array().sqrt();

  FittedModel model{doc.spec,
                    doc.coef,
                    doc.se,
                    doc.se_available,
                    doc.sigma2,
                    doc.loglik,
                    0,
                    0,
                    0,
                    MonthlySeries(diffed.start(), std::move(resid)),
                    diffed,
                    ctx,
                    doc.n_effective};
  const int k = doc.spec.free_count() + 1;
  const InformationCriteria ic = information_criteria(doc.loglik, k, doc.n_effective);
  model.aic = ic.aic;
  model.bic = ic.bic;
  model.aicc = ic.aicc;
  return model;
}

}  // namespace tsa
