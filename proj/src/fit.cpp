#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "tsa/arma_filter.hpp"
#include "tsa/identification.hpp"
#include "tsa/sarima.hpp"

namespace tsa {

namespace {

constexpr double kPenalty = 1e10;

// ---------------------------------------------------------------------------
// Per-factor parameterization. Factors without masked slots are optimized in
// an unconstrained space mapped through partial autocorrelations (tanh, then
// Durbin-Levinson), which keeps every iterate stationary/invertible. Factors
// with masked slots are optimized over the raw free coefficients with a
// stationarity penalty guard.

Eigen::VectorXd pacf_to_coefficients(const Eigen::VectorXd& pac) {
  const int p = static_cast<int>(pac.size());
  Eigen::VectorXd work(p), cur(p);
  for (int j = 0; j < p; ++j) {
    work[j] = pac[j];
    cur[j] = pac[j];
  }
  for (int j = 1; j < p; ++j) {
    for (int k = 0; k < j; ++k) {
      work[k] = cur[k] - pac[j] * cur[j - 1 - k];
    }
    cur.head(j) = work.head(j);
    cur[j] = pac[j];
  }
  return cur;
}

Eigen::VectorXd coefficients_to_pacf(const Eigen::VectorXd& coef) {
  const int p = static_cast<int>(coef.size());
  Eigen::VectorXd pac(p);
  Eigen::VectorXd work = coef;
  for (int k = p; k >= 1; --k) {
    const double r = work[k - 1];
    if (!(std::abs(r) < 1.0)) {
      throw NumericError("coefficients outside the stationary region");
    }
    pac[k - 1] = r;
    if (k == 1) break;
    Eigen::VectorXd prev(k - 1);
    const double denom = 1.0 - r * r;
    for (int j = 1; j < k; ++j) {
      prev[j - 1] = (work[j - 1] + r * work[k - 1 - j]) / denom;
    }
    work.head(k - 1) = prev;
  }
  return pac;
}

struct Factor {
  CoefKind kind;
  int order = 0;
  bool ar_like = false;       // AR/SAR need stationarity for the likelihood
  bool transformed = false;   // no masked slots: pacf parameterization
  std::vector<int> free_slots;  // 0-based indices of unmasked coefficients

  [[nodiscard]] int dim() const {
    return transformed ? order : static_cast<int>(free_slots.size());
  }

  // Unconstrained (or raw) parameters -> factor coefficient vector.
  // Returns false when a raw-parameterized factor leaves the admissible
  // region.
  bool unpack(const Eigen::VectorXd& params, Eigen::VectorXd& out) const {
    out = Eigen::VectorXd::Zero(order);
    if (transformed) {
      const Eigen::VectorXd pac = params.array().tanh();
      Eigen::VectorXd coef = pacf_to_coefficients(pac);
      out = kind == CoefKind::Ma || kind == CoefKind::Sma ? Eigen::VectorXd(-coef) : coef;
      return true;
    }
    for (std::size_t i = 0; i < free_slots.size(); ++i) {
      out[free_slots[i]] = params[static_cast<Eigen::Index>(i)];
    }
    if (ar_like) {
      return polynomial_stationary(out);
    }
    return true;
  }

  // Factor coefficients -> parameter vector (inverse of unpack).
  Eigen::VectorXd pack(const Eigen::VectorXd& coef) const {
    if (transformed) {
      const Eigen::VectorXd inner =
          kind == CoefKind::Ma || kind == CoefKind::Sma ? Eigen::VectorXd(-coef) : coef;
      Eigen::VectorXd pac = coefficients_to_pacf(inner);
      return pac.array().min(0.98).max(-0.98).atanh();
    }
    Eigen::VectorXd params(free_slots.size());
    for (std::size_t i = 0; i < free_slots.size(); ++i) {
      params[static_cast<Eigen::Index>(i)] = coef[free_slots[i]];
    }
    return params;
  }
};

struct Parameterization {
  std::vector<Factor> factors;
  int total_dim = 0;

  explicit Parameterization(const SarimaSpec& spec) {
    auto add = [&](CoefKind kind, int order, bool ar_like) {
      if (order == 0) return;
      Factor f;
      f.kind = kind;
      f.order = order;
      f.ar_like = ar_like;
      for (int i = 1; i <= order; ++i) {
        if (!spec.is_masked(kind, i)) f.free_slots.push_back(i - 1);
      }
      f.transformed = static_cast<int>(f.free_slots.size()) == order;
      total_dim += f.dim();
      factors.push_back(std::move(f));
    };
    add(CoefKind::Ar, spec.p, true);
    add(CoefKind::Ma, spec.q, false);
    add(CoefKind::Sar, spec.P, true);
    add(CoefKind::Sma, spec.Q, false);
  }

  bool unpack(const SarimaSpec& spec, const Eigen::VectorXd& params, CoefficientSet& coef) const {
    coef = CoefficientSet::zeros(spec);
    int offset = 0;
    bool ok = true;
    for (const Factor& f : factors) {
      Eigen::VectorXd part;
      ok = f.unpack(params.segment(offset, f.dim()), part) && ok;
      switch (f.kind) {
        case CoefKind::Ar: coef.ar = part; break;
        case CoefKind::Ma: coef.ma = part; break;
        case CoefKind::Sar: coef.sar = part; break;
        case CoefKind::Sma: coef.sma = part; break;
      }
      offset += f.dim();
    }
    return ok;
  }

  Eigen::VectorXd pack(const CoefficientSet& coef) const {
    Eigen::VectorXd params(total_dim);
    int offset = 0;
    for (const Factor& f : factors) {
      const Eigen::VectorXd& part = f.kind == CoefKind::Ar   ? coef.ar
                                    : f.kind == CoefKind::Ma ? coef.ma
                                    : f.kind == CoefKind::Sar ? coef.sar
                                                              : coef.sma;
      params.segment(offset, f.dim()) = f.pack(part);
      offset += f.dim();
    }
    return params;
  }
};

// ---------------------------------------------------------------------------
// Derivative-free simplex search followed by a quasi-Newton polish.

struct OptimResult {
  Eigen::VectorXd x;
  double value = std::numeric_limits<double>::infinity();
  int evals = 0;
};

OptimResult nelder_mead(const std::function<double(const Eigen::VectorXd&)>& f,
                        const Eigen::VectorXd& x0, int max_iter, double ftol) {
  const int n = static_cast<int>(x0.size());
  std::vector<Eigen::VectorXd> pts(n + 1, x0);
  std::vector<double> vals(n + 1);
  for (int i = 1; i <= n; ++i) {
    pts[i][i - 1] += 0.1;
  }
  OptimResult res;
  for (int i = 0; i <= n; ++i) {
    vals[i] = f(pts[i]);
    ++res.evals;
  }
  auto order = [&]() {
    std::vector<int> idx(n + 1);
    for (int i = 0; i <= n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return vals[a] < vals[b]; });
    std::vector<Eigen::VectorXd> p2;
    std::vector<double> v2;
    for (int i : idx) {
      p2.push_back(pts[i]);
      v2.push_back(vals[i]);
    }
    pts = std::move(p2);
    vals = std::move(v2);
  };
  order();
  for (int it = 0; it < max_iter; ++it) {
    if (std::abs(vals[n] - vals[0]) < ftol * (std::abs(vals[0]) + ftol)) break;
    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < n; ++i) centroid += pts[i];
    centroid /= n;
    const Eigen::VectorXd xr = centroid + (centroid - pts[n]);
    const double fr = f(xr);
    ++res.evals;
    if (fr < vals[0]) {
      const Eigen::VectorXd xe = centroid + 2.0 * (centroid - pts[n]);
      const double fe = f(xe);
      ++res.evals;
      pts[n] = fe < fr ? xe : xr;
      vals[n] = std::min(fe, fr);
    } else if (fr < vals[n - 1]) {
      pts[n] = xr;
      vals[n] = fr;
    } else {
      const Eigen::VectorXd xc = centroid + 0.5 * (pts[n] - centroid);
      const double fc = f(xc);
      ++res.evals;
      if (fc < vals[n]) {
        pts[n] = xc;
        vals[n] = fc;
      } else {
        for (int i = 1; i <= n; ++i) {
          pts[i] = pts[0] + 0.5 * (pts[i] - pts[0]);
          vals[i] = f(pts[i]);
          ++res.evals;
        }
      }
    }
    order();
  }
  res.x = pts[0];
  res.value = vals[0];
  return res;
}

Eigen::VectorXd numeric_gradient(const std::function<double(const Eigen::VectorXd&)>& f,
                                 const Eigen::VectorXd& x) {
  Eigen::VectorXd g(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double h = 1e-6 * std::max(1.0, std::abs(x[i]));
    Eigen::VectorXd xp = x, xm = x;
    xp[i] += h;
    xm[i] -= h;
    g[i] = (f(xp) - f(xm)) / (2 * h);
  }
  return g;
}

OptimResult bfgs(const std::function<double(const Eigen::VectorXd&)>& f, const Eigen::VectorXd& x0,
                 int max_iter) {
  const Eigen::Index n = x0.size();
  Eigen::VectorXd x = x0;
  double fx = f(x);
  Eigen::VectorXd g = numeric_gradient(f, x);
  Eigen::MatrixXd H = Eigen::MatrixXd::Identity(n, n);
  OptimResult res;
  for (int it = 0; it < max_iter; ++it) {
    if (g.lpNorm<Eigen::Infinity>() < 1e-7) break;
    Eigen::VectorXd dir = -H * g;
    if (dir.dot(g) >= 0) {
      H.setIdentity();
      dir = -g;
    }
    double step = 1.0;
    double fnew = fx;
    Eigen::VectorXd xnew = x;
    bool improved = false;
    for (int ls = 0; ls < 40; ++ls) {
      xnew = x + step * dir;
      fnew = f(xnew);
      if (fnew <= fx + 1e-4 * step * dir.dot(g)) {
        improved = true;
        break;
      }
      step *= 0.5;
    }
    if (!improved) break;
    const Eigen::VectorXd gnew = numeric_gradient(f, xnew);
    const Eigen::VectorXd s = xnew - x;
    const Eigen::VectorXd y = gnew - g;
    const double sy = s.dot(y);
    if (sy > 1e-12) {
      const Eigen::VectorXd Hy = H * y;
      H += (sy + y.dot(Hy)) / (sy * sy) * (s * s.transpose()) -
           (Hy * s.transpose() + s * Hy.transpose()) / sy;
    }
    x = xnew;
    fx = fnew;
    g = gnew;
    if (s.lpNorm<Eigen::Infinity>() < 1e-12) break;
  }
  res.x = x;
  res.value = fx;
  return res;
}

// ---------------------------------------------------------------------------
// Moment-based initialization from the sample correlogram of the differenced
// series.

double ma1_from_acf(double r1) {
  if (std::abs(r1) >= 0.49) return r1 > 0 ? 0.85 : -0.85;
  if (std::abs(r1) < 1e-8) return 0.0;
  return (1 - std::sqrt(1 - 4 * r1 * r1)) / (2 * r1);
}

Eigen::VectorXd yule_walker(const Eigen::VectorXd& r) {
  // Levinson recursion on autocorrelations r_1..r_p; falls back to a small
  // shrinkage when a step leaves the stationary region.
  const int p = static_cast<int>(r.size());
  Eigen::VectorXd phi = Eigen::VectorXd::Zero(p);
  Eigen::VectorXd prev(p);
  double denom = 1.0;
  double num = r[0];
  phi[0] = num;
  for (int k = 2; k <= p; ++k) {
    denom = 1.0;
    num = r[k - 1];
    for (int j = 1; j < k; ++j) {
      num -= phi[j - 1] * r[k - 1 - j];
      denom -= phi[j - 1] * r[j - 1];
    }
    double pac = denom > 1e-10 ? num / denom : 0.0;
    pac = std::clamp(pac, -0.95, 0.95);
    prev.head(k - 1) = phi.head(k - 1);
    for (int j = 1; j < k; ++j) {
      phi[j - 1] = prev[j - 1] - pac * prev[k - 1 - j];
    }
    phi[k - 1] = pac;
  }
  if (!polynomial_stationary(phi)) phi *= 0.5;
  return phi;
}

CoefficientSet moment_start(const SarimaSpec& spec, const MonthlySeries& diffed) {
  CoefficientSet c = CoefficientSet::zeros(spec);
  const int need = std::max({spec.p, spec.q > 0 ? 1 : 0, spec.P * spec.s, spec.Q * spec.s});
  if (need < 1 || need >= diffed.size()) return c;
  Eigen::VectorXd r;
  try {
    r = acf(diffed, need).values;
  } catch (const Error&) {
    return c;
  }
  if (spec.q >= 1) c.ma[0] = ma1_from_acf(r[0]);
  if (spec.p >= 1) c.ar = yule_walker(r.head(spec.p));
  if (spec.P >= 1) {
    Eigen::VectorXd rs(spec.P);
    for (int j = 1; j <= spec.P; ++j) rs[j - 1] = r[j * spec.s - 1];
    c.sar = yule_walker(rs);
    for (int j = 1; j <= spec.P; ++j) {
      if (spec.is_masked(CoefKind::Sar, j)) c.sar[j - 1] = 0;
    }
    if (!polynomial_stationary(c.sar)) c.sar *= 0.5;
  }
  if (spec.Q >= 1) c.sma[0] = ma1_from_acf(r[spec.s - 1]);
  for (int j = 1; j <= spec.q; ++j) {
    if (spec.is_masked(CoefKind::Ma, j)) c.ma[j - 1] = 0;
  }
  for (int j = 1; j <= spec.p; ++j) {
    if (spec.is_masked(CoefKind::Ar, j)) c.ar[j - 1] = 0;
  }
  for (int j = 1; j <= spec.Q; ++j) {
    if (spec.is_masked(CoefKind::Sma, j)) c.sma[j - 1] = 0;
  }
  return c;
}

// Free-coefficient vector (raw coefficient space, masked slots dropped).
Eigen::VectorXd free_coefficients(const SarimaSpec& spec, const CoefficientSet& coef) {
  Eigen::VectorXd out(spec.free_count());
  int k = 0;
  auto grab = [&](CoefKind kind, const Eigen::VectorXd& v) {
    for (int i = 1; i <= v.size(); ++i) {
      if (!spec.is_masked(kind, i)) out[k++] = v[i - 1];
    }
  };
  grab(CoefKind::Ar, coef.ar);
  grab(CoefKind::Ma, coef.ma);
  grab(CoefKind::Sar, coef.sar);
  grab(CoefKind::Sma, coef.sma);
  return out;
}

CoefficientSet coefficients_from_free(const SarimaSpec& spec, const Eigen::VectorXd& x) {
  CoefficientSet c = CoefficientSet::zeros(spec);
  int k = 0;
  auto put = [&](CoefKind kind, Eigen::VectorXd& v) {
    for (int i = 1; i <= v.size(); ++i) {
      if (!spec.is_masked(kind, i)) v[i - 1] = x[k++];
    }
  };
  put(CoefKind::Ar, c.ar);
  put(CoefKind::Ma, c.ma);
  put(CoefKind::Sar, c.sar);
  put(CoefKind::Sma, c.sma);
  return c;
}

}  // namespace

FittedModel fit(const SarimaSpec& spec, const MonthlySeries& train) {
  spec.validate();
  auto [diffed, ctx] = difference_chain(train, spec.d, spec.D, spec.s);
  const int n_eff = static_cast<int>(diffed.size());
  const int n_free = spec.free_count();
  if (n_eff <= n_free + 5) {
    throw LengthError("training series too short: " + std::to_string(n_eff) +
                      " effective observations for " + std::to_string(n_free) +
                      " free coefficients");
  }

  const Parameterization par(spec);
  const Eigen::VectorXd& data = diffed.values();

  auto objective = [&](const Eigen::VectorXd& params) -> double {
    CoefficientSet c;
    if (!par.unpack(spec, params, c)) return kPenalty;
    try {
      const auto [ar_full, ma_full] = expand_polynomials(spec, c);
      if (!polynomial_stationary(ar_full)) return kPenalty;
      const ArmaFilterResult f = arma_innovations_filter(ar_full, ma_full, data);
      const double nll = -f.loglik_concentrated();
      return std::isfinite(nll) ? nll : kPenalty;
    } catch (const Error&) {
      return kPenalty;
    }
  };

  // Multi-start schedule: moment start, all-zero start, jittered restarts.
  std::vector<Eigen::VectorXd> starts;
  const CoefficientSet m0 = moment_start(spec, diffed);
  try {
    starts.push_back(par.pack(m0));
  } catch (const Error&) {
    // moment start outside the admissible region; skip it
  }
  starts.push_back(Eigen::VectorXd::Zero(par.total_dim));
  std::mt19937_64 jitter_rng(20240901);
  std::uniform_real_distribution<double> jit(-0.1, 0.1);
  for (int rep = 0; rep < 3; ++rep) {
    Eigen::VectorXd x = starts.front();
    for (Eigen::Index i = 0; i < x.size(); ++i) x[i] += jit(jitter_rng);
    starts.push_back(x);
  }

  OptimResult best;
  double best_start_value = std::numeric_limits<double>::infinity();
  if (par.total_dim == 0) {
    best.x = Eigen::VectorXd();
    best.value = objective(best.x);
    best_start_value = best.value;
  } else {
    for (const Eigen::VectorXd& s : starts) {
      best_start_value = std::min(best_start_value, objective(s));
      OptimResult r = nelder_mead(objective, s, 400 * par.total_dim, 1e-12);
      r = bfgs(objective, r.x, 200);
      if (r.value < best.value) best = r;
    }
  }
  if (!std::isfinite(best.value) || best.value >= kPenalty || best.value > best_start_value) {
    throw FitError("optimizer failed to improve the likelihood for spec with " +
                   std::to_string(n_free) + " free coefficients");
  }

  CoefficientSet coef;
  par.unpack(spec, best.x, coef);
  const auto [ar_full, ma_full] = expand_polynomials(spec, coef);
  const ArmaFilterResult f = arma_innovations_filter(ar_full, ma_full, data);
  Eigen::VectorXd resid = f.innovations.array() / f.v.array().sqrt();

  FittedModel model{spec,
                    coef,
                    CoefficientSet::zeros(spec),
                    true,
                    f.sigma2_hat,
                    f.loglik_concentrated(),
                    0,
                    0,
                    0,
                    MonthlySeries(diffed.start(), std::move(resid)),
                    diffed,
                    ctx,
                    n_eff};

  const int k = n_free + 1;
  const InformationCriteria ic = information_criteria(model.loglik, k, n_eff);
  model.aic = ic.aic;
  model.bic = ic.bic;
  model.aicc = ic.aicc;

  // Standard errors: inverse observed information, central finite differences
  // in the raw free-coefficient space.
  if (n_free > 0) {
    auto nll_raw = [&](const Eigen::VectorXd& x) -> double {
      const CoefficientSet c = coefficients_from_free(spec, x);
      try {
        const auto [arf, maf] = expand_polynomials(spec, c);
        if (!polynomial_stationary(arf)) return kPenalty;
        const ArmaFilterResult ff = arma_innovations_filter(arf, maf, data);
        const double nll = -ff.loglik_concentrated();
        return std::isfinite(nll) ? nll : kPenalty;
      } catch (const Error&) {
        return kPenalty;
      }
    };
    const Eigen::VectorXd x0 = free_coefficients(spec, coef);
    Eigen::MatrixXd hess(n_free, n_free);
    Eigen::VectorXd h(n_free);
    for (int i = 0; i < n_free; ++i) h[i] = 1e-4 * std::max(1.0, std::abs(x0[i]));
    const double f0 = nll_raw(x0);
    for (int i = 0; i < n_free; ++i) {
      for (int j = i; j < n_free; ++j) {
        Eigen::VectorXd xpp = x0, xpm = x0, xmp = x0, xmm = x0;
        if (i == j) {
          xpp[i] += h[i];
          xmm[i] -= h[i];
          hess(i, i) = (nll_raw(xpp) - 2 * f0 + nll_raw(xmm)) / (h[i] * h[i]);
        } else {
          xpp[i] += h[i]; xpp[j] += h[j];
          xpm[i] += h[i]; xpm[j] -= h[j];
          xmp[i] -= h[i]; xmp[j] += h[j];
          xmm[i] -= h[i]; xmm[j] -= h[j];
          hess(i, j) = hess(j, i) =
              (nll_raw(xpp) - nll_raw(xpm) - nll_raw(xmp) + nll_raw(xmm)) / (4 * h[i] * h[j]);
        }
      }
    }
    const Eigen::LLT<Eigen::MatrixXd> llt(hess);
    if (llt.info() == Eigen::Success) {
      const Eigen::MatrixXd cov = llt.solve(Eigen::MatrixXd::Identity(n_free, n_free));
      if ((cov.diagonal().array() > 0).all()) {
        const Eigen::VectorXd se_vec = cov.diagonal().array().sqrt();
        model.se = coefficients_from_free(spec, se_vec);
      } else {
        model.se_available = false;
      }
    } else {
      model.se_available = false;
    }
  }
  return model;
}

}  // namespace tsa
