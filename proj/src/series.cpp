#include "tsa/series.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

namespace tsa {

MonthIndex MonthIndex::of(int year, int month) {
  if (month < 1 || month > 12) {
    throw RangeError("month must be in 1..12, got " + std::to_string(month));
  }
  return MonthIndex{year, month};
}

MonthIndex MonthIndex::from_serial(int serial) {
  int year = serial / 12;
  int month = serial % 12;
  if (month < 0) {
    month += 12;
    --year;
  }
  return MonthIndex{year, month + 1};
}

std::string MonthIndex::str() const {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02d", year, month);
  return buf;
}

MonthIndex MonthIndex::parse(std::string_view text) {
  const auto dash = text.find('-');
  if (dash != 4 || text.size() != 7) {
    throw ParseError("expected YYYY-MM, got '" + std::string(text) + "'");
  }
  int year = 0;
  int month = 0;
  const char* yb = text.data();
  const char* ye = text.data() + dash;
  const char* mb = text.data() + dash + 1;
  const char* me = text.data() + text.size();
  auto yr = std::from_chars(yb, ye, year);
  auto mr = std::from_chars(mb, me, month);
  if (yr.ec != std::errc{} || yr.ptr != ye || mr.ec != std::errc{} || mr.ptr != me ||
      month < 1 || month > 12) {
    throw ParseError("expected YYYY-MM, got '" + std::string(text) + "'");
  }
  return MonthIndex{year, month};
}

MonthlySeries::MonthlySeries(MonthIndex start, Eigen::VectorXd values)
    : start_(start), values_(std::move(values)) {
  if (values_.size() < 1) {
    throw LengthError("a series needs at least one observation");
  }
  if (!values_.allFinite()) {
    throw RangeError("series values must be finite");
  }
}

MonthlySeries::MonthlySeries(MonthIndex start, const std::vector<double>& values)
    : MonthlySeries(start, Eigen::Map<const Eigen::VectorXd>(values.data(),
                                                             static_cast<Eigen::Index>(values.size()))) {}

double MonthlySeries::at(MonthIndex m) const {
  if (!contains(m)) {
    throw RangeError("month " + m.str() + " outside series range " + start_.str() + ".." +
                     end().str());
  }
  return values_[m.serial() - start_.serial()];
}

MonthlySeries difference(const MonthlySeries& series, int lag) {
  if (lag < 1) {
    throw RangeError("difference lag must be positive");
  }
  if (series.size() <= lag) {
    throw LengthError("series of length " + std::to_string(series.size()) +
                      " too short for lag " + std::to_string(lag));
  }
  const Eigen::Index n = series.size() - lag;
  Eigen::VectorXd out = series.values().tail(n) - series.values().head(n);
  return {series.start().plus(lag), std::move(out)};
}

std::pair<MonthlySeries, DiffContext> difference_chain(const MonthlySeries& series, int d, int D,
                                                       int period) {
  if (d < 0 || D < 0 || period < 1) {
    throw RangeError("differencing orders must be non-negative and period positive");
  }
  DiffContext ctx;
  ctx.ordinary_order = d;
  ctx.seasonal_order = D;
  ctx.period = period;
  ctx.origin = series.start();

  MonthlySeries cur = series;
  for (int i = 0; i < d; ++i) {
    ctx.retained_prefixes.emplace_back(cur.values().head(1));
    cur = difference(cur, 1);
  }
  for (int i = 0; i < D; ++i) {
    if (cur.size() <= period) {
      throw LengthError("series too short for seasonal difference at period " +
                        std::to_string(period));
    }
    ctx.retained_prefixes.emplace_back(cur.values().head(period));
    cur = difference(cur, period);
  }
  return {std::move(cur), std::move(ctx)};
}

namespace {

Eigen::VectorXd undo_one(const Eigen::VectorXd& diffed, const Eigen::VectorXd& prefix, int lag) {
  if (prefix.size() != lag) {
    throw Error("differencing context prefix has length " + std::to_string(prefix.size()) +
                ", expected " + std::to_string(lag));
  }
  Eigen::VectorXd out(diffed.size() + lag);
  out.head(lag) = prefix;
  for (Eigen::Index k = 0; k < diffed.size(); ++k) {
    out[k + lag] = diffed[k] + out[k];
  }
  return out;
}

}  // namespace

MonthlySeries integrate(const MonthlySeries& diffed, const DiffContext& ctx) {
  if (static_cast<int>(ctx.retained_prefixes.size()) != ctx.ordinary_order + ctx.seasonal_order) {
    throw Error("differencing context holds " + std::to_string(ctx.retained_prefixes.size()) +
                " prefixes, expected " + std::to_string(ctx.ordinary_order + ctx.seasonal_order));
  }
  if (diffed.start() != ctx.origin.plus(ctx.consumed())) {
    throw Error("differenced series start " + diffed.start().str() +
                " inconsistent with context origin " + ctx.origin.str());
  }
  Eigen::VectorXd cur = diffed.values();
  // Seasonal passes were applied last, so undo them first.
  for (int i = ctx.seasonal_order - 1; i >= 0; --i) {
    cur = undo_one(cur, ctx.retained_prefixes[ctx.ordinary_order + i], ctx.period);
  }
  for (int i = ctx.ordinary_order - 1; i >= 0; --i) {
    cur = undo_one(cur, ctx.retained_prefixes[i], 1);
  }
  return {ctx.origin, std::move(cur)};
}

MonthlySeries slice(const MonthlySeries& series, MonthIndex from, MonthIndex to) {
  if (from > to) {
    throw RangeError("slice bounds out of order: " + from.str() + " > " + to.str());
  }
  if (!series.contains(from) || !series.contains(to)) {
    throw RangeError("slice " + from.str() + ".." + to.str() + " outside series range " +
                     series.start().str() + ".." + series.end().str());
  }
  const Eigen::Index offset = from.serial() - series.start().serial();
  const Eigen::Index len = to.serial() - from.serial() + 1;
  return {from, Eigen::VectorXd(series.values().segment(offset, len))};
}

}  // namespace tsa
