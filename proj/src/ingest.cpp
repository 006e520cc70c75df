#include "tsa/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace tsa {

namespace {

std::vector<std::string> split_row(const std::string& line, char delim) {
  std::vector<std::string> cells;
  std::string cur;
  bool quoted = false;
  for (char ch : line) {
    if (ch == '"') {
      quoted = !quoted;
    } else if (ch == delim && !quoted) {
      cells.push_back(cur);
      cur.clear();
    } else if (ch == '\r') {
      // tolerate CRLF input
    } else {
      cur.push_back(ch);
    }
  }
  cells.push_back(cur);
  return cells;
}

std::string lower_trim(std::string s) {
  const auto notspace = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), notspace));
  s.erase(std::find_if(s.rbegin(), s.rend(), notspace).base(), s.end());
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

long long parse_count(const std::string& cell, int row, const std::string& column) {
  std::string digits;
  for (char c : cell) {
    if (c == ',' || c == ' ') continue;  // thousands separators
    digits.push_back(c);
  }
  long long value = 0;
  const char* b = digits.data();
  const char* e = b + digits.size();
  auto r = std::from_chars(b, e, value);
  if (digits.empty() || r.ec != std::errc{} || r.ptr != e) {
    throw ParseError("row " + std::to_string(row) + ", column '" + column +
                     "': non-numeric cell '" + cell + "'");
  }
  if (value < 0) {
    throw IngestError("row " + std::to_string(row) + ", column '" + column +
                      "': negative count");
  }
  return value;
}

}  // namespace

TrafficColumn parse_column_name(std::string_view name) {
  const std::string n = lower_trim(std::string(name));
  if (n == "arrivals") return TrafficColumn::Arrivals;
  if (n == "departures") return TrafficColumn::Departures;
  if (n == "total") return TrafficColumn::Total;
  throw ParseError("unknown traffic column '" + std::string(name) + "'");
}

std::vector<TrafficRecord> parse_csv(const std::string& text) {
  std::istringstream is(text);
  std::string header;
  if (!std::getline(is, header)) {
    throw IngestError("empty input");
  }
  const char delim = header.find('\t') != std::string::npos ? '\t' : ',';
  const std::vector<std::string> names = split_row(header, delim);
  int col_year = -1, col_month = -1, col_arr = -1, col_dep = -1, col_total = -1;
  for (std::size_t i = 0; i < names.size(); ++i) {
    const std::string n = lower_trim(names[i]);
    if (n == "year") col_year = static_cast<int>(i);
    else if (n == "month") col_month = static_cast<int>(i);
    else if (n == "arrivals") col_arr = static_cast<int>(i);
    else if (n == "departures") col_dep = static_cast<int>(i);
    else if (n == "total") col_total = static_cast<int>(i);
  }
  if (col_year < 0 || col_month < 0 || (col_arr < 0 && col_dep < 0 && col_total < 0)) {
    throw IngestError("header must name year, month, and at least one traffic column");
  }

  std::vector<TrafficRecord> records;
  std::string line;
  int row = 1;
  while (std::getline(is, line)) {
    ++row;
    if (lower_trim(line).empty()) continue;
    const std::vector<std::string> cells = split_row(line, delim);
    auto cell = [&](int idx, const char* what) -> const std::string& {
      if (idx >= static_cast<int>(cells.size())) {
        throw ParseError("row " + std::to_string(row) + ": missing column '" + what + "'");
      }
      return cells[idx];
    };
    TrafficRecord rec;
    rec.year = static_cast<int>(parse_count(cell(col_year, "year"), row, "year"));
    rec.month = static_cast<int>(parse_count(cell(col_month, "month"), row, "month"));
    if (rec.month < 1 || rec.month > 12) {
      throw IngestError("row " + std::to_string(row) + ": month " + std::to_string(rec.month) +
                        " outside 1..12");
    }
    if (col_arr >= 0) rec.arrivals = parse_count(cell(col_arr, "arrivals"), row, "arrivals");
    if (col_dep >= 0) rec.departures = parse_count(cell(col_dep, "departures"), row, "departures");
    if (col_total >= 0) {
      rec.total = parse_count(cell(col_total, "total"), row, "total");
      if (rec.arrivals >= 0 && rec.departures >= 0 && rec.total != rec.arrivals + rec.departures) {
        throw IngestError("row " + std::to_string(row) + ": total " + std::to_string(rec.total) +
                          " != arrivals + departures");
      }
    } else {
      if (rec.arrivals < 0 || rec.departures < 0) {
        throw IngestError("row " + std::to_string(row) +
                          ": cannot compute total without both arrivals and departures");
      }
      rec.total = rec.arrivals + rec.departures;
    }
    records.push_back(rec);
  }
  if (records.empty()) {
    throw IngestError("no data rows");
  }

  std::sort(records.begin(), records.end(), [](const TrafficRecord& a, const TrafficRecord& b) {
    return MonthIndex{a.year, a.month} < MonthIndex{b.year, b.month};
  });
  for (std::size_t i = 1; i < records.size(); ++i) {
    const MonthIndex prev{records[i - 1].year, records[i - 1].month};
    const MonthIndex cur{records[i].year, records[i].month};
    if (cur == prev) {
      throw IngestError("duplicate month " + cur.str());
    }
    if (cur.serial() != prev.serial() + 1) {
      throw IngestError("missing month " + prev.plus(1).str());
    }
  }
  return records;
}

std::vector<TrafficRecord> load_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IngestError("cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_csv(buf.str());
}

MonthlySeries to_series(const std::vector<TrafficRecord>& records, TrafficColumn column) {
  if (records.empty()) {
    throw LengthError("no records");
  }
  Eigen::VectorXd values(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    const long long v = column == TrafficColumn::Arrivals     ? records[i].arrivals
                        : column == TrafficColumn::Departures ? records[i].departures
                                                              : records[i].total;
    if (v < 0) {
      throw IngestError("requested column absent from the input");
    }
    values[static_cast<Eigen::Index>(i)] = static_cast<double>(v);
  }
  return {MonthIndex{records.front().year, records.front().month}, values};
}

}  // namespace tsa
