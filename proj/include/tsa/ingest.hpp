#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tsa/series.hpp"

namespace tsa {

/// One month of air-traffic counts. When the total column is absent it is
/// computed as arrivals + departures.
struct TrafficRecord {
  int year = 0;
  int month = 0;
  long long arrivals = -1;    // -1 when the column is absent
  long long departures = -1;
  long long total = 0;
};

enum class TrafficColumn { Arrivals, Departures, Total };

TrafficColumn parse_column_name(std::string_view name);

/// Parses delimited text (comma or tab, auto-detected from the header row)
/// into validated, gap-free, (year, month)-sorted records. Thousands
/// separators inside quoted cells are stripped. Gaps, duplicates, and
/// malformed cells raise IngestError/ParseError naming the offending spot.
std::vector<TrafficRecord> parse_csv(const std::string& text);

/// Reads a file and parses it.
std::vector<TrafficRecord> load_csv(const std::string& path);

/// Extracts one column as a MonthlySeries.
MonthlySeries to_series(const std::vector<TrafficRecord>& records, TrafficColumn column);

}  // namespace tsa
