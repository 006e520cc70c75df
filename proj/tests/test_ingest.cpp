#include "doctest.h"
#include "tsa/ingest.hpp"

using namespace tsa;

TEST_SUITE_BEGIN("ingest");

TEST_CASE("comma-separated input with all columns") {
  const std::string text =
      "year,month,arrivals,departures,total\n"
      "2004,1,100,110,210\n"
      "2004,2,120,115,235\n"
      "2004,3,90,95,185\n";
  const auto records = parse_csv(text);
  REQUIRE(records.size() == 3);
  CHECK(records[0].year == 2004);
  CHECK(records[0].month == 1);
  CHECK(records[0].arrivals == 100);
  CHECK(records[0].departures == 110);
  CHECK(records[0].total == 210);
  const MonthlySeries total = to_series(records, TrafficColumn::Total);
  CHECK(total.start() == MonthIndex{2004, 1});
  CHECK(total[2] == 185.0);
  const MonthlySeries arr = to_series(records, TrafficColumn::Arrivals);
  CHECK(arr[1] == 120.0);
}

TEST_CASE("tab-delimited input with quoted thousands separators") {
  const std::string text =
      "Year\tMonth\tTotal\n"
      "2019\t1\t\"6,460,193\"\n"
      "2019\t2\t\"5,997,114\"\n";
  const auto records = parse_csv(text);
  REQUIRE(records.size() == 2);
  CHECK(records[0].total == 6460193);
  CHECK(records[1].total == 5997114);
  CHECK(records[0].arrivals == -1);  // column absent
}

TEST_CASE("rows are sorted into calendar order") {
  const std::string text =
      "year,month,total\n"
      "2004,3,30\n"
      "2004,1,10\n"
      "2004,2,20\n";
  const auto records = parse_csv(text);
  CHECK(records[0].total == 10);
  CHECK(records[2].total == 30);
}

TEST_CASE("total computed from arrivals and departures when absent") {
  const std::string text =
      "year,month,arrivals,departures\n"
      "2004,1,100,110\n";
  const auto records = parse_csv(text);
  CHECK(records[0].total == 210);
}

TEST_CASE("inconsistent totals are rejected") {
  const std::string text =
      "year,month,arrivals,departures,total\n"
      "2004,1,100,110,211\n";
  CHECK_THROWS_AS(parse_csv(text), IngestError);
}

TEST_CASE("calendar gaps and duplicates are rejected with the month named") {
  const std::string gap =
      "year,month,total\n"
      "2004,1,10\n"
      "2004,3,30\n";
  CHECK_THROWS_WITH_AS(parse_csv(gap), doctest::Contains("2004-02"), IngestError);
  const std::string dup =
      "year,month,total\n"
      "2004,1,10\n"
      "2004,1,11\n";
  CHECK_THROWS_WITH_AS(parse_csv(dup), doctest::Contains("2004-01"), IngestError);
}

TEST_CASE("malformed cells are rejected with row context") {
  const std::string bad =
      "year,month,total\n"
      "2004,1,abc\n";
  CHECK_THROWS_WITH_AS(parse_csv(bad), doctest::Contains("row 2"), ParseError);
  const std::string badmonth =
      "year,month,total\n"
      "2004,13,10\n";
  CHECK_THROWS_AS(parse_csv(badmonth), IngestError);
  CHECK_THROWS_AS(parse_csv(""), IngestError);
  CHECK_THROWS_AS(parse_csv("year,month,total\n"), IngestError);
  CHECK_THROWS_AS(parse_csv("foo,bar\n1,2\n"), IngestError);
}

TEST_CASE("column names parse case-insensitively") {
  CHECK(parse_column_name("Total") == TrafficColumn::Total);
  CHECK(parse_column_name(" arrivals ") == TrafficColumn::Arrivals);
  CHECK(parse_column_name("DEPARTURES") == TrafficColumn::Departures);
  CHECK_THROWS_AS(parse_column_name("passengers"), ParseError);
}

TEST_CASE("requesting an absent column fails cleanly") {
  const std::string text =
      "year,month,total\n"
      "2004,1,10\n";
  const auto records = parse_csv(text);
  CHECK_THROWS_AS(to_series(records, TrafficColumn::Arrivals), IngestError);
  CHECK(to_series(records, TrafficColumn::Total)[0] == 10.0);
}

TEST_SUITE_END();
