#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "taildep/sample.hpp"

namespace taildep {

struct Date {
  int year = 0;
  int month = 0;
  int day = 0;

  friend bool operator==(const Date&, const Date&) = default;
  friend auto operator<=>(const Date&, const Date&) = default;
};

struct YearMonth {
  int year = 0;
  int month = 0;

  friend bool operator==(const YearMonth&, const YearMonth&) = default;
  friend auto operator<=>(const YearMonth&, const YearMonth&) = default;
};

/// Daily (or coarser) price observations; dates strictly increasing,
/// prices strictly positive.
struct PriceSeries {
  std::string id;
  std::vector<Date> dates;
  std::vector<double> prices;

  std::size_t size() const { return dates.size(); }
};

struct ReturnSeries {
  std::vector<Date> dates;
  std::vector<double> values;

  std::size_t size() const { return dates.size(); }
};

/// Per-month maxima; months strictly increasing, gaps simply absent.
struct MaximaSeries {
  std::vector<YearMonth> months;
  std::vector<double> values;

  std::size_t size() const { return months.size(); }
};

struct CsvColumns {
  std::string date = "date";
  std::string price = "price";
};

/// Reads a price CSV. A header row is required; column names are matched
/// case-insensitively. Rows must have strictly increasing ISO-8601 dates and
/// positive prices; violations raise ParseError naming the row.
PriceSeries read_price_csv(std::istream& in, std::string id, const CsvColumns& cols = {});
PriceSeries read_price_csv_file(const std::string& path, const CsvColumns& cols = {});

/// Negative log-returns r_t = -(log p_t - log p_{t-1}), attached to the later
/// date. Gaps between trading days bridge as a single return.
ReturnSeries neg_log_returns(const PriceSeries& series);

/// Per-calendar-month maxima of a return series.
MaximaSeries monthly_maxima(const ReturnSeries& returns);

struct AlignedPairs {
  std::vector<YearMonth> months;
  BivariateSample sample;
  std::size_t dropped_a = 0;  // months of a without a partner in b
  std::size_t dropped_b = 0;
};

/// Inner join of two maxima series on month. Throws AlignError when the
/// month sets are disjoint.
AlignedPairs align(const MaximaSeries& a, const MaximaSeries& b);

/// Maxima CSV: header "month,value", months as YYYY-MM, full precision.
MaximaSeries read_maxima_csv(std::istream& in);
MaximaSeries read_maxima_csv_file(const std::string& path);
void write_maxima_csv(std::ostream& out, const MaximaSeries& maxima);

/// Aligned-pairs CSV: header "month,x1,x2".
void write_aligned_csv(std::ostream& out, const AlignedPairs& aligned);

/// Pair files for estimation: rows "x1,x2" with an optional header, or the
/// aligned "month,x1,x2" format written by the block-maxima pipeline.
BivariateSample read_pairs_csv(std::istream& in);
BivariateSample read_pairs_csv_file(const std::string& path);
void write_pairs_csv(std::ostream& out, const BivariateSample& sample);

}  // namespace taildep
