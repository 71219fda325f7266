// OHLC price history parsing and daily return computation.

#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qwalk {

struct Date {
    int year = 0;
    int month = 0;
    int day = 0;

    auto operator<=>(const Date&) const = default;
    std::string iso() const;
};

// Close prices in strictly increasing date order.
struct PriceSeries {
    std::vector<Date> dates;
    std::vector<double> closes;

    std::size_t size() const { return closes.size(); }
};

struct CsvFormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParsedPrices {
    PriceSeries series;
    // Rows dropped because Close was missing or null.
    int skipped_rows = 0;
};

// Parses a Yahoo-style CSV (header with at least Date and Close columns,
// ISO yyyy-mm-dd dates). Rows arrive in any order and are sorted by date;
// rows with a missing/null Close are skipped and counted. Garbage dates or
// numbers raise CsvFormatError naming the line.
ParsedPrices parse_ohlc_csv(std::istream& in);
ParsedPrices parse_ohlc_csv(const std::string& content);

// Date,Close serialization; parse_ohlc_csv(to_csv(s)) round-trips.
std::string to_csv(const PriceSeries& series);

// Percentage day-over-day changes, length n-1. With log_returns set, uses
// 100*ln(c_t/c_{t-1}) instead of the simple 100*(c_t/c_{t-1} - 1).
std::vector<double> daily_returns(const PriceSeries& series, bool log_returns = false);

}  // namespace qwalk
