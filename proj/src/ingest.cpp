#include <qwalk/ingest.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>

namespace qwalk {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(field);
            field.clear();
        } else if (c != '\r') {
            field += c;
        }
    }
    fields.push_back(field);
    return fields;
}

std::string trimmed(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

std::string lowered(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

bool is_missing(const std::string& field) {
    const std::string t = lowered(trimmed(field));
    return t.empty() || t == "null" || t == "nan" || t == "na";
}

Date parse_date(const std::string& field, int line_no) {
    const std::string t = trimmed(field);
    Date d;
    if (t.size() != 10 || t[4] != '-' || t[7] != '-' ||
        std::from_chars(t.data(), t.data() + 4, d.year).ec != std::errc{} ||
        std::from_chars(t.data() + 5, t.data() + 7, d.month).ec != std::errc{} ||
        std::from_chars(t.data() + 8, t.data() + 10, d.day).ec != std::errc{}) {
        throw CsvFormatError("line " + std::to_string(line_no) + ": bad date '" + t +
                             "' (expected yyyy-mm-dd)");
    }
    if (d.month < 1 || d.month > 12 || d.day < 1 || d.day > 31) {
        throw CsvFormatError("line " + std::to_string(line_no) + ": date out of range '" + t + "'");
    }
    return d;
}

double parse_close(const std::string& field, int line_no) {
    const std::string t = trimmed(field);
    try {
        std::size_t used = 0;
        const double v = std::stod(t, &used);
        if (used != t.size() || !std::isfinite(v)) throw std::invalid_argument(t);
        return v;
    } catch (const std::exception&) {
        throw CsvFormatError("line " + std::to_string(line_no) + ": bad close value '" + t + "'");
    }
}

}  // namespace

std::string Date::iso() const {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", year, month, day);
    return buf;
}

ParsedPrices parse_ohlc_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw CsvFormatError("empty input");
    }
    const auto header = split_csv_line(line);
    int date_col = -1, close_col = -1;
    for (std::size_t i = 0; i < header.size(); ++i) {
        const std::string name = lowered(trimmed(header[i]));
        if (name == "date") date_col = static_cast<int>(i);
        if (name == "close") close_col = static_cast<int>(i);
    }
    if (date_col < 0 || close_col < 0) {
        throw CsvFormatError("header is missing a Date or Close column");
    }

    ParsedPrices out;
    std::vector<std::pair<Date, double>> rows;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (trimmed(line).empty()) continue;
        const auto fields = split_csv_line(line);
        if (static_cast<int>(fields.size()) <= std::max(date_col, close_col)) {
            throw CsvFormatError("line " + std::to_string(line_no) + ": too few columns");
        }
        if (is_missing(fields[close_col])) {
            ++out.skipped_rows;
            continue;
        }
        const Date d = parse_date(fields[date_col], line_no);
        const double close = parse_close(fields[close_col], line_no);
        if (close <= 0.0) {
            throw CsvFormatError("line " + std::to_string(line_no) + ": non-positive close");
        }
        rows.emplace_back(d, close);
    }
    std::stable_sort(rows.begin(), rows.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].first == rows[i - 1].first) {
            throw CsvFormatError("duplicate date " + rows[i].first.iso());
        }
    }
    out.series.dates.reserve(rows.size());
    out.series.closes.reserve(rows.size());
    for (const auto& [d, c] : rows) {
        out.series.dates.push_back(d);
        out.series.closes.push_back(c);
    }
    return out;
}

ParsedPrices parse_ohlc_csv(const std::string& content) {
    std::istringstream in(content);
    return parse_ohlc_csv(in);
}

std::string to_csv(const PriceSeries& series) {
    std::string out = "Date,Close\n";
    char buf[64];
    for (std::size_t i = 0; i < series.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g", series.closes[i]);
        out += series.dates[i].iso();
        out += ',';
        out += buf;
        out += '\n';
    }
    return out;
}

std::vector<double> daily_returns(const PriceSeries& series, bool log_returns) {
    if (series.size() < 2) {
        throw std::invalid_argument("daily_returns: need at least two closes");
    }
    std::vector<double> returns(series.size() - 1);
    for (std::size_t i = 1; i < series.size(); ++i) {
        const double ratio = series.closes[i] / series.closes[i - 1];
        returns[i - 1] = log_returns ? 100.0 * std::log(ratio) : 100.0 * (ratio - 1.0);
    }
    return returns;
}

}  // namespace qwalk
