#include "dcos/tick_series.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

namespace dcos {

namespace {

std::vector<std::string> split_line(const std::string& line, char delimiter) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, delimiter)) fields.push_back(field);
    if (!line.empty() && line.back() == delimiter) fields.emplace_back();
    return fields;
}

std::string strip_cr(std::string s) {
    if (!s.empty() && s.back() == '\r') s.pop_back();
    return s;
}

std::int64_t parse_timestamp(const std::string& text, std::int64_t line,
                             const std::string& column) {
    errno = 0;
    char* end = nullptr;
    const long long value = std::strtoll(text.c_str(), &end, 10);
    if (end == text.c_str() || *end != '\0' || errno == ERANGE)
        throw ParseError(line, column, "not an integer timestamp: '" + text + "'");
    return value;
}

double parse_price(const std::string& text, std::int64_t line, const std::string& column) {
    errno = 0;
    char* end = nullptr;
    const double value = std::strtod(text.c_str(), &end);
    if (end == text.c_str() || *end != '\0' || errno == ERANGE)
        throw ParseError(line, column, "not a real price: '" + text + "'");
    if (!std::isfinite(value))
        throw ParseError(line, column, "non-finite price: '" + text + "'");
    return value;
}

}  // namespace

TickSeries::TickSeries(std::vector<Tick> ticks) : ticks_(std::move(ticks)) {
    for (std::size_t i = 0; i < ticks_.size(); ++i) {
        if (!(ticks_[i].price > 0.0) || !std::isfinite(ticks_[i].price))
            throw NonPositivePrice(static_cast<std::int64_t>(i));
        if (i > 0 && ticks_[i].timestamp_ms < ticks_[i - 1].timestamp_ms)
            throw TimestampRegression(static_cast<std::int64_t>(i));
    }
}

TickSeries load_ticks(const std::string& path, const CsvFormat& format) {
    std::ifstream in(path);
    if (!in.is_open()) throw FileNotFound(path);

    std::string line;
    if (!std::getline(in, line)) throw ParseError(1, format.time_column, "missing header row");
    line = strip_cr(line);

    const auto header = split_line(line, format.delimiter);
    std::size_t time_idx = header.size();
    std::size_t price_idx = header.size();
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == format.time_column) time_idx = i;
        if (header[i] == format.price_column) price_idx = i;
    }
    if (time_idx == header.size())
        throw ParseError(1, format.time_column, "column not found in header");
    if (price_idx == header.size())
        throw ParseError(1, format.price_column, "column not found in header");

    std::vector<Tick> ticks;
    std::int64_t line_no = 1;
    std::int64_t prev_ts = 0;
    bool have_prev = false;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (line.empty()) continue;
        const auto fields = split_line(line, format.delimiter);
        if (fields.size() <= std::max(time_idx, price_idx))
            throw ParseError(line_no, format.price_column, "row has too few fields");

        Tick tick;
        tick.timestamp_ms = parse_timestamp(fields[time_idx], line_no, format.time_column);
        tick.price = parse_price(fields[price_idx], line_no, format.price_column);
        if (!(tick.price > 0.0)) throw NonPositivePrice(line_no);
        if (have_prev && tick.timestamp_ms < prev_ts) throw TimestampRegression(line_no);
        prev_ts = tick.timestamp_ms;
        have_prev = true;
        ticks.push_back(tick);
    }
    if (ticks.empty()) throw EmptySeries();
    return TickSeries(std::move(ticks));
}

void write_ticks(const TickSeries& series, const std::string& path) {
    std::ofstream out(path);
    if (!out.is_open()) throw Error("cannot open for writing: " + path);
    out << "timestamp,price\n";
    char buf[64];
    for (const Tick& t : series.ticks()) {
        std::snprintf(buf, sizeof(buf), "%.17g", t.price);
        out << t.timestamp_ms << ',' << buf << '\n';
    }
}

std::vector<double> to_log_prices(const TickSeries& series) {
    std::vector<double> log_prices;
    log_prices.reserve(series.n_ticks());
    for (const Tick& t : series.ticks()) log_prices.push_back(std::log(t.price));
    return log_prices;
}

}  // namespace dcos
