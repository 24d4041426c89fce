#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dcos/errors.hpp"

namespace dcos {

// One (timestamp, midprice) sample. Timestamps are epoch milliseconds (UTC);
// prices must be positive and finite so a log-price always exists.
struct Tick {
    std::int64_t timestamp_ms = 0;
    double price = 0.0;

    friend bool operator==(const Tick&, const Tick&) = default;
};

// Ordered tick sequence. Timestamps are non-decreasing (duplicates allowed,
// order preserved); immutable after load and safe to share across threads.
class TickSeries {
public:
    TickSeries() = default;
    explicit TickSeries(std::vector<Tick> ticks);

    const std::vector<Tick>& ticks() const { return ticks_; }
    std::size_t n_ticks() const { return ticks_.size(); }
    bool empty() const { return ticks_.empty(); }

    friend bool operator==(const TickSeries&, const TickSeries&) = default;

private:
    std::vector<Tick> ticks_;
};

// Column mapping for delimited text input. The file must have a header row
// naming both mapped columns.
struct CsvFormat {
    char delimiter = ',';
    std::string time_column = "timestamp";
    std::string price_column = "price";
};

// Loads and validates a tick series. Throws FileNotFound, ParseError,
// NonPositivePrice, TimestampRegression, or EmptySeries (no data rows).
TickSeries load_ticks(const std::string& path, const CsvFormat& format = {});

// Writes a series in the default load format with round-trip-exact prices.
void write_ticks(const TickSeries& series, const std::string& path);

// Natural-log prices, one per tick. All thresholding downstream happens in
// log space.
std::vector<double> to_log_prices(const TickSeries& series);

}  // namespace dcos
