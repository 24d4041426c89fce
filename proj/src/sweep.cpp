#include "dcos/sweep.hpp"

#include <cmath>
#include <mutex>

#include "parallel_util.hpp"

namespace dcos {

namespace {

double binomial_se(double f, std::int64_t n) {
    if (n <= 0) return 0.0;
    const double v = f * (1.0 - f) / static_cast<double>(n);
    return v > 0.0 ? std::sqrt(v) : 0.0;
}

}  // namespace

ThresholdSummary summarize_counts(double delta, const EventCounts& counts,
                                  std::int64_t n_ticks) {
    ThresholdSummary s;
    s.delta = delta;
    s.n_dc = counts.n_dc;
    s.n_os = counts.n_os;
    s.n_ev = counts.n_ev;
    const double nt = static_cast<double>(n_ticks);
    s.f_dc = static_cast<double>(s.n_dc) / nt;
    s.f_os = static_cast<double>(s.n_os) / nt;
    s.f_ev = s.f_dc + s.f_os;
    s.f_dc_se = binomial_se(s.f_dc, n_ticks);
    s.f_os_se = binomial_se(s.f_os, n_ticks);
    s.f_ev_se = binomial_se(s.f_ev, n_ticks);
    if (s.n_ev > 0) {
        const double p = static_cast<double>(s.n_dc) / static_cast<double>(s.n_ev);
        s.dc_pct = 100.0 * p;
        s.dc_pct_se = 100.0 * binomial_se(p, s.n_ev);
    }
    return s;
}

ThresholdGrid::ThresholdGrid(std::vector<double> deltas) : deltas_(std::move(deltas)) {
    if (deltas_.size() < 2) throw InvalidRange("grid needs at least 2 points");
    for (double d : deltas_)
        if (!(d > 0.0) || !std::isfinite(d)) throw InvalidRange("grid deltas must be positive");
    const double ratio = deltas_[1] / deltas_[0];
    for (std::size_t i = 1; i < deltas_.size(); ++i) {
        if (!(deltas_[i] > deltas_[i - 1])) throw InvalidRange("grid must be strictly increasing");
        const double r = deltas_[i] / deltas_[i - 1];
        if (std::abs(r / ratio - 1.0) > 1e-12)
            throw InvalidRange("grid spacing is not logarithmic");
    }
}

ThresholdGrid make_grid(double delta_min, double delta_max, int n) {
    if (!(delta_min > 0.0) || !(delta_min < delta_max) || !std::isfinite(delta_max))
        throw InvalidRange("require 0 < delta_min < delta_max");
    if (n < 2) throw InvalidRange("require n >= 2");

    std::vector<double> deltas(static_cast<std::size_t>(n));
    const double log_min = std::log(delta_min);
    const double log_max = std::log(delta_max);
    for (int i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(n - 1);
        deltas[static_cast<std::size_t>(i)] = std::exp(log_min + t * (log_max - log_min));
    }
    deltas.front() = delta_min;  // endpoints exact
    deltas.back() = delta_max;
    return ThresholdGrid(std::move(deltas));
}

ThresholdSummary summarize_threshold(std::span<const double> log_prices, std::int64_t n_ticks,
                                     Threshold delta) {
    if (n_ticks <= 0) throw InvalidRange("n_ticks must be positive");
    return summarize_counts(delta.delta, count_events(log_prices, delta), n_ticks);
}

void sweep_each(const TickSeries& series, const ThresholdGrid& grid, int jobs,
                const SweepConsumer& consume) {
    if (series.empty()) throw EmptySeries();
    const std::vector<double> log_prices = to_log_prices(series);
    const std::int64_t n_ticks = static_cast<std::int64_t>(series.n_ticks());

    std::mutex consume_mutex;
    detail::parallel_for_index(grid.size(), jobs, [&](std::size_t i) {
        auto per_delta = count_events_with_cycles(log_prices, Threshold(grid[i]));
        const ThresholdSummary s = summarize_counts(grid[i], per_delta.counts, n_ticks);
        std::lock_guard<std::mutex> lock(consume_mutex);
        consume(i, s, per_delta.cycles);
    });
}

std::vector<ThresholdResult> run_sweep(const TickSeries& series, const ThresholdGrid& grid,
                                       int jobs) {
    std::vector<ThresholdResult> results(grid.size());
    sweep_each(series, grid, jobs,
               [&results](std::size_t i, const ThresholdSummary& summary,
                          const std::vector<CycleRecord>& cycles) {
                   results[i].summary = summary;
                   results[i].cycles = cycles;
               });
    return results;
}

}  // namespace dcos
