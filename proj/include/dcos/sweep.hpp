#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "dcos/events.hpp"
#include "dcos/tick_series.hpp"

namespace dcos {

// Logarithmically spaced threshold grid with exact endpoints:
// deltas[i] = delta_min * (delta_max/delta_min)^(i/(n-1)).
class ThresholdGrid {
public:
    explicit ThresholdGrid(std::vector<double> deltas);

    const std::vector<double>& deltas() const { return deltas_; }
    std::size_t size() const { return deltas_.size(); }
    double operator[](std::size_t i) const { return deltas_[i]; }

private:
    std::vector<double> deltas_;
};

ThresholdGrid make_grid(double delta_min, double delta_max, int n);

// Per-threshold counts, per-tick frequencies with binomial standard errors,
// and the Dc share in percent. dc_pct is absent when n_ev = 0.
struct ThresholdSummary {
    double delta = 0.0;
    std::int64_t n_dc = 0;
    std::int64_t n_os = 0;
    std::int64_t n_ev = 0;
    double f_dc = 0.0;
    double f_dc_se = 0.0;
    double f_os = 0.0;
    double f_os_se = 0.0;
    double f_ev = 0.0;
    double f_ev_se = 0.0;
    std::optional<double> dc_pct;
    std::optional<double> dc_pct_se;
};

ThresholdSummary summarize_threshold(std::span<const double> log_prices,
                                     std::int64_t n_ticks, Threshold delta);

// Assembles a summary from already-extracted counts.
ThresholdSummary summarize_counts(double delta, const EventCounts& counts,
                                  std::int64_t n_ticks);

struct ThresholdResult {
    ThresholdSummary summary;
    std::vector<CycleRecord> cycles;
};

// Sweeps the grid, one extraction per threshold, in parallel when jobs != 1
// (jobs = 0 picks the hardware concurrency). Results come back in grid order
// and are bit-identical for any degree of parallelism.
std::vector<ThresholdResult> run_sweep(const TickSeries& series, const ThresholdGrid& grid,
                                       int jobs = 0);

// Streaming variant: invokes `consume(index, summary, cycles)` once per grid
// point from the worker that produced it, so cycle storage can be dropped as
// soon as it has been used. Invocation order is unspecified; index restores
// grid order.
using SweepConsumer =
    std::function<void(std::size_t, const ThresholdSummary&, const std::vector<CycleRecord>&)>;
void sweep_each(const TickSeries& series, const ThresholdGrid& grid, int jobs,
                const SweepConsumer& consume);

}  // namespace dcos
