#include "dcos/pipeline.hpp"

#include "parallel_util.hpp"

namespace dcos {

PipelineResult run_pipeline(const TickSeries& series, const ThresholdGrid& grid,
                            const PipelineOptions& options) {
    if (series.empty()) throw EmptySeries();
    const std::vector<double> log_prices = to_log_prices(series);
    const std::int64_t n_ticks = static_cast<std::int64_t>(series.n_ticks());

    PipelineResult result;
    result.rows.resize(grid.size());
    if (options.keep_cycles) result.cycles.resize(grid.size());

    detail::parallel_for_index(grid.size(), options.jobs, [&](std::size_t i) {
        auto per_delta = count_events_with_cycles(log_prices, Threshold(grid[i]));
        const ThresholdSummary s = summarize_counts(grid[i], per_delta.counts, n_ticks);
        result.rows[i].summary = s;
        result.rows[i].diagnostics =
            diagnostics_row(grid[i], s, per_delta.cycles, options.diag);
        if (options.keep_cycles) result.cycles[i] = std::move(per_delta.cycles);
    });
    return result;
}

}  // namespace dcos
