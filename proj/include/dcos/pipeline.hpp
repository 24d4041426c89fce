#pragma once

#include <vector>

#include "dcos/diagnostics.hpp"
#include "dcos/scaling.hpp"
#include "dcos/sweep.hpp"
#include "dcos/tick_series.hpp"

namespace dcos {

// One grid point of the full analysis: summary plus renewal diagnostics.
struct PipelineRow {
    ThresholdSummary summary;
    DiagnosticsRow diagnostics;
};

struct PipelineOptions {
    int jobs = 0;  // 0 = hardware concurrency
    DiagnosticsConfig diag;
    bool keep_cycles = false;  // retain per-threshold cycle records
};

struct PipelineResult {
    std::vector<PipelineRow> rows;
    std::vector<std::vector<CycleRecord>> cycles;  // populated iff keep_cycles
};

// Runs extraction, summary, and diagnostics for every grid point, in
// parallel, with results in grid order. Deterministic for any jobs value.
PipelineResult run_pipeline(const TickSeries& series, const ThresholdGrid& grid,
                            const PipelineOptions& options = {});

}  // namespace dcos
