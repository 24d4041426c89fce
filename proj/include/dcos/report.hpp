#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dcos/diagnostics.hpp"
#include "dcos/events.hpp"
#include "dcos/scaling.hpp"
#include "dcos/sweep.hpp"

namespace dcos {

// Numeric rendering for the report files.
//
// FullPrecision writes every defined value with max_digits10 so that staged
// runs re-load losslessly; undefined cells (no-event dcPct) stay blank.
//
// TableFidelity mirrors the published rendering: 3-decimal scientific
// thresholds and frequencies, two-decimal percentages and probabilities,
// p-values below 1e-4 as "<0.0001", and blank cells for zero-count
// frequencies, for dcPct when n_dc = 0, and for seDcPct when the share is
// degenerate (0 or 100 percent).
enum class ReportStyle { FullPrecision, TableFidelity };

// summary.csv: delta,nDc,nOs,nEv,fDc,fDc_se,fOs,fOs_se,fEv,fEv_se,dcPct,seDcPct
void write_summary_csv(const std::string& path, std::span<const ThresholdSummary> rows,
                       ReportStyle style);

// diagnostics.csv: delta,pMean,diff,pGeom,geoChi2p,geoKSp,lamHat,expKSp,
//                  lamCiLow,lamCiHigh,pPred
void write_diagnostics_csv(const std::string& path, std::span<const DiagnosticsRow> rows,
                           ReportStyle style);

// zone.csv: minDelta,maxDelta,nDeltas,meanDcPct,stdDcPct (header only when no
// zone was found).
void write_zone_csv(const std::string& path, const std::optional<ScalingZone>& zone,
                    ReportStyle style);

// regression.csv: event_class,beta,r_squared,p_value,n_points
void write_regression_csv(const std::string& path, const std::optional<ZoneReport>& report,
                          ReportStyle style);

// plotdata.csv: delta,fDc,fOs,fEv,dcPct
void write_plotdata_csv(const std::string& path, std::span<const ThresholdSummary> rows,
                        ReportStyle style);

// Event log dump: delta,kind,direction,tickIndex,logPrice,overshootLengthNorm
void write_events_csv(const std::string& path, double delta, std::span<const DcosEvent> events,
                      bool append = false);

// Cycle dump consumed by the diagnose stage: delta,overshootCount,overshootLengthNorm
void write_cycles_csv(const std::string& path, double delta, std::span<const CycleRecord> cycles,
                      bool append = false);
void write_cycles_header(const std::string& path);

// Stage inputs: re-load the corresponding CSVs. Blank cells map to absent
// optionals / zero counts exactly as written.
std::vector<ThresholdSummary> read_summary_csv(const std::string& path);

struct CycleGroup {
    double delta = 0.0;
    std::vector<CycleRecord> cycles;
};
std::vector<CycleGroup> read_cycles_csv(const std::string& path);

}  // namespace dcos
