#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dcos/sweep.hpp"

namespace dcos {

// Scaling-zone detection band: enter at the first dcPct >= target_pct, extend
// while dcPct stays within target_pct +/- tolerance_pct.
struct ScalingConfig {
    double target_pct = 61.21;
    double tolerance_pct = 2.5;
};

enum class ZoneLabel { MicrostructureNoise, Scaling, DataScarcity };

std::string to_string(ZoneLabel label);

// Detected zone: a contiguous index range plus per-grid-point labels. All
// indices before the zone are MicrostructureNoise, all after DataScarcity.
struct ScalingZone {
    double min_delta = 0.0;
    double max_delta = 0.0;
    std::size_t first_index = 0;
    std::size_t last_index = 0;
    std::size_t n_deltas = 0;
    double mean_dc_pct = 0.0;
    double std_dc_pct = 0.0;  // sample standard deviation (n-1)
    std::vector<ZoneLabel> labels;
};

// Returns the zone, or nullopt when no row reaches target_pct (all labels
// MicrostructureNoise in that case).
struct ZoneDetection {
    std::optional<ScalingZone> zone;
    std::vector<ZoneLabel> labels;
};

ZoneDetection detect_zone(std::span<const ThresholdSummary> rows, const ScalingConfig& cfg = {});

// Ordinary least squares in log10-log10 space: beta is the power-law
// exponent of f(delta) ~ delta^beta.
struct RegressionResult {
    double beta = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    double p_value = 1.0;  // two-sided t-test on the slope, n-2 dof
    std::size_t n_points = 0;
};

RegressionResult fit_power_law(std::span<const double> deltas, std::span<const double> freqs);

// Zone statistics plus the three per-event-class power-law fits.
struct ZoneReport {
    ScalingZone zone;
    RegressionResult fit_tot;
    RegressionResult fit_dc;
    RegressionResult fit_os;
};

ZoneReport zone_report(const ScalingZone& zone, std::span<const ThresholdSummary> rows);

}  // namespace dcos
