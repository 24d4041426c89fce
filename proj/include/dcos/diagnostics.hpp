#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dcos/events.hpp"
#include "dcos/sweep.hpp"

namespace dcos {

// Probability that an exponential renewal completes within one mean interval,
// 1 - e^{-1}: the theoretical Dc-share benchmark.
double renewal_benchmark_p();

// Empirical Dc probability from event counts. p1 and p2 are two literal
// evaluations of the same algebraic quantity; their mean is the estimator.
struct DcProbability {
    double p1 = 0.0;
    std::optional<double> p2;  // absent when n_dc = 0 (formula divides by n_dc)
    std::optional<double> p_mean;
    std::optional<double> se;
    std::optional<double> delta_p;  // p_mean - (1 - e^{-1})
};

DcProbability empirical_dc_probability(std::int64_t n_dc, std::int64_t n_os);

enum class PMeanRegime { Renewal, OvershootPersistence, AntiPersistent };
enum class GeomRegime { Memoryless, Trending, Choppy };
enum class LambdaRegime { ScaleInvariant, Persistence, AntiPersistence };

// Interpretation bands for the three diagnostics. The p bands are the
// published interpretation table; the lambda band brackets 1.
struct RegimeBands {
    double p_low = 0.60;
    double p_high = 0.66;
    double lambda_low = 0.90;
    double lambda_high = 1.10;
};

PMeanRegime classify_p_mean(double p, const RegimeBands& bands = {});
GeomRegime classify_p_geom(double p, const RegimeBands& bands = {});
LambdaRegime classify_lambda(double lambda, const RegimeBands& bands = {});

std::string to_string(PMeanRegime r);
std::string to_string(GeomRegime r);
std::string to_string(LambdaRegime r);

// Geometric fit of the per-cycle overshoot counts.
struct GeometricFit {
    double p_geom = 0.0;  // 1 / (1 + mean K)
    std::optional<double> chi2_p;
    std::optional<double> ks_p;
    std::int64_t n_cycles = 0;
};

// Chi-squared binning for Geom(p): bins k = 0,1,...,tail with the tail merged
// upward until every expected count is >= min_expected.
struct Chi2Bins {
    std::vector<double> observed;
    std::vector<double> expected;  // same length; last bin is the merged tail
    int dof = 0;                   // bins - 1 - 1 (one estimated parameter)
};
std::optional<Chi2Bins> geometric_chi2_bins(std::span<const std::int64_t> counts, double p,
                                            double min_expected = 5.0);

GeometricFit geometric_test(std::span<const std::int64_t> overshoot_counts);

// Exponential fit of the normalized overshoot lengths (threshold = 1 units).
struct ExponentialFit {
    double lambda_hat = 0.0;  // 1 / mean length
    std::optional<double> ks_p;
    double ci_low = 0.0;   // lambda_hat * (1 - 1.96/sqrt(n))
    double ci_high = 0.0;  // lambda_hat * (1 + 1.96/sqrt(n))
    double p_pred = 0.0;   // 1 - e^{-lambda_hat}
    std::int64_t n_overshoots = 0;
};

// The standard one-sample KS p-value treats lambda_hat as known, which is
// conservative when it was estimated from the same sample. The bootstrap
// option replaces it with a parametric-bootstrap p-value (off by default).
struct ExpKsOptions {
    bool parametric_bootstrap = false;
    int n_bootstrap = 200;
    std::uint64_t seed = 1;
};

ExponentialFit exponential_test(std::span<const double> lengths, const ExpKsOptions& ks = {});

// One-sample KS statistics, exposed for tests.
double ks_statistic_exponential(std::span<const double> sorted_lengths, double lambda);
double ks_statistic_geometric(std::span<const std::int64_t> counts, double p);

// Per-threshold diagnostics row. Absent fields serialize as blank cells;
// they appear wherever a prerequisite fails (no events, no cycles, fewer
// lengths than min_exp_lengths, degenerate fits).
struct DiagnosticsRow {
    double delta = 0.0;
    std::optional<double> p_mean;
    std::optional<double> diff;
    std::optional<double> p_geom;
    std::optional<double> geo_chi2_p;
    std::optional<double> geo_ks_p;
    std::optional<double> lam_hat;
    std::optional<double> exp_ks_p;
    std::optional<double> lam_ci_low;
    std::optional<double> lam_ci_high;
    std::optional<double> p_pred;
};

struct DiagnosticsConfig {
    std::int64_t min_exp_lengths = 5;  // exponential fit needs this many cycles
    ExpKsOptions exp_ks;
};

DiagnosticsRow diagnostics_row(double delta, const ThresholdSummary& summary,
                               std::span<const CycleRecord> cycles,
                               const DiagnosticsConfig& cfg = {});

// Integrated consistency check: the three p estimates agree within tol and
// lambda_hat sits within tol_lambda of 1.
struct ConsistencyReport {
    bool consistent = false;
    double max_pairwise_diff = 0.0;
    double lambda_deviation = 0.0;
    std::string detail;
};

ConsistencyReport consistency_check(const DiagnosticsRow& row, double tol = 0.02,
                                    double tol_lambda = 0.10);

}  // namespace dcos
