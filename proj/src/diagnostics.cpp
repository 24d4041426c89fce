#include "dcos/diagnostics.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "dcos/special_functions.hpp"
#include "dcos/synth.hpp"

namespace dcos {

double renewal_benchmark_p() {
    static const double p0 = 1.0 - std::exp(-1.0);
    return p0;
}

DcProbability empirical_dc_probability(std::int64_t n_dc, std::int64_t n_os) {
    if (n_dc + n_os <= 0) throw NoEvents();

    DcProbability r;
    const double dc = static_cast<double>(n_dc);
    const double os = static_cast<double>(n_os);
    r.p1 = dc / (dc + os);
    if (n_dc > 0) {
        // Literal second form; algebraically identical to p1.
        r.p2 = 1.0 / (1.0 + os / dc);
        r.p_mean = 0.5 * (r.p1 + *r.p2);
        const double pm = *r.p_mean;
        const double v = pm * (1.0 - pm) / (dc + os);
        r.se = v > 0.0 ? std::sqrt(v) : 0.0;
        r.delta_p = pm - renewal_benchmark_p();
    }
    return r;
}

PMeanRegime classify_p_mean(double p, const RegimeBands& bands) {
    if (p < bands.p_low) return PMeanRegime::OvershootPersistence;
    if (p > bands.p_high) return PMeanRegime::AntiPersistent;
    return PMeanRegime::Renewal;
}

GeomRegime classify_p_geom(double p, const RegimeBands& bands) {
    if (p < bands.p_low) return GeomRegime::Trending;
    if (p > bands.p_high) return GeomRegime::Choppy;
    return GeomRegime::Memoryless;
}

LambdaRegime classify_lambda(double lambda, const RegimeBands& bands) {
    if (lambda < bands.lambda_low) return LambdaRegime::Persistence;
    if (lambda > bands.lambda_high) return LambdaRegime::AntiPersistence;
    return LambdaRegime::ScaleInvariant;
}

std::string to_string(PMeanRegime r) {
    switch (r) {
        case PMeanRegime::Renewal: return "renewal";
        case PMeanRegime::OvershootPersistence: return "overshoot_persistence";
        case PMeanRegime::AntiPersistent: return "anti_persistent";
    }
    return {};
}

std::string to_string(GeomRegime r) {
    switch (r) {
        case GeomRegime::Memoryless: return "memoryless";
        case GeomRegime::Trending: return "trending";
        case GeomRegime::Choppy: return "choppy";
    }
    return {};
}

std::string to_string(LambdaRegime r) {
    switch (r) {
        case LambdaRegime::ScaleInvariant: return "scale_invariant";
        case LambdaRegime::Persistence: return "persistence";
        case LambdaRegime::AntiPersistence: return "anti_persistence";
    }
    return {};
}

std::optional<Chi2Bins> geometric_chi2_bins(std::span<const std::int64_t> counts, double p,
                                            double min_expected) {
    if (counts.empty() || !(p > 0.0) || !(p < 1.0)) return std::nullopt;

    const double n = static_cast<double>(counts.size());
    std::int64_t k_max = 0;
    for (std::int64_t k : counts) k_max = std::max(k_max, k);

    // m individual bins 0..m-1 plus the tail [m, inf). Expected counts are
    // decreasing in k, so checking the last interior bin and the tail covers
    // all of them. dof = (m + 1) - 2 requires m >= 2.
    const double q = 1.0 - p;
    std::int64_t m = k_max + 1;
    auto all_expected_ok = [&](std::int64_t mm) {
        const double tail = n * std::pow(q, static_cast<double>(mm));
        const double last_interior = n * p * std::pow(q, static_cast<double>(mm - 1));
        return tail >= min_expected && last_interior >= min_expected;
    };
    while (m >= 2 && !all_expected_ok(m)) --m;
    if (m < 2) return std::nullopt;

    Chi2Bins bins;
    bins.observed.assign(static_cast<std::size_t>(m) + 1, 0.0);
    bins.expected.assign(static_cast<std::size_t>(m) + 1, 0.0);
    for (std::int64_t k : counts) {
        const std::size_t idx = static_cast<std::size_t>(std::min(k, m));
        bins.observed[idx] += 1.0;
    }
    for (std::int64_t k = 0; k < m; ++k)
        bins.expected[static_cast<std::size_t>(k)] = n * p * std::pow(q, static_cast<double>(k));
    bins.expected.back() = n * std::pow(q, static_cast<double>(m));
    bins.dof = static_cast<int>(m + 1) - 2;
    return bins;
}

double ks_statistic_geometric(std::span<const std::int64_t> counts, double p) {
    std::int64_t k_max = 0;
    for (std::int64_t k : counts) k_max = std::max(k_max, k);
    std::vector<double> cum(static_cast<std::size_t>(k_max) + 1, 0.0);
    for (std::int64_t k : counts) cum[static_cast<std::size_t>(k)] += 1.0;
    const double n = static_cast<double>(counts.size());
    const double q = 1.0 - p;

    double d = 0.0;
    double running = 0.0;
    for (std::int64_t k = 0; k <= k_max; ++k) {
        running += cum[static_cast<std::size_t>(k)];
        const double emp = running / n;
        const double model = 1.0 - std::pow(q, static_cast<double>(k) + 1.0);
        d = std::max(d, std::abs(emp - model));
    }
    return d;
}

GeometricFit geometric_test(std::span<const std::int64_t> overshoot_counts) {
    if (overshoot_counts.empty()) throw EmptyCycles();

    GeometricFit fit;
    fit.n_cycles = static_cast<std::int64_t>(overshoot_counts.size());
    double sum = 0.0;
    for (std::int64_t k : overshoot_counts) sum += static_cast<double>(k);
    const double mean_k = sum / static_cast<double>(fit.n_cycles);
    fit.p_geom = 1.0 / (1.0 + mean_k);

    if (mean_k == 0.0) return fit;  // degenerate: all K = 0, tests skipped

    if (auto bins = geometric_chi2_bins(overshoot_counts, fit.p_geom)) {
        double stat = 0.0;
        for (std::size_t i = 0; i < bins->observed.size(); ++i) {
            const double diff = bins->observed[i] - bins->expected[i];
            stat += diff * diff / bins->expected[i];
        }
        fit.chi2_p = chi2_sf(stat, bins->dof);
    }

    const double d = ks_statistic_geometric(overshoot_counts, fit.p_geom);
    fit.ks_p = kolmogorov_sf(d, fit.n_cycles);
    return fit;
}

double ks_statistic_exponential(std::span<const double> sorted_lengths, double lambda) {
    const double n = static_cast<double>(sorted_lengths.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sorted_lengths.size(); ++i) {
        const double f = 1.0 - std::exp(-lambda * sorted_lengths[i]);
        const double hi = (static_cast<double>(i) + 1.0) / n - f;
        const double lo = f - static_cast<double>(i) / n;
        d = std::max(d, std::max(hi, lo));
    }
    return d;
}

namespace {

// Parametric bootstrap: resample Exp(lambda_hat) at the observed size,
// re-estimating the rate each time, and rank the observed statistic.
double bootstrap_exp_ks_p(double observed_d, double lambda_hat, std::size_t n,
                          const ExpKsOptions& ks) {
    SynthRng rng(ks.seed);
    int at_least = 0;
    std::vector<double> sample(n);
    for (int b = 0; b < ks.n_bootstrap; ++b) {
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            sample[i] = rng.exponential(lambda_hat);
            sum += sample[i];
        }
        const double refit = static_cast<double>(n) / sum;
        std::sort(sample.begin(), sample.end());
        if (ks_statistic_exponential(sample, refit) >= observed_d) ++at_least;
    }
    return (1.0 + at_least) / (1.0 + ks.n_bootstrap);
}

}  // namespace

ExponentialFit exponential_test(std::span<const double> lengths, const ExpKsOptions& ks) {
    if (lengths.empty()) throw EmptyLengths();
    for (double x : lengths)
        if (!(x >= 0.0)) throw InvalidRange("overshoot lengths must be non-negative");

    const double n = static_cast<double>(lengths.size());
    const double mean = std::accumulate(lengths.begin(), lengths.end(), 0.0) / n;
    if (!(mean > 0.0)) throw ZeroMean();

    ExponentialFit fit;
    fit.n_overshoots = static_cast<std::int64_t>(lengths.size());
    fit.lambda_hat = 1.0 / mean;

    std::vector<double> sorted(lengths.begin(), lengths.end());
    std::sort(sorted.begin(), sorted.end());
    const double d = ks_statistic_exponential(sorted, fit.lambda_hat);
    if (ks.parametric_bootstrap) {
        fit.ks_p = bootstrap_exp_ks_p(d, fit.lambda_hat, sorted.size(), ks);
    } else {
        fit.ks_p = kolmogorov_sf(d, fit.n_overshoots);
    }

    const double half_width = 1.96 / std::sqrt(n);
    fit.ci_low = fit.lambda_hat * (1.0 - half_width);
    fit.ci_high = fit.lambda_hat * (1.0 + half_width);
    fit.p_pred = 1.0 - std::exp(-fit.lambda_hat);
    return fit;
}

DiagnosticsRow diagnostics_row(double delta, const ThresholdSummary& summary,
                               std::span<const CycleRecord> cycles,
                               const DiagnosticsConfig& cfg) {
    DiagnosticsRow row;
    row.delta = delta;

    if (summary.n_ev > 0) {
        const DcProbability dcp = empirical_dc_probability(summary.n_dc, summary.n_os);
        row.p_mean = dcp.p_mean;
        row.diff = dcp.delta_p;
    }

    if (!cycles.empty()) {
        std::vector<std::int64_t> counts;
        counts.reserve(cycles.size());
        for (const CycleRecord& c : cycles) counts.push_back(c.overshoot_count);
        const GeometricFit geo = geometric_test(counts);
        row.p_geom = geo.p_geom;
        row.geo_chi2_p = geo.chi2_p;
        row.geo_ks_p = geo.ks_p;

        if (static_cast<std::int64_t>(cycles.size()) >= cfg.min_exp_lengths) {
            std::vector<double> lengths;
            lengths.reserve(cycles.size());
            for (const CycleRecord& c : cycles) lengths.push_back(c.overshoot_length_norm);
            try {
                // Per-threshold sub-seed keeps bootstrap output independent
                // of sweep scheduling.
                ExpKsOptions ks = cfg.exp_ks;
                ks.seed ^= std::bit_cast<std::uint64_t>(delta);
                const ExponentialFit exp_fit = exponential_test(lengths, ks);
                row.lam_hat = exp_fit.lambda_hat;
                row.exp_ks_p = exp_fit.ks_p;
                row.lam_ci_low = exp_fit.ci_low;
                row.lam_ci_high = exp_fit.ci_high;
                row.p_pred = exp_fit.p_pred;
            } catch (const ZeroMean&) {
                // all-zero lengths: leave the exponential columns blank
            }
        }
    }
    return row;
}

ConsistencyReport consistency_check(const DiagnosticsRow& row, double tol, double tol_lambda) {
    if (!row.p_mean || !row.p_geom || !row.p_pred || !row.lam_hat)
        throw MissingFields("consistency_check needs p_mean, p_geom, p_pred, lam_hat");

    ConsistencyReport rep;
    const double a = *row.p_mean;
    const double b = *row.p_geom;
    const double c = *row.p_pred;
    rep.max_pairwise_diff =
        std::max({std::abs(a - b), std::abs(a - c), std::abs(b - c)});
    rep.lambda_deviation = std::abs(*row.lam_hat - 1.0);
    const bool p_ok = rep.max_pairwise_diff <= tol;
    const bool lambda_ok = rep.lambda_deviation <= tol_lambda;
    rep.consistent = p_ok && lambda_ok;
    rep.detail = std::string(p_ok ? "p estimates agree" : "p estimates diverge") + "; " +
                 (lambda_ok ? "lambda near 1" : "lambda away from 1");
    return rep;
}

}  // namespace dcos
