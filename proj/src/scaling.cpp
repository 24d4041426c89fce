#include "dcos/scaling.hpp"

#include <cmath>

#include "dcos/special_functions.hpp"

namespace dcos {

std::string to_string(ZoneLabel label) {
    switch (label) {
        case ZoneLabel::MicrostructureNoise: return "microstructure_noise";
        case ZoneLabel::Scaling: return "scaling";
        case ZoneLabel::DataScarcity: return "data_scarcity";
    }
    return {};
}

ZoneDetection detect_zone(std::span<const ThresholdSummary> rows, const ScalingConfig& cfg) {
    ZoneDetection result;
    result.labels.assign(rows.size(), ZoneLabel::MicrostructureNoise);

    const double lo = cfg.target_pct - cfg.tolerance_pct;
    const double hi = cfg.target_pct + cfg.tolerance_pct;
    auto in_band = [&](const ThresholdSummary& r) {
        return r.dc_pct && *r.dc_pct >= lo && *r.dc_pct <= hi;
    };

    std::size_t start = rows.size();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].dc_pct && *rows[i].dc_pct >= cfg.target_pct) {
            start = i;
            break;
        }
    }
    // The entry point must itself sit inside the band, otherwise the
    // extension rule has nothing to extend.
    if (start == rows.size() || !in_band(rows[start])) return result;

    std::size_t end = start;
    while (end + 1 < rows.size() && in_band(rows[end + 1])) ++end;

    ScalingZone zone;
    zone.first_index = start;
    zone.last_index = end;
    zone.n_deltas = end - start + 1;
    zone.min_delta = rows[start].delta;
    zone.max_delta = rows[end].delta;

    double sum = 0.0;
    for (std::size_t i = start; i <= end; ++i) sum += *rows[i].dc_pct;
    zone.mean_dc_pct = sum / static_cast<double>(zone.n_deltas);
    double ss = 0.0;
    for (std::size_t i = start; i <= end; ++i) {
        const double d = *rows[i].dc_pct - zone.mean_dc_pct;
        ss += d * d;
    }
    zone.std_dc_pct =
        zone.n_deltas > 1 ? std::sqrt(ss / static_cast<double>(zone.n_deltas - 1)) : 0.0;

    for (std::size_t i = start; i <= end; ++i) result.labels[i] = ZoneLabel::Scaling;
    for (std::size_t i = end + 1; i < rows.size(); ++i)
        result.labels[i] = ZoneLabel::DataScarcity;
    zone.labels = result.labels;
    result.zone = std::move(zone);
    return result;
}

RegressionResult fit_power_law(std::span<const double> deltas, std::span<const double> freqs) {
    if (deltas.size() != freqs.size() || deltas.size() < 3) throw TooFewPoints(deltas.size());
    for (std::size_t i = 0; i < freqs.size(); ++i)
        if (!(freqs[i] > 0.0)) throw NonPositiveFrequency(i);

    const std::size_t n = deltas.size();
    std::vector<double> xs(n), ys(n);
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = std::log10(deltas[i]);
        ys[i] = std::log10(freqs[i]);
    }

    double x_mean = 0.0, y_mean = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        x_mean += xs[i];
        y_mean += ys[i];
    }
    x_mean /= static_cast<double>(n);
    y_mean /= static_cast<double>(n);

    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = xs[i] - x_mean;
        const double dy = ys[i] - y_mean;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (!(sxx > 0.0)) throw InvalidRange("regression abscissae are all equal");

    RegressionResult r;
    r.n_points = n;
    r.beta = sxy / sxx;
    r.intercept = y_mean - r.beta * x_mean;

    const double ss_res = std::max(0.0, syy - r.beta * sxy);
    r.r_squared = syy > 0.0 ? 1.0 - ss_res / syy : 1.0;

    const int dof = static_cast<int>(n) - 2;
    const double resid_var = ss_res / static_cast<double>(dof);
    if (resid_var <= 0.0) {
        r.p_value = 0.0;  // exact fit: the slope is noiseless
    } else {
        const double se_beta = std::sqrt(resid_var / sxx);
        r.p_value = t_sf_two_sided(r.beta / se_beta, dof);
    }
    return r;
}

ZoneReport zone_report(const ScalingZone& zone, std::span<const ThresholdSummary> rows) {
    std::vector<double> deltas, f_tot, f_dc, f_os;
    for (std::size_t i = zone.first_index; i <= zone.last_index && i < rows.size(); ++i) {
        deltas.push_back(rows[i].delta);
        f_tot.push_back(rows[i].f_ev);
        f_dc.push_back(rows[i].f_dc);
        f_os.push_back(rows[i].f_os);
    }
    ZoneReport report;
    report.zone = zone;
    report.fit_tot = fit_power_law(deltas, f_tot);
    report.fit_dc = fit_power_law(deltas, f_dc);
    report.fit_os = fit_power_law(deltas, f_os);
    return report;
}

}  // namespace dcos
