#include "dcos/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace dcos {

namespace {

std::string fmt(double v, const char* spec) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

std::string full(double v) { return fmt(v, "%.17g"); }
std::string sci3(double v) { return fmt(v, "%.3e"); }
std::string fix2(double v) { return fmt(v, "%.2f"); }

std::string p_value_cell(const std::optional<double>& p, ReportStyle style) {
    if (!p) return {};
    if (style == ReportStyle::FullPrecision) return full(*p);
    if (*p < 1e-4) return "<0.0001";
    return fix2(*p);
}

std::string opt_cell(const std::optional<double>& v, ReportStyle style) {
    if (!v) return {};
    return style == ReportStyle::FullPrecision ? full(*v) : fix2(*v);
}

std::ofstream open_out(const std::string& path, bool append = false) {
    std::ofstream out(path, append ? std::ios::app : std::ios::trunc);
    if (!out.is_open()) throw Error("cannot open for writing: " + path);
    return out;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

std::optional<double> parse_opt(const std::string& s) {
    if (s.empty()) return std::nullopt;
    if (!s.empty() && s.front() == '<') return 0.0;  // censored p-value cell
    return std::stod(s);
}

}  // namespace

void write_summary_csv(const std::string& path, std::span<const ThresholdSummary> rows,
                       ReportStyle style) {
    auto out = open_out(path);
    out << "delta,nDc,nOs,nEv,fDc,fDc_se,fOs,fOs_se,fEv,fEv_se,dcPct,seDcPct\n";
    const bool fidelity = style == ReportStyle::TableFidelity;
    for (const ThresholdSummary& r : rows) {
        out << (fidelity ? sci3(r.delta) : full(r.delta));
        out << ',' << r.n_dc << ',' << r.n_os << ',' << r.n_ev;

        auto freq_pair = [&](std::int64_t count, double f, double se) {
            if (fidelity && count == 0) {
                out << ",,";
            } else if (fidelity) {
                out << ',' << sci3(f) << ',' << sci3(se);
            } else {
                out << ',' << full(f) << ',' << full(se);
            }
        };
        freq_pair(r.n_dc, r.f_dc, r.f_dc_se);
        freq_pair(r.n_os, r.f_os, r.f_os_se);
        freq_pair(r.n_ev, r.f_ev, r.f_ev_se);

        const bool blank_pct = !r.dc_pct || (fidelity && r.n_dc == 0);
        const bool blank_se = blank_pct || (fidelity && (r.n_os == 0 || r.n_dc == 0));
        out << ',' << (blank_pct ? std::string{} : (fidelity ? fix2(*r.dc_pct) : full(*r.dc_pct)));
        out << ','
            << (blank_se ? std::string{} : (fidelity ? fix2(*r.dc_pct_se) : full(*r.dc_pct_se)));
        out << '\n';
    }
}

void write_diagnostics_csv(const std::string& path, std::span<const DiagnosticsRow> rows,
                           ReportStyle style) {
    auto out = open_out(path);
    out << "delta,pMean,diff,pGeom,geoChi2p,geoKSp,lamHat,expKSp,lamCiLow,lamCiHigh,pPred\n";
    const bool fidelity = style == ReportStyle::TableFidelity;
    for (const DiagnosticsRow& r : rows) {
        out << (fidelity ? sci3(r.delta) : full(r.delta));
        out << ',' << opt_cell(r.p_mean, style);
        out << ',' << opt_cell(r.diff, style);
        out << ',' << opt_cell(r.p_geom, style);
        out << ',' << p_value_cell(r.geo_chi2_p, style);
        out << ',' << p_value_cell(r.geo_ks_p, style);
        out << ',' << opt_cell(r.lam_hat, style);
        out << ',' << p_value_cell(r.exp_ks_p, style);
        out << ',' << opt_cell(r.lam_ci_low, style);
        out << ',' << opt_cell(r.lam_ci_high, style);
        out << ',' << opt_cell(r.p_pred, style);
        out << '\n';
    }
}

void write_zone_csv(const std::string& path, const std::optional<ScalingZone>& zone,
                    ReportStyle style) {
    auto out = open_out(path);
    out << "minDelta,maxDelta,nDeltas,meanDcPct,stdDcPct\n";
    if (!zone) return;
    const bool fidelity = style == ReportStyle::TableFidelity;
    if (fidelity) {
        out << fmt(zone->min_delta, "%.4f") << ',' << fmt(zone->max_delta, "%.4f") << ','
            << zone->n_deltas << ',' << fix2(zone->mean_dc_pct) << ','
            << fix2(zone->std_dc_pct) << '\n';
    } else {
        out << full(zone->min_delta) << ',' << full(zone->max_delta) << ',' << zone->n_deltas
            << ',' << full(zone->mean_dc_pct) << ',' << full(zone->std_dc_pct) << '\n';
    }
}

void write_regression_csv(const std::string& path, const std::optional<ZoneReport>& report,
                          ReportStyle style) {
    auto out = open_out(path);
    out << "event_class,beta,r_squared,p_value,n_points\n";
    if (!report) return;
    const bool fidelity = style == ReportStyle::TableFidelity;
    auto row = [&](const char* name, const RegressionResult& r) {
        if (fidelity) {
            out << name << ',' << fix2(r.beta) << ',' << fix2(r.r_squared) << ','
                << p_value_cell(r.p_value, ReportStyle::TableFidelity) << ',' << r.n_points
                << '\n';
        } else {
            out << name << ',' << full(r.beta) << ',' << full(r.r_squared) << ','
                << full(r.p_value) << ',' << r.n_points << '\n';
        }
    };
    row("tot", report->fit_tot);
    row("dc", report->fit_dc);
    row("os", report->fit_os);
}

void write_plotdata_csv(const std::string& path, std::span<const ThresholdSummary> rows,
                        ReportStyle style) {
    auto out = open_out(path);
    out << "delta,fDc,fOs,fEv,dcPct\n";
    const bool fidelity = style == ReportStyle::TableFidelity;
    for (const ThresholdSummary& r : rows) {
        out << (fidelity ? sci3(r.delta) : full(r.delta));
        out << ',' << (fidelity ? sci3(r.f_dc) : full(r.f_dc));
        out << ',' << (fidelity ? sci3(r.f_os) : full(r.f_os));
        out << ',' << (fidelity ? sci3(r.f_ev) : full(r.f_ev));
        const bool blank_pct = !r.dc_pct || (fidelity && r.n_dc == 0);
        out << ',' << (blank_pct ? std::string{} : (fidelity ? fix2(*r.dc_pct) : full(*r.dc_pct)));
        out << '\n';
    }
}

void write_events_csv(const std::string& path, double delta, std::span<const DcosEvent> events,
                      bool append) {
    auto out = open_out(path, append);
    if (!append) out << "delta,kind,direction,tickIndex,logPrice,overshootLengthNorm\n";
    for (const DcosEvent& e : events) {
        out << full(delta) << ',' << (e.kind == EventKind::Dc ? "dc" : "os") << ','
            << (e.direction == Direction::Up ? "up" : "down") << ',' << e.tick_index << ','
            << full(e.log_price) << ','
            << (e.overshoot_length_norm ? full(*e.overshoot_length_norm) : std::string{}) << '\n';
    }
}

void write_cycles_header(const std::string& path) {
    auto out = open_out(path);
    out << "delta,overshootCount,overshootLengthNorm\n";
}

void write_cycles_csv(const std::string& path, double delta, std::span<const CycleRecord> cycles,
                      bool append) {
    auto out = open_out(path, append);
    if (!append) out << "delta,overshootCount,overshootLengthNorm\n";
    for (const CycleRecord& c : cycles) {
        out << full(delta) << ',' << c.overshoot_count << ',' << full(c.overshoot_length_norm)
            << '\n';
    }
}

std::vector<ThresholdSummary> read_summary_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in.is_open()) throw FileNotFound(path);
    std::string line;
    if (!std::getline(in, line)) throw ParseError(1, "delta", "missing header row");

    std::vector<ThresholdSummary> rows;
    std::int64_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto f = split_csv(line);
        if (f.size() != 12) throw ParseError(line_no, "summary", "expected 12 fields");
        ThresholdSummary r;
        try {
            r.delta = std::stod(f[0]);
            r.n_dc = std::stoll(f[1]);
            r.n_os = std::stoll(f[2]);
            r.n_ev = std::stoll(f[3]);
            r.f_dc = f[4].empty() ? 0.0 : std::stod(f[4]);
            r.f_dc_se = f[5].empty() ? 0.0 : std::stod(f[5]);
            r.f_os = f[6].empty() ? 0.0 : std::stod(f[6]);
            r.f_os_se = f[7].empty() ? 0.0 : std::stod(f[7]);
            r.f_ev = f[8].empty() ? 0.0 : std::stod(f[8]);
            r.f_ev_se = f[9].empty() ? 0.0 : std::stod(f[9]);
            r.dc_pct = parse_opt(f[10]);
            r.dc_pct_se = parse_opt(f[11]);
        } catch (const std::exception&) {
            throw ParseError(line_no, "summary", "malformed numeric field");
        }
        // Fidelity files blank the dcPct cell when n_dc = 0; restore the
        // defined zero so downstream stages see the spec value.
        if (!r.dc_pct && r.n_ev > 0) r.dc_pct = 0.0;
        rows.push_back(r);
    }
    return rows;
}

std::vector<CycleGroup> read_cycles_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in.is_open()) throw FileNotFound(path);
    std::string line;
    if (!std::getline(in, line)) throw ParseError(1, "delta", "missing header row");

    std::vector<CycleGroup> groups;
    std::int64_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto f = split_csv(line);
        if (f.size() != 3) throw ParseError(line_no, "cycles", "expected 3 fields");
        double delta = 0.0;
        CycleRecord c;
        try {
            delta = std::stod(f[0]);
            c.overshoot_count = std::stoll(f[1]);
            c.overshoot_length_norm = std::stod(f[2]);
        } catch (const std::exception&) {
            throw ParseError(line_no, "cycles", "malformed numeric field");
        }
        if (groups.empty() || groups.back().delta != delta) groups.push_back({delta, {}});
        groups.back().cycles.push_back(c);
    }
    return groups;
}

}  // namespace dcos
