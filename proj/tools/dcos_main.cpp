// Command-line front end: full analysis pipeline, individual stages, and the
// synthetic data generators.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "dcos/pipeline.hpp"
#include "dcos/report.hpp"
#include "dcos/synth.hpp"

namespace fs = std::filesystem;

namespace {

struct GridFlags {
    double delta_min = 1e-5;
    double delta_max = 1.0;
    int n_deltas = 50;
};

struct ZoneFlags {
    double target_pct = 61.21;
    double tolerance_pct = 2.5;
};

void add_grid_flags(CLI::App* cmd, GridFlags& g) {
    cmd->add_option("--delta-min", g.delta_min, "Smallest threshold")->capture_default_str();
    cmd->add_option("--delta-max", g.delta_max, "Largest threshold")->capture_default_str();
    cmd->add_option("--n-deltas", g.n_deltas, "Grid size")->capture_default_str();
}

void add_zone_flags(CLI::App* cmd, ZoneFlags& z) {
    cmd->add_option("--target-pct", z.target_pct, "Zone entry dcPct")->capture_default_str();
    cmd->add_option("--tolerance-pct", z.tolerance_pct, "Zone band half-width")
        ->capture_default_str();
}

void add_input_flags(CLI::App* cmd, std::string& input, dcos::CsvFormat& format) {
    cmd->add_option("--input", input, "Tick CSV file")->required();
    cmd->add_option("--time-col", format.time_column, "Timestamp column name")
        ->capture_default_str();
    cmd->add_option("--price-col", format.price_column, "Price column name")
        ->capture_default_str();
    std::string delim = ",";
    cmd->add_option_function<std::string>(
           "--delimiter",
           [&format](const std::string& d) {
               if (d.size() != 1) throw CLI::ValidationError("--delimiter must be one character");
               format.delimiter = d[0];
           },
           "Field delimiter")
        ->capture_default_str();
}

// Exit status 0 requires every output to load back; re-parse what has a
// reader and re-open the rest.
void verify_written(const std::string& path, std::size_t expect_rows, bool is_summary) {
    if (is_summary) {
        const auto rows = dcos::read_summary_csv(path);
        if (rows.size() != expect_rows)
            throw dcos::Error("verification failed: " + path + " row count mismatch");
        return;
    }
    std::ifstream in(path);
    std::string header;
    if (!in.is_open() || !std::getline(in, header) || header.empty())
        throw dcos::Error("verification failed: cannot re-read " + path);
}

int cmd_analyze(const std::string& input, const dcos::CsvFormat& format, const GridFlags& g,
                const ZoneFlags& z, const std::string& out_dir, int jobs, bool fidelity,
                bool exp_ks_bootstrap, const std::string& events_path,
                const std::string& cycles_path) {
    const dcos::TickSeries series = dcos::load_ticks(input, format);
    const dcos::ThresholdGrid grid = dcos::make_grid(g.delta_min, g.delta_max, g.n_deltas);

    dcos::PipelineOptions options;
    options.jobs = jobs;
    options.keep_cycles = !cycles_path.empty();
    options.diag.exp_ks.parametric_bootstrap = exp_ks_bootstrap;
    const dcos::PipelineResult result = dcos::run_pipeline(series, grid, options);

    std::vector<dcos::ThresholdSummary> summaries;
    std::vector<dcos::DiagnosticsRow> diag_rows;
    summaries.reserve(result.rows.size());
    diag_rows.reserve(result.rows.size());
    for (const auto& row : result.rows) {
        summaries.push_back(row.summary);
        diag_rows.push_back(row.diagnostics);
    }

    const dcos::ScalingConfig zone_cfg{z.target_pct, z.tolerance_pct};
    const dcos::ZoneDetection detection = dcos::detect_zone(summaries, zone_cfg);
    std::optional<dcos::ZoneReport> report;
    if (!detection.zone) {
        std::cerr << "warning: NoZoneFound: no threshold reaches dcPct >= " << z.target_pct
                  << "; zone.csv and regression.csv contain headers only\n";
    } else {
        try {
            report = dcos::zone_report(*detection.zone, summaries);
        } catch (const dcos::TooFewPoints&) {
            std::cerr << "warning: zone has fewer than 3 thresholds; regression skipped\n";
        }
    }

    fs::create_directories(out_dir);
    const auto style =
        fidelity ? dcos::ReportStyle::TableFidelity : dcos::ReportStyle::FullPrecision;
    const std::string summary_path = out_dir + "/summary.csv";
    const std::string diagnostics_path = out_dir + "/diagnostics.csv";
    const std::string zone_path = out_dir + "/zone.csv";
    const std::string regression_path = out_dir + "/regression.csv";
    const std::string plotdata_path = out_dir + "/plotdata.csv";

    dcos::write_summary_csv(summary_path, summaries, style);
    dcos::write_diagnostics_csv(diagnostics_path, diag_rows, style);
    dcos::write_zone_csv(zone_path, detection.zone, style);
    dcos::write_regression_csv(regression_path, report, style);
    dcos::write_plotdata_csv(plotdata_path, summaries, style);

    if (!cycles_path.empty()) {
        dcos::write_cycles_header(cycles_path);
        for (std::size_t i = 0; i < result.cycles.size(); ++i)
            dcos::write_cycles_csv(cycles_path, grid[i], result.cycles[i], /*append=*/true);
    }
    if (!events_path.empty()) {
        const std::vector<double> log_prices = dcos::to_log_prices(series);
        bool append = false;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const auto extraction = dcos::extract_events(log_prices, dcos::Threshold(grid[i]));
            dcos::write_events_csv(events_path, grid[i], extraction.events, append);
            append = true;
        }
    }

    verify_written(summary_path, summaries.size(), true);
    for (const auto& p : {diagnostics_path, zone_path, regression_path, plotdata_path})
        verify_written(p, 0, false);
    return 0;
}

int cmd_sweep(const std::string& input, const dcos::CsvFormat& format, const GridFlags& g,
              const std::string& out_dir, int jobs, bool fidelity) {
    const dcos::TickSeries series = dcos::load_ticks(input, format);
    const dcos::ThresholdGrid grid = dcos::make_grid(g.delta_min, g.delta_max, g.n_deltas);
    const auto results = dcos::run_sweep(series, grid, jobs);

    std::vector<dcos::ThresholdSummary> summaries;
    summaries.reserve(results.size());
    for (const auto& r : results) summaries.push_back(r.summary);

    fs::create_directories(out_dir);
    const auto style =
        fidelity ? dcos::ReportStyle::TableFidelity : dcos::ReportStyle::FullPrecision;
    const std::string summary_path = out_dir + "/summary.csv";
    const std::string cycles_path = out_dir + "/cycles.csv";
    dcos::write_summary_csv(summary_path, summaries, style);
    dcos::write_cycles_header(cycles_path);
    for (std::size_t i = 0; i < results.size(); ++i)
        dcos::write_cycles_csv(cycles_path, grid[i], results[i].cycles, /*append=*/true);

    verify_written(summary_path, summaries.size(), true);
    return 0;
}

int cmd_diagnose(const std::string& summary_path, const std::string& cycles_path,
                 const std::string& out_dir, bool fidelity, bool exp_ks_bootstrap) {
    const auto summaries = dcos::read_summary_csv(summary_path);
    const auto groups = dcos::read_cycles_csv(cycles_path);

    dcos::DiagnosticsConfig cfg;
    cfg.exp_ks.parametric_bootstrap = exp_ks_bootstrap;

    std::vector<dcos::DiagnosticsRow> rows;
    rows.reserve(summaries.size());
    for (const auto& s : summaries) {
        std::span<const dcos::CycleRecord> cycles;
        for (const auto& g : groups) {
            if (g.delta == s.delta) {
                cycles = g.cycles;
                break;
            }
        }
        rows.push_back(dcos::diagnostics_row(s.delta, s, cycles, cfg));
    }

    fs::create_directories(out_dir);
    const auto style =
        fidelity ? dcos::ReportStyle::TableFidelity : dcos::ReportStyle::FullPrecision;
    const std::string path = out_dir + "/diagnostics.csv";
    dcos::write_diagnostics_csv(path, rows, style);
    verify_written(path, 0, false);
    return 0;
}

int cmd_zone(const std::string& summary_path, const ZoneFlags& z, const std::string& out_dir,
             bool fidelity) {
    const auto summaries = dcos::read_summary_csv(summary_path);
    const dcos::ScalingConfig cfg{z.target_pct, z.tolerance_pct};
    const dcos::ZoneDetection detection = dcos::detect_zone(summaries, cfg);
    std::optional<dcos::ZoneReport> report;
    if (!detection.zone) {
        std::cerr << "warning: NoZoneFound: no threshold reaches dcPct >= " << z.target_pct
                  << "\n";
    } else {
        try {
            report = dcos::zone_report(*detection.zone, summaries);
        } catch (const dcos::TooFewPoints&) {
            std::cerr << "warning: zone has fewer than 3 thresholds; regression skipped\n";
        }
    }

    fs::create_directories(out_dir);
    const auto style =
        fidelity ? dcos::ReportStyle::TableFidelity : dcos::ReportStyle::FullPrecision;
    dcos::write_zone_csv(out_dir + "/zone.csv", detection.zone, style);
    dcos::write_regression_csv(out_dir + "/regression.csv", report, style);
    verify_written(out_dir + "/zone.csv", 0, false);
    verify_written(out_dir + "/regression.csv", 0, false);
    return 0;
}

int cmd_simulate_gbm(const dcos::GbmParams& params, const std::string& out_path) {
    const dcos::TickSeries series = dcos::generate_gbm(params);
    dcos::write_ticks(series, out_path);
    return 0;
}

int cmd_simulate_renewal(const dcos::RenewalStreamParams& params, const std::string& out_path) {
    const dcos::RenewalSample sample = dcos::generate_renewal_lengths(params);
    std::ofstream out(out_path);
    if (!out.is_open()) throw dcos::Error("cannot open for writing: " + out_path);
    out << "length,count\n";
    char buf[64];
    for (std::size_t i = 0; i < sample.lengths.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.17g", sample.lengths[i]);
        out << buf << ',' << sample.counts[i] << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Directional-change/Overshoot event analytics"};
    app.require_subcommand(1);

    // analyze
    auto* analyze = app.add_subcommand("analyze", "Full pipeline: sweep, diagnostics, zone");
    std::string an_input, an_out;
    dcos::CsvFormat an_format;
    GridFlags an_grid;
    ZoneFlags an_zone;
    int an_jobs = 0;
    bool an_fidelity = false;
    bool an_bootstrap = false;
    std::string an_events, an_cycles;
    add_input_flags(analyze, an_input, an_format);
    add_grid_flags(analyze, an_grid);
    add_zone_flags(analyze, an_zone);
    analyze->add_option("--out", an_out, "Output directory")->required();
    analyze->add_option("--jobs", an_jobs, "Worker threads (0 = auto)")->capture_default_str();
    analyze->add_flag("--table-fidelity", an_fidelity, "Render numbers like the report tables");
    analyze->add_flag("--exp-ks-bootstrap", an_bootstrap,
                      "Parametric-bootstrap p-value for the exponential KS test");
    analyze->add_option("--dump-events", an_events, "Also write a per-event log to this file");
    analyze->add_option("--dump-cycles", an_cycles, "Also write cycle records to this file");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Extraction stage: summary.csv + cycles.csv");
    std::string sw_input, sw_out;
    dcos::CsvFormat sw_format;
    GridFlags sw_grid;
    int sw_jobs = 0;
    bool sw_fidelity = false;
    add_input_flags(sweep, sw_input, sw_format);
    add_grid_flags(sweep, sw_grid);
    sweep->add_option("--out", sw_out, "Output directory")->required();
    sweep->add_option("--jobs", sw_jobs, "Worker threads (0 = auto)")->capture_default_str();
    sweep->add_flag("--table-fidelity", sw_fidelity, "Render numbers like the report tables");

    // diagnose
    auto* diagnose = app.add_subcommand("diagnose", "Diagnostics stage from sweep outputs");
    std::string dg_summary, dg_cycles, dg_out;
    bool dg_fidelity = false;
    bool dg_bootstrap = false;
    diagnose->add_option("--summary", dg_summary, "summary.csv from the sweep stage")->required();
    diagnose->add_option("--cycles", dg_cycles, "cycles.csv from the sweep stage")->required();
    diagnose->add_option("--out", dg_out, "Output directory")->required();
    diagnose->add_flag("--table-fidelity", dg_fidelity, "Render numbers like the report tables");
    diagnose->add_flag("--exp-ks-bootstrap", dg_bootstrap,
                       "Parametric-bootstrap p-value for the exponential KS test");

    // zone
    auto* zone = app.add_subcommand("zone", "Zone detection stage from a summary.csv");
    std::string zn_summary, zn_out;
    ZoneFlags zn_zone;
    bool zn_fidelity = false;
    zone->add_option("--summary", zn_summary, "summary.csv")->required();
    add_zone_flags(zone, zn_zone);
    zone->add_option("--out", zn_out, "Output directory")->required();
    zone->add_flag("--table-fidelity", zn_fidelity, "Render numbers like the report tables");

    // simulate
    auto* simulate = app.add_subcommand("simulate", "Synthetic data generators");
    simulate->require_subcommand(1);

    auto* gbm = simulate->add_subcommand("gbm", "Geometric Brownian motion ticks");
    dcos::GbmParams gbm_params;
    std::string gbm_out;
    gbm->add_option("--s0", gbm_params.s0, "Initial price")->capture_default_str();
    gbm->add_option("--mu", gbm_params.mu, "Drift per step")->capture_default_str();
    gbm->add_option("--sigma", gbm_params.sigma, "Volatility per step")->capture_default_str();
    gbm->add_option("--steps", gbm_params.n_steps, "Number of ticks")->required();
    gbm->add_option("--seed", gbm_params.seed, "Generator seed")->capture_default_str();
    gbm->add_option("--out", gbm_out, "Output CSV")->required();

    auto* renewal = simulate->add_subcommand("renewal", "Exponential renewal lengths/counts");
    dcos::RenewalStreamParams rn_params;
    std::string rn_out;
    renewal->add_option("--lambda", rn_params.lambda, "Hazard rate")->capture_default_str();
    renewal->add_option("--n", rn_params.n_cycles, "Number of cycles")->required();
    renewal->add_option("--seed", rn_params.seed, "Generator seed")->capture_default_str();
    renewal->add_option("--out", rn_out, "Output CSV")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed())
            return cmd_analyze(an_input, an_format, an_grid, an_zone, an_out, an_jobs,
                               an_fidelity, an_bootstrap, an_events, an_cycles);
        if (sweep->parsed())
            return cmd_sweep(sw_input, sw_format, sw_grid, sw_out, sw_jobs, sw_fidelity);
        if (diagnose->parsed())
            return cmd_diagnose(dg_summary, dg_cycles, dg_out, dg_fidelity, dg_bootstrap);
        if (zone->parsed()) return cmd_zone(zn_summary, zn_zone, zn_out, zn_fidelity);
        if (simulate->parsed()) {
            if (gbm->parsed()) return cmd_simulate_gbm(gbm_params, gbm_out);
            if (renewal->parsed()) return cmd_simulate_renewal(rn_params, rn_out);
        }
    } catch (const dcos::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
