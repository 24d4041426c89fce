#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "dcos/report.hpp"

namespace fs = std::filesystem;

namespace {

struct TempDir {
    TempDir() {
        path = fs::temp_directory_path() / ("dcos_report_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
    fs::path path;
};

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

dcos::ThresholdSummary active_row() {
    dcos::EventCounts counts{768, 453, 1221};
    return dcos::summarize_counts(0.0233, counts, 35367000);
}

dcos::ThresholdSummary empty_row(double delta) {
    dcos::EventCounts counts{0, 0, 0};
    return dcos::summarize_counts(delta, counts, 35367000);
}

}  // namespace

TEST_CASE("summary header uses the glossary names in order") {
    TempDir tmp;
    const auto path = tmp.file("summary.csv");
    dcos::write_summary_csv(path, std::vector<dcos::ThresholdSummary>{},
                            dcos::ReportStyle::TableFidelity);
    const auto lines = read_lines(path);
    REQUIRE(lines.size() == 1);
    CHECK(lines[0] == "delta,nDc,nOs,nEv,fDc,fDc_se,fOs,fOs_se,fEv,fEv_se,dcPct,seDcPct");
}

TEST_CASE("diagnostics header uses the glossary names in order") {
    TempDir tmp;
    const auto path = tmp.file("diagnostics.csv");
    dcos::write_diagnostics_csv(path, std::vector<dcos::DiagnosticsRow>{},
                                dcos::ReportStyle::TableFidelity);
    const auto lines = read_lines(path);
    REQUIRE(lines.size() == 1);
    CHECK(lines[0] == "delta,pMean,diff,pGeom,geoChi2p,geoKSp,lamHat,expKSp,lamCiLow,lamCiHigh,pPred");
}

TEST_CASE("fidelity rendering matches the published cell formats") {
    TempDir tmp;
    const auto path = tmp.file("summary.csv");
    const std::vector<dcos::ThresholdSummary> rows = {active_row()};
    dcos::write_summary_csv(path, rows, dcos::ReportStyle::TableFidelity);
    const auto lines = read_lines(path);
    REQUIRE(lines.size() == 2);
    CHECK(lines[1] ==
          "2.330e-02,768,453,1221,2.172e-05,7.836e-07,1.281e-05,6.018e-07,3.452e-05,"
          "9.880e-07,62.90,1.38");
}

TEST_CASE("zero-event rows keep delta and counts and blank the rest") {
    TempDir tmp;
    const auto path = tmp.file("summary.csv");
    const std::vector<dcos::ThresholdSummary> rows = {empty_row(1.0)};
    dcos::write_summary_csv(path, rows, dcos::ReportStyle::TableFidelity);
    const auto lines = read_lines(path);
    REQUIRE(lines.size() == 2);
    CHECK(lines[1] == "1.000e+00,0,0,0,,,,,,,,");
}

TEST_CASE("share cells go blank when one side has no events") {
    dcos::ThresholdSummary only_dc = dcos::summarize_counts(0.79, {1, 0, 1}, 35367000);
    dcos::ThresholdSummary only_os = dcos::summarize_counts(0.31, {0, 2, 2}, 40134000);

    TempDir tmp;
    const auto path = tmp.file("summary.csv");
    const std::vector<dcos::ThresholdSummary> rows = {only_dc, only_os};
    dcos::write_summary_csv(path, rows, dcos::ReportStyle::TableFidelity);
    const auto lines = read_lines(path);
    REQUIRE(lines.size() == 3);
    // One Dc and nothing else: dcPct = 100.00 with a blank (degenerate) SE
    // and blank Os frequency cells.
    CHECK(lines[1] == "7.900e-01,1,0,1,2.827e-08,2.827e-08,,,2.827e-08,2.827e-08,100.00,");
    // Os-only rows blank the Dc frequency cells and the share.
    CHECK(lines[2] == "3.100e-01,0,2,2,,,4.983e-08,3.524e-08,4.983e-08,3.524e-08,,");
}

TEST_CASE("small p-values censor to the table form") {
    dcos::DiagnosticsRow row;
    row.delta = 1e-5;
    row.p_mean = 0.51;
    row.diff = -0.12;
    row.p_geom = 0.51;
    row.geo_chi2_p = 3e-9;
    row.geo_ks_p = 0.04;
    row.lam_hat = 0.06;
    row.exp_ks_p = 9.9e-5;
    row.lam_ci_low = 0.06;
    row.lam_ci_high = 0.06;
    row.p_pred = 0.06;

    TempDir tmp;
    const auto path = tmp.file("diagnostics.csv");
    dcos::write_diagnostics_csv(path, std::vector<dcos::DiagnosticsRow>{row},
                                dcos::ReportStyle::TableFidelity);
    const auto lines = read_lines(path);
    REQUIRE(lines.size() == 2);
    CHECK(lines[1] == "1.000e-05,0.51,-0.12,0.51,<0.0001,0.04,0.06,<0.0001,0.06,0.06,0.06");
}

TEST_CASE("blank diagnostics row carries only delta") {
    dcos::DiagnosticsRow row;
    row.delta = 1.0;
    TempDir tmp;
    const auto path = tmp.file("diagnostics.csv");
    dcos::write_diagnostics_csv(path, std::vector<dcos::DiagnosticsRow>{row},
                                dcos::ReportStyle::TableFidelity);
    const auto lines = read_lines(path);
    CHECK(lines[1] == "1.000e+00,,,,,,,,,,");
}

TEST_CASE("full-precision summary survives a write/read round trip") {
    const std::vector<dcos::ThresholdSummary> rows = {active_row(), empty_row(0.5)};
    TempDir tmp;
    const auto path = tmp.file("summary.csv");
    dcos::write_summary_csv(path, rows, dcos::ReportStyle::FullPrecision);
    const auto back = dcos::read_summary_csv(path);
    REQUIRE(back.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(back[i].delta == rows[i].delta);
        CHECK(back[i].n_dc == rows[i].n_dc);
        CHECK(back[i].n_os == rows[i].n_os);
        CHECK(back[i].n_ev == rows[i].n_ev);
        CHECK(back[i].f_dc == rows[i].f_dc);
        CHECK(back[i].f_dc_se == rows[i].f_dc_se);
        CHECK(back[i].f_os == rows[i].f_os);
        CHECK(back[i].f_ev == rows[i].f_ev);
        CHECK(back[i].dc_pct == rows[i].dc_pct);
        CHECK(back[i].dc_pct_se == rows[i].dc_pct_se);
    }
}

TEST_CASE("cycles round trip groups by threshold") {
    TempDir tmp;
    const auto path = tmp.file("cycles.csv");
    dcos::write_cycles_header(path);
    const std::vector<dcos::CycleRecord> first = {{0, 0.25}, {3, 3.75}};
    const std::vector<dcos::CycleRecord> second = {{1, 1.5}};
    dcos::write_cycles_csv(path, 0.001, first, true);
    dcos::write_cycles_csv(path, 0.01, second, true);

    const auto groups = dcos::read_cycles_csv(path);
    REQUIRE(groups.size() == 2);
    CHECK(groups[0].delta == 0.001);
    REQUIRE(groups[0].cycles.size() == 2);
    CHECK(groups[0].cycles[1].overshoot_count == 3);
    CHECK(groups[0].cycles[1].overshoot_length_norm == 3.75);
    CHECK(groups[1].delta == 0.01);
    REQUIRE(groups[1].cycles.size() == 1);
}

TEST_CASE("zone and regression files degrade to header-only without a zone") {
    TempDir tmp;
    dcos::write_zone_csv(tmp.file("zone.csv"), std::nullopt, dcos::ReportStyle::FullPrecision);
    dcos::write_regression_csv(tmp.file("regression.csv"), std::nullopt,
                               dcos::ReportStyle::FullPrecision);
    CHECK(read_lines(tmp.file("zone.csv")) ==
          std::vector<std::string>{"minDelta,maxDelta,nDeltas,meanDcPct,stdDcPct"});
    CHECK(read_lines(tmp.file("regression.csv")) ==
          std::vector<std::string>{"event_class,beta,r_squared,p_value,n_points"});
}

TEST_CASE("plotdata carries the figure series") {
    TempDir tmp;
    const auto path = tmp.file("plotdata.csv");
    const std::vector<dcos::ThresholdSummary> rows = {active_row()};
    dcos::write_plotdata_csv(path, rows, dcos::ReportStyle::TableFidelity);
    const auto lines = read_lines(path);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "delta,fDc,fOs,fEv,dcPct");
    CHECK(lines[1] == "2.330e-02,2.172e-05,1.281e-05,3.452e-05,62.90");
}
