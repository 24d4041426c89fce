#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <string>

#include "dcos/sweep.hpp"
#include "dcos/synth.hpp"
#include "fixtures/reference_dc_pct.hpp"

namespace {

std::string sci3(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3e", v);
    return buf;
}

std::string fix2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

}  // namespace

TEST_CASE("standard grid reproduces the published threshold column") {
    const auto grid = dcos::make_grid(1e-5, 1.0, 50);
    REQUIRE(grid.size() == 50);
    CHECK(grid[0] == 1e-5);
    CHECK(grid[49] == 1.0);
    for (std::size_t i = 0; i < 50; ++i) CHECK(sci3(grid[i]) == fixtures::kGridText[i]);
}

TEST_CASE("two-point grid is just the endpoints") {
    const auto grid = dcos::make_grid(1.0, 10.0, 2);
    REQUIRE(grid.size() == 2);
    CHECK(grid[0] == 1.0);
    CHECK(grid[1] == 10.0);
}

TEST_CASE("grid ratios are constant") {
    const auto grid = dcos::make_grid(3e-4, 0.7, 23);
    const double ratio = grid[1] / grid[0];
    for (std::size_t i = 1; i < grid.size(); ++i)
        CHECK(grid[i] / grid[i - 1] == doctest::Approx(ratio).epsilon(1e-13));
}

TEST_CASE("invalid grid requests are rejected") {
    CHECK_THROWS_AS(dcos::make_grid(0.0, 1.0, 50), dcos::InvalidRange);
    CHECK_THROWS_AS(dcos::make_grid(1.0, 1.0, 50), dcos::InvalidRange);
    CHECK_THROWS_AS(dcos::make_grid(2.0, 1.0, 50), dcos::InvalidRange);
    CHECK_THROWS_AS(dcos::make_grid(1e-5, 1.0, 1), dcos::InvalidRange);
    CHECK_THROWS_AS(dcos::ThresholdGrid({1.0, 2.0, 3.0}), dcos::InvalidRange);
}

TEST_CASE("summary formulas on a hand-counted series") {
    // The three-event trace: 2 Dc + 1 Os over 3 ticks.
    const std::vector<double> log_prices = {0.0, 0.02, std::log(1.0100)};
    const auto s = dcos::summarize_threshold(log_prices, 3, dcos::Threshold(0.01));
    CHECK(s.n_dc == 2);
    CHECK(s.n_os == 1);
    CHECK(s.n_ev == 3);
    CHECK(s.f_dc == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(s.f_ev == s.f_dc + s.f_os);
    CHECK(s.f_dc_se == doctest::Approx(std::sqrt((2.0 / 3.0) * (1.0 / 3.0) / 3.0)).epsilon(1e-12));
    REQUIRE(s.dc_pct.has_value());
    CHECK(*s.dc_pct == doctest::Approx(100.0 * 2.0 / 3.0).epsilon(1e-12));
    REQUIRE(s.dc_pct_se.has_value());
    CHECK(*s.dc_pct_se ==
          doctest::Approx(100.0 * std::sqrt((2.0 / 3.0) * (1.0 / 3.0) / 3.0)).epsilon(1e-12));
}

TEST_CASE("summary from published counts renders the published cells") {
    // Row: nDc 11071242, nOs 10432797 at 35367000 ticks.
    dcos::EventCounts counts{11071242, 10432797, 21504039};
    const auto s = dcos::summarize_counts(1e-5, counts, 35367000);
    CHECK(sci3(s.f_dc) == "3.130e-01");
    CHECK(sci3(s.f_dc_se) == "7.798e-05");
    REQUIRE(s.dc_pct.has_value());
    CHECK(fix2(*s.dc_pct) == "51.48");
    CHECK(fix2(*s.dc_pct_se) == "0.01");
}

TEST_CASE("constant series sweeps to all-zero rows") {
    std::vector<dcos::Tick> ticks;
    for (int i = 0; i < 100; ++i) ticks.push_back({i, 42.0});
    const dcos::TickSeries series{std::move(ticks)};
    const auto grid = dcos::make_grid(1e-4, 1e-1, 7);
    const auto results = dcos::run_sweep(series, grid, 1);
    REQUIRE(results.size() == 7);
    for (const auto& r : results) {
        CHECK(r.summary.n_ev == 0);
        CHECK(r.summary.f_ev == 0.0);
        CHECK_FALSE(r.summary.dc_pct.has_value());
        CHECK(r.cycles.empty());
    }
}

TEST_CASE("sweep rows follow the grid and stay internally consistent") {
    dcos::GbmParams params;
    params.sigma = 1e-3;
    params.n_steps = 50000;
    params.seed = 9;
    const auto series = dcos::generate_gbm(params);
    const auto grid = dcos::make_grid(3e-4, 3e-1, 16);
    const auto results = dcos::run_sweep(series, grid, 2);

    REQUIRE(results.size() == grid.size());
    std::int64_t prev = -1;
    for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& s = results[i].summary;
        CHECK(s.delta == grid[i]);
        CHECK(s.n_ev == s.n_dc + s.n_os);
        CHECK(s.f_ev == s.f_dc + s.f_os);
        if (s.n_ev > 0) {
            CHECK(*s.dc_pct ==
                  doctest::Approx(100.0 * static_cast<double>(s.n_dc) /
                                  static_cast<double>(s.n_ev))
                      .epsilon(1e-12));
        } else {
            CHECK_FALSE(s.dc_pct.has_value());
        }
        if (prev >= 0) CHECK(s.n_ev <= prev);
        prev = s.n_ev;
    }
}

TEST_CASE("parallel sweep output matches the sequential sweep bit for bit") {
    dcos::GbmParams params;
    params.sigma = 1e-3;
    params.n_steps = 30000;
    params.seed = 17;
    const auto series = dcos::generate_gbm(params);
    const auto grid = dcos::make_grid(1e-4, 1e-1, 12);

    const auto seq = dcos::run_sweep(series, grid, 1);
    const auto par = dcos::run_sweep(series, grid, 4);
    REQUIRE(seq.size() == par.size());
    for (std::size_t i = 0; i < seq.size(); ++i) {
        CHECK(seq[i].summary.n_dc == par[i].summary.n_dc);
        CHECK(seq[i].summary.n_os == par[i].summary.n_os);
        CHECK(seq[i].summary.f_dc == par[i].summary.f_dc);
        CHECK(seq[i].summary.f_dc_se == par[i].summary.f_dc_se);
        CHECK(seq[i].summary.dc_pct == par[i].summary.dc_pct);
        REQUIRE(seq[i].cycles.size() == par[i].cycles.size());
        for (std::size_t j = 0; j < seq[i].cycles.size(); ++j) {
            CHECK(seq[i].cycles[j].overshoot_count == par[i].cycles[j].overshoot_count);
            CHECK(seq[i].cycles[j].overshoot_length_norm ==
                  par[i].cycles[j].overshoot_length_norm);
        }
    }
}
