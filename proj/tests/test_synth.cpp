#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dcos/diagnostics.hpp"
#include "dcos/events.hpp"
#include "dcos/sweep.hpp"
#include "dcos/synth.hpp"

TEST_CASE("same seed reproduces the same path") {
    dcos::GbmParams params;
    params.sigma = 1e-3;
    params.n_steps = 2000;
    params.seed = 4;
    const auto a = dcos::generate_gbm(params);
    const auto b = dcos::generate_gbm(params);
    CHECK(a == b);
    params.seed = 5;
    const auto c = dcos::generate_gbm(params);
    CHECK_FALSE(a == c);
}

TEST_CASE("zero volatility is a deterministic exponential ramp") {
    dcos::GbmParams params;
    params.s0 = 2.0;
    params.mu = 1e-4;
    params.sigma = 0.0;
    params.n_steps = 1000;
    const auto series = dcos::generate_gbm(params);
    REQUIRE(series.n_ticks() == 1000);
    for (std::size_t t = 0; t < series.n_ticks(); ++t) {
        const double expected = 2.0 * std::exp(1e-4 * static_cast<double>(t));
        CHECK(series.ticks()[t].price == doctest::Approx(expected).epsilon(1e-12));
        if (t > 0) CHECK(series.ticks()[t].price > series.ticks()[t - 1].price);
        CHECK(series.ticks()[t].timestamp_ms == static_cast<std::int64_t>(t) * 1000);
    }
}

TEST_CASE("generator parameter validation") {
    CHECK_THROWS_AS(dcos::generate_gbm({-1.0, 0.0, 0.1, 10, 1}), dcos::InvalidRange);
    CHECK_THROWS_AS(dcos::generate_gbm({1.0, 0.0, -0.1, 10, 1}), dcos::InvalidRange);
    CHECK_THROWS_AS(dcos::generate_gbm({1.0, 0.0, 0.1, 0, 1}), dcos::InvalidRange);
    CHECK_THROWS_AS(dcos::generate_renewal_lengths({0.0, 10, 1}), dcos::InvalidRange);
    CHECK_THROWS_AS(dcos::generate_renewal_lengths({1.0, 0, 1}), dcos::InvalidRange);
}

TEST_CASE("renewal stream matches its exponential law at lambda 1") {
    const auto sample = dcos::generate_renewal_lengths({1.0, 1000000, 42});
    REQUIRE(sample.lengths.size() == 1000000);
    double sum = 0.0;
    std::int64_t zeros = 0;
    for (std::size_t i = 0; i < sample.lengths.size(); ++i) {
        sum += sample.lengths[i];
        CHECK(sample.counts[i] == static_cast<std::int64_t>(std::floor(sample.lengths[i])));
        if (sample.counts[i] == 0) ++zeros;
    }
    const double mean = sum / 1e6;
    CHECK(std::abs(mean - 1.0) <= 0.003);
    const double zero_fraction = static_cast<double>(zeros) / 1e6;
    CHECK(std::abs(zero_fraction - 0.6321) <= 0.002);
}

TEST_CASE("renewal zero-count share follows 1 - exp(-lambda)") {
    const auto sample = dcos::generate_renewal_lengths({2.0, 200000, 17});
    std::int64_t zeros = 0;
    for (std::int64_t k : sample.counts)
        if (k == 0) ++zeros;
    const double fraction = static_cast<double>(zeros) / 200000.0;
    CHECK(fraction == doctest::Approx(1.0 - std::exp(-2.0)).epsilon(0.004));
}

TEST_CASE("renewal generation is seed-stable") {
    const auto a = dcos::generate_renewal_lengths({1.0, 1000, 7});
    const auto b = dcos::generate_renewal_lengths({1.0, 1000, 7});
    CHECK(a.lengths == b.lengths);
    CHECK(a.counts == b.counts);
}

TEST_CASE("oracle closure: the battery recovers the generator parameters") {
    for (double lambda : {0.5, 1.0, 2.0}) {
        const auto sample = dcos::generate_renewal_lengths(
            {lambda, 100000, 900 + static_cast<std::uint64_t>(10 * lambda)});
        const double p_target = 1.0 - std::exp(-lambda);
        const double n = 1e5;

        std::int64_t n_os = 0;
        for (std::int64_t k : sample.counts) n_os += k;
        const auto n_dc = static_cast<std::int64_t>(sample.counts.size());

        // Three standard errors for each estimate.
        const auto prob = dcos::empirical_dc_probability(n_dc, n_os);
        const double se_p =
            std::sqrt(p_target * (1.0 - p_target) / static_cast<double>(n_dc + n_os));
        CHECK(std::abs(*prob.p_mean - p_target) <= 3.0 * se_p);

        const auto geo = dcos::geometric_test(sample.counts);
        CHECK(std::abs(geo.p_geom - p_target) <= 0.01);

        const auto exp_fit = dcos::exponential_test(sample.lengths);
        CHECK(std::abs(exp_fit.lambda_hat - lambda) <= 3.0 * lambda / std::sqrt(n));
        CHECK(std::abs(exp_fit.p_pred - p_target) <= 0.01);
    }
}

TEST_CASE("scaling the start price leaves sweep outputs unchanged") {
    dcos::GbmParams params;
    params.sigma = 2e-3;
    params.n_steps = 20000;
    params.seed = 3;
    const auto base = dcos::generate_gbm(params);
    params.s0 = 8.0;  // power of two: the rescale is exact in binary
    const auto scaled = dcos::generate_gbm(params);

    const auto grid = dcos::make_grid(1e-3, 1e-1, 8);
    const auto a = dcos::run_sweep(base, grid, 1);
    const auto b = dcos::run_sweep(scaled, grid, 1);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        CHECK(a[i].summary.n_dc == b[i].summary.n_dc);
        CHECK(a[i].summary.n_os == b[i].summary.n_os);
    }
}
