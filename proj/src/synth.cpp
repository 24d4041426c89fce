#include "dcos/synth.hpp"

#include <cmath>

#include "dcos/errors.hpp"

namespace dcos {

double SynthRng::uniform() {
    // 53 random bits mapped to [0, 1); matches the canonical 2^-53 ladder.
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double SynthRng::normal() {
    if (have_spare_normal_) {
        have_spare_normal_ = false;
        return spare_normal_;
    }
    double u1 = uniform();
    while (u1 == 0.0) u1 = uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * M_PI * u2;
    spare_normal_ = radius * std::sin(angle);
    have_spare_normal_ = true;
    return radius * std::cos(angle);
}

double SynthRng::exponential(double rate) {
    return -std::log1p(-uniform()) / rate;
}

TickSeries generate_gbm(const GbmParams& params) {
    if (!(params.s0 > 0.0)) throw InvalidRange("s0 must be positive");
    if (params.sigma < 0.0) throw InvalidRange("sigma must be non-negative");
    if (params.n_steps < 1) throw InvalidRange("n_steps must be >= 1");

    SynthRng rng(params.seed);
    std::vector<Tick> ticks;
    ticks.reserve(static_cast<std::size_t>(params.n_steps));
    double log_s = std::log(params.s0);
    for (std::int64_t t = 0; t < params.n_steps; ++t) {
        ticks.push_back({t * 1000, std::exp(log_s)});
        log_s += params.mu + params.sigma * rng.normal();
    }
    return TickSeries(std::move(ticks));
}

RenewalSample generate_renewal_lengths(const RenewalStreamParams& params) {
    if (!(params.lambda > 0.0)) throw InvalidRange("lambda must be positive");
    if (params.n_cycles < 1) throw InvalidRange("n_cycles must be >= 1");

    SynthRng rng(params.seed);
    RenewalSample sample;
    sample.lengths.reserve(static_cast<std::size_t>(params.n_cycles));
    sample.counts.reserve(static_cast<std::size_t>(params.n_cycles));
    for (std::int64_t i = 0; i < params.n_cycles; ++i) {
        const double x = rng.exponential(params.lambda);
        sample.lengths.push_back(x);
        sample.counts.push_back(static_cast<std::int64_t>(std::floor(x)));
    }
    return sample;
}

}  // namespace dcos
