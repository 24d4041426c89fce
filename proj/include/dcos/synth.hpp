#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "dcos/tick_series.hpp"

namespace dcos {

// Deterministic random source used by every generator, so fixture values are
// reproducible across platforms and runs. std::mt19937_64 is fully specified
// by the standard; the distributions are implemented here because the
// standard-library distribution algorithms are not:
//  - uniform(): (next() >> 11) * 2^-53, a double in [0, 1);
//  - normal(): Box-Muller, both values of the pair consumed;
//  - exponential(rate): inversion, -log(1 - u) / rate.
class SynthRng {
public:
    explicit SynthRng(std::uint64_t seed) : engine_(seed) {}

    double uniform();
    double normal();
    double exponential(double rate);

private:
    std::mt19937_64 engine_;
    bool have_spare_normal_ = false;
    double spare_normal_ = 0.0;
};

struct GbmParams {
    double s0 = 1.0;
    double mu = 0.0;          // drift per step, in log space
    double sigma = 0.0;       // volatility per step, in log space
    std::int64_t n_steps = 1;
    std::uint64_t seed = 1;
};

// Geometric Brownian motion path: S_{t+1} = S_t * exp(mu + sigma * Z_t),
// timestamps 0, 1000, 2000, ... (one tick per second).
TickSeries generate_gbm(const GbmParams& params);

struct RenewalStreamParams {
    double lambda = 1.0;      // hazard rate of the exponential lengths
    std::int64_t n_cycles = 1;
    std::uint64_t seed = 1;
};

// Direct renewal stream: lengths x_i ~ Exp(lambda) and counts K_i = floor(x_i),
// the integer-multiples-of-threshold discretization in normalized units.
struct RenewalSample {
    std::vector<double> lengths;
    std::vector<std::int64_t> counts;
};

RenewalSample generate_renewal_lengths(const RenewalStreamParams& params);

}  // namespace dcos
