#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dcos/errors.hpp"

namespace dcos {

// Directional-change threshold: a positive log-return magnitude.
struct Threshold {
    explicit Threshold(double d) : delta(d) {
        if (!(d > 0.0) || !std::isfinite(d)) throw InvalidThreshold(d);
    }
    double delta;
};

enum class EventKind { Dc, Os };
enum class Direction { Up, Down };

// One Directional-change or Overshoot event. overshoot_length_norm is set
// only on a Dc event that closes a cycle and equals x/delta for that cycle.
struct DcosEvent {
    EventKind kind = EventKind::Dc;
    Direction direction = Direction::Up;
    std::size_t tick_index = 0;
    double log_price = 0.0;
    std::optional<double> overshoot_length_norm;
};

// One completed cycle between two consecutive Dc events: K overshoot events
// and the normalized overshoot length x/delta measured from the opening Dc
// confirmation level to the cycle extreme. x/delta >= K always.
struct CycleRecord {
    std::int64_t overshoot_count = 0;
    double overshoot_length_norm = 0.0;
};

struct EventCounts {
    std::int64_t n_dc = 0;
    std::int64_t n_os = 0;
    std::int64_t n_ev = 0;
};

namespace detail {

// Single-pass event walker shared by every extraction entry point.
//
// Semantics:
//  - Warm-up: no mode; both running extrema start at the first log-price.
//    The first Dc fires in whichever direction first deviates by >= delta
//    from the opposite extremum. Nothing is emitted before it.
//  - In a cycle, the confirmation level is origin_extremum +/- delta. The
//    k-th Os fires when the price reaches confirmation level +/- k*delta,
//    so a gap tick can emit several Os events at one index.
//  - A reversal of >= delta from the cycle extreme fires the next Dc, which
//    closes the cycle with K = #Os and x = |extreme - confirmation level|.
//  - The trailing incomplete cycle contributes its Os events but no cycle.
//
// Visitor interface:
//   void on_dc(std::size_t idx, double log_price, Direction d,
//              std::optional<double> closed_cycle_x_norm);
//   void on_os(std::size_t idx, double log_price, Direction d);
//   void on_cycle(std::int64_t k, double x_norm);
template <typename Visitor>
void walk_events(std::span<const double> log_prices, double delta, Visitor&& visit) {
    if (log_prices.empty()) throw EmptySeries();

    enum class Mode { None, Up, Down };
    Mode mode = Mode::None;

    double warm_max = log_prices[0];
    double warm_min = log_prices[0];
    if (!std::isfinite(warm_max)) throw NonFiniteLogPrice(0);

    double confirm_level = 0.0;  // origin extremum +/- delta for the open cycle
    double extreme = 0.0;        // running max (Up) or min (Down) of the cycle
    std::int64_t os_count = 0;   // Os events emitted in the open cycle

    for (std::size_t i = 0; i < log_prices.size(); ++i) {
        const double p = log_prices[i];
        if (!std::isfinite(p)) throw NonFiniteLogPrice(i);

        if (mode == Mode::None) {
            if (p - warm_min >= delta) {
                mode = Mode::Up;
                confirm_level = warm_min + delta;
                extreme = p;
                os_count = 0;
                visit.on_dc(i, p, Direction::Up, std::nullopt);
                while (p >= confirm_level + static_cast<double>(os_count + 1) * delta) {
                    ++os_count;
                    visit.on_os(i, p, Direction::Up);
                }
            } else if (warm_max - p >= delta) {
                mode = Mode::Down;
                confirm_level = warm_max - delta;
                extreme = p;
                os_count = 0;
                visit.on_dc(i, p, Direction::Down, std::nullopt);
                while (p <= confirm_level - static_cast<double>(os_count + 1) * delta) {
                    ++os_count;
                    visit.on_os(i, p, Direction::Down);
                }
            } else {
                if (p > warm_max) warm_max = p;
                if (p < warm_min) warm_min = p;
            }
            continue;
        }

        if (mode == Mode::Up) {
            if (p > extreme) extreme = p;
            while (p >= confirm_level + static_cast<double>(os_count + 1) * delta) {
                ++os_count;
                visit.on_os(i, p, Direction::Up);
            }
            if (extreme - p >= delta) {
                const double x_norm = (extreme - confirm_level) / delta;
                visit.on_cycle(os_count, x_norm);
                mode = Mode::Down;
                confirm_level = extreme - delta;
                extreme = p;
                os_count = 0;
                visit.on_dc(i, p, Direction::Down, x_norm);
                while (p <= confirm_level - static_cast<double>(os_count + 1) * delta) {
                    ++os_count;
                    visit.on_os(i, p, Direction::Down);
                }
            }
        } else {
            if (p < extreme) extreme = p;
            while (p <= confirm_level - static_cast<double>(os_count + 1) * delta) {
                ++os_count;
                visit.on_os(i, p, Direction::Down);
            }
            if (p - extreme >= delta) {
                const double x_norm = (confirm_level - extreme) / delta;
                visit.on_cycle(os_count, x_norm);
                mode = Mode::Up;
                confirm_level = extreme + delta;
                extreme = p;
                os_count = 0;
                visit.on_dc(i, p, Direction::Up, x_norm);
                while (p >= confirm_level + static_cast<double>(os_count + 1) * delta) {
                    ++os_count;
                    visit.on_os(i, p, Direction::Up);
                }
            }
        }
    }
}

}  // namespace detail

struct ExtractionResult {
    std::vector<DcosEvent> events;
    std::vector<CycleRecord> cycles;
};

// Full extraction: the event sequence plus one CycleRecord per completed
// cycle, in tick order. Deterministic and scale-invariant.
ExtractionResult extract_events(std::span<const double> log_prices, Threshold delta);

// Counting-only extraction; same state machine, no event materialization.
EventCounts count_events(std::span<const double> log_prices, Threshold delta);

// Counts plus cycle records, as the sweep needs them.
struct CountsAndCycles {
    EventCounts counts;
    std::vector<CycleRecord> cycles;
};
CountsAndCycles count_events_with_cycles(std::span<const double> log_prices, Threshold delta);

// Tallies an already-extracted event sequence. n_ev = n_dc + n_os exactly.
EventCounts count_events(std::span<const DcosEvent> events);

}  // namespace dcos
