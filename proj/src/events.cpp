#include "dcos/events.hpp"

namespace dcos {

namespace {

struct CollectingVisitor {
    std::vector<DcosEvent>* events;
    std::vector<CycleRecord>* cycles;

    void on_dc(std::size_t idx, double log_price, Direction d, std::optional<double> x_norm) {
        events->push_back({EventKind::Dc, d, idx, log_price, x_norm});
    }
    void on_os(std::size_t idx, double log_price, Direction d) {
        events->push_back({EventKind::Os, d, idx, log_price, std::nullopt});
    }
    void on_cycle(std::int64_t k, double x_norm) { cycles->push_back({k, x_norm}); }
};

struct CountingVisitor {
    EventCounts* counts;

    void on_dc(std::size_t, double, Direction, std::optional<double>) { ++counts->n_dc; }
    void on_os(std::size_t, double, Direction) { ++counts->n_os; }
    void on_cycle(std::int64_t, double) {}
};

struct CountsCyclesVisitor {
    EventCounts* counts;
    std::vector<CycleRecord>* cycles;

    void on_dc(std::size_t, double, Direction, std::optional<double>) { ++counts->n_dc; }
    void on_os(std::size_t, double, Direction) { ++counts->n_os; }
    void on_cycle(std::int64_t k, double x_norm) { cycles->push_back({k, x_norm}); }
};

}  // namespace

ExtractionResult extract_events(std::span<const double> log_prices, Threshold delta) {
    ExtractionResult result;
    detail::walk_events(log_prices, delta.delta,
                        CollectingVisitor{&result.events, &result.cycles});
    return result;
}

EventCounts count_events(std::span<const double> log_prices, Threshold delta) {
    EventCounts counts;
    detail::walk_events(log_prices, delta.delta, CountingVisitor{&counts});
    counts.n_ev = counts.n_dc + counts.n_os;
    return counts;
}

CountsAndCycles count_events_with_cycles(std::span<const double> log_prices, Threshold delta) {
    CountsAndCycles result;
    detail::walk_events(log_prices, delta.delta,
                        CountsCyclesVisitor{&result.counts, &result.cycles});
    result.counts.n_ev = result.counts.n_dc + result.counts.n_os;
    return result;
}

EventCounts count_events(std::span<const DcosEvent> events) {
    EventCounts counts;
    for (const DcosEvent& e : events) {
        if (e.kind == EventKind::Dc)
            ++counts.n_dc;
        else
            ++counts.n_os;
    }
    counts.n_ev = counts.n_dc + counts.n_os;
    return counts;
}

}  // namespace dcos
