#include "mcs/acs.hpp"

#include <chrono>

#include "mcs/errors.hpp"

namespace mcs {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
    return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

}  // namespace

std::optional<double> AcsResult::achieved_ratio() const {
    if (!exact_size || *exact_size == 0) return std::nullopt;
    return static_cast<double>(acs.size()) / static_cast<double>(*exact_size);
}

AcsResult approximate_consistent_subset(const IntervalInstance& inst, const AcsOptions& options) {
    const auto& g = inst.graph();
    if (!g.connected()) throw DisconnectedError("interval graph is disconnected");

    AcsResult result;
    result.alpha = inst.alpha();

    auto start = Clock::now();
    try {
        auto search = optimal_leaf_bar_cover(inst, options.cover);
        result.acs = search.cover.x;
        result.bar_count = search.cover.bar_count();
        result.cover_method = search.method;
    } catch (const NoCoverFound&) {
        result.acs = VertexSubset::full(inst.size());
        result.degraded = true;
    }
    result.timings.cover_ms = elapsed_ms(start);

    start = Clock::now();
    while (true) {
        auto missing = uncovered_vertices(g, result.acs);
        if (missing.empty()) break;
        result.acs.insert(missing.front());
        ++result.repair_added;
    }
    result.timings.repair_ms = elapsed_ms(start);
    return result;
}

AcsResult approximation_report(const IntervalInstance& inst, bool run_exact,
                               const AcsOptions& options, const ExactOptions& exact) {
    if (run_exact && inst.size() > exact.guard)
        throw SizeError("exact ratio requested for " + std::to_string(inst.size()) +
                        " intervals, guard is " + std::to_string(exact.guard));
    auto result = approximate_consistent_subset(inst, options);
    if (run_exact) {
        const auto start = Clock::now();
        if (auto best = exact_mcs(inst.graph(), exact)) result.exact_size = best->size();
        result.timings.exact_ms = elapsed_ms(start);
    }
    return result;
}

}  // namespace mcs
