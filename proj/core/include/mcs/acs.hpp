#ifndef MCS_ACS_HPP
#define MCS_ACS_HPP

#include <cstddef>
#include <optional>

#include "mcs/exact.hpp"
#include "mcs/leaf_bar_cover.hpp"

namespace mcs {

struct AcsTimings {
    double cover_ms = 0;
    double repair_ms = 0;
    double exact_ms = 0;
};

struct AcsResult {
    VertexSubset acs;
    std::size_t bar_count = 0;
    /// Vertices the repair loop had to add; 0 whenever the cover was valid.
    std::size_t repair_added = 0;
    /// The cover search failed and acs is every interval. No ratio certificate.
    bool degraded = false;
    CoverMethod cover_method = CoverMethod::Exact;
    int alpha = 0;
    std::optional<std::size_t> exact_size;
    AcsTimings timings;

    /// 4*alpha + 2.
    int ratio_bound() const { return 4 * alpha + 2; }
    /// |acs| / exact_size when the exact size is known.
    std::optional<double> achieved_ratio() const;
    /// repair_added == 0 and not degraded: |acs| <= 2*alpha*bar_count holds.
    bool certified() const { return !degraded && repair_added == 0; }
};

struct AcsOptions {
    CoverSearchOptions cover;
};

/// Union of the Z_s over an optimal leaf bar cover, followed by a repair loop that
/// adds the smallest uncovered vertex until the set is consistent. If the cover
/// search gives up (NoCoverFound) the result is all intervals with `degraded` set.
/// Throws DisconnectedError for disconnected instances.
AcsResult approximate_consistent_subset(const IntervalInstance& inst, const AcsOptions& options = {});

/// approximate_consistent_subset plus, when `run_exact`, the exact MCS size and the
/// achieved ratio. Throws SizeError if `run_exact` and the instance exceeds the guard.
AcsResult approximation_report(const IntervalInstance& inst, bool run_exact,
                               const AcsOptions& options = {},
                               const ExactOptions& exact = {});

}  // namespace mcs

#endif
