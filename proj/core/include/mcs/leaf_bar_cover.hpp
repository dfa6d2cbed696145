#ifndef MCS_LEAF_BAR_COVER_HPP
#define MCS_LEAF_BAR_COVER_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "mcs/interval.hpp"
#include "mcs/useful_cover.hpp"

namespace mcs {

/// One bar of a chain together with its I_s and the cover Z_s chosen for it.
struct ChainBar {
    Bar bar;
    VertexSubset inside;
    VertexSubset z;
};

/// A left-to-right chain of bars. x is the union of the Z_s, y the union of the I_s.
struct LeafBarCover {
    std::vector<ChainBar> bars;
    VertexSubset x;
    VertexSubset y;

    std::size_t bar_count() const { return bars.size(); }
};

/// Fills in x and y from the bars.
LeafBarCover make_cover(const IntervalInstance& inst, std::vector<ChainBar> bars);

/// The chain entry the cover search uses for a leaf bar. Bars with nonempty I_s get
/// their useful cover. A bar with empty I_s may claim the single interval whose
/// left endpoint is the bar's left boundary, otherwise its Z is empty.
ChainBar chain_bar(const IntervalInstance& inst, const Bar& bar);

/// Per-condition result of checking a chain against the leaf bar cover definition:
///   1. y is covered by x (nearest neighbors taken within x);
///   2. x and y together are all intervals;
///   3. x and y are disjoint.
/// `all_leaf_bars` and `contiguous` are reported but are not part of the verdict.
struct CoverVerdict {
    bool y_covered_by_x = false;
    bool x_union_y_complete = false;
    bool x_y_disjoint = false;
    bool all_leaf_bars = false;
    bool contiguous = false;
    std::vector<Vertex> uncovered;    ///< members of y not covered by x
    std::vector<Vertex> missing;      ///< intervals in neither x nor y
    std::vector<Vertex> overlapping;  ///< intervals in both x and y

    bool valid() const { return y_covered_by_x && x_union_y_complete && x_y_disjoint; }
    /// "ok", or the name of the first failing condition.
    std::string first_failure() const;
};

CoverVerdict is_leaf_bar_cover(const IntervalInstance& inst, const LeafBarCover& cover);

/// Builds a chain from a consistent subset S none of whose proper subsets is
/// consistent. With i_1 < ... < i_2d the endpoints of S, the bars are the gaps
/// (i_t..i_t+1), plus (0..i_1) when i_1 > 1 and (i_2d..2n+1) when i_2d < 2n.
/// Each bar's Z is the part of S covering its I_s plus the members of S whose
/// left endpoint is the bar's left boundary, so x = S and y = V \ S.
///
/// Throws PreconditionError if S is not consistent or has a consistent proper
/// subset, and SizeError if |S| exceeds `guard` (minimality is checked exhaustively).
LeafBarCover cover_from_consistent_subset(const IntervalInstance& inst, const VertexSubset& S,
                                          std::size_t guard = 20);

enum class CoverMethod {
    Exact,     ///< exhaustive layered search finished within the state budget
    Beam,      ///< budget exceeded; truncated search found a cover
    UnitGaps,  ///< beam failed; chain of width-1 bars (x = V)
};

const char* to_string(CoverMethod m);

struct CoverSearchOptions {
    /// Number of distinct search states the exact search may create.
    std::size_t state_budget = 4'000'000;
    /// States kept per layer once the budget is exceeded.
    std::size_t beam_width = 4096;
    /// When false, running out of budget throws NoCoverFound instead of degrading.
    bool allow_fallback = true;
};

struct CoverSearchResult {
    LeafBarCover cover;
    CoverVerdict verdict;
    CoverMethod method = CoverMethod::Exact;
    std::size_t states = 0;

    bool certified_optimal() const { return method == CoverMethod::Exact; }
};

/// Minimum-bar leaf bar cover over chains of contiguous leaf bars (k_0..k_1),
/// (k_1..k_2), ..., using `chain_bar` for each Z_s.
///
/// Breadth-first search over (right boundary, x, y) states, one layer per bar.
/// States with x and y overlapping are dropped, as are states that leave some
/// interval entirely to the left of the boundary in neither set when no later bar
/// can still claim it. The first accepting state is therefore optimal, and among
/// optimal chains it has the lexicographically smallest boundary sequence.
///
/// Throws DisconnectedError for disconnected instances and NoCoverFound when the
/// budget runs out with fallback disabled.
CoverSearchResult optimal_leaf_bar_cover(const IntervalInstance& inst,
                                         const CoverSearchOptions& options = {});

}  // namespace mcs

#endif
