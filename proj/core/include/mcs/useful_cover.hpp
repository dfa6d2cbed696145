#ifndef MCS_USEFUL_COVER_HPP
#define MCS_USEFUL_COVER_HPP

#include "mcs/interval.hpp"

namespace mcs {

/// Q = NN(I_s, O_s) split by position relative to the bar s = (i..j):
///   q_left:     both endpoints <= i
///   q_right:    both endpoints >= j
///   q_spanning: left endpoint <= i and right endpoint >= j
struct QPartition {
    VertexSubset q_left;
    VertexSubset q_right;
    VertexSubset q_spanning;

    VertexSubset all() const { return q_left | q_right | q_spanning; }
};

/// Requires a leaf bar with nonempty I_s; throws PreconditionError otherwise.
QPartition partition_q(const IntervalInstance& inst, const Bar& bar);

/// Which selection rule produced the cover.
enum class CoverCase {
    OneSided,  ///< q_spanning empty: nearest left and right representative per color
    Spanning,  ///< every color of I_s has a spanning representative
    Mixed,     ///< some colors spanning, the rest one-sided
};

const char* to_string(CoverCase c);

struct UsefulCover {
    Bar bar;
    VertexSubset members;
    CoverCase selection = CoverCase::OneSided;
};

/// Picks at most two representatives from Q per color of I_s:
///  - a spanning interval of that color with the greatest left endpoint, if any;
///  - otherwise the left-side interval whose endpoint is closest to the bar
///    (greatest endpoint among q_left intervals of the color) and the right-side
///    interval whose endpoint is closest to the bar (lowest endpoint among q_right
///    intervals of the color), whichever exist.
/// The result has at most 2|C(I_s)| members and covers I_s.
///
/// Throws PreconditionError unless the bar is a leaf bar with nonempty I_s, and
/// std::logic_error if some color of I_s has no representative in Q (impossible
/// for a leaf bar).
UsefulCover useful_cover(const IntervalInstance& inst, const Bar& bar);

}  // namespace mcs

#endif
