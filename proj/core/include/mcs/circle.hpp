#ifndef MCS_CIRCLE_HPP
#define MCS_CIRCLE_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "mcs/exact.hpp"
#include "mcs/graph.hpp"

namespace mcs {

/// A chord between two positions on a circle labeled 1..2n clockwise.
struct Chord {
    int id = 0;  ///< 1-based, equal to vertex index + 1
    Color color = 1;
    int a = 0;
    int b = 0;
};

/// n chords with pairwise distinct endpoints covering 1..2n exactly. Chords are
/// stored sorted by id with a < b.
class ChordDiagram {
public:
    ChordDiagram() = default;
    /// Throws InputError on shared or out-of-range positions and ids other than 1..n.
    explicit ChordDiagram(std::vector<Chord> chords);

    std::size_t size() const { return chords_.size(); }
    const Chord& chord(Vertex v) const { return chords_[v]; }
    const std::vector<Chord>& chords() const { return chords_; }

private:
    std::vector<Chord> chords_;
};

/// True iff exactly one endpoint of `second` lies strictly between the endpoints of
/// `first`. Throws InputError when the chords share an endpoint.
bool chords_cross(const Chord& first, const Chord& second);

/// Crossing graph of the diagram, colored by the chord colors.
ColoredGraph circle_graph(const ChordDiagram& d);

/// Output of the dominating-set gadget. Vertex v < n is the copy of source chord
/// v; vertex n + v is its pendant.
struct ReducedInstance {
    ChordDiagram diagram;
    std::vector<int> v1_ids;
    std::vector<int> v2_ids;
    std::map<int, int> pendant_of;  ///< copy id -> pendant id
};

/// Copies every source chord (color 1) and adds for each a pendant chord of its own
/// color 2..n+1 whose endpoints flank the lower endpoint of its partner, so the
/// pendant crosses that partner and nothing else. Positions are relabeled 1..4n;
/// source colors are ignored.
ReducedInstance reduce_domset_to_mcs(const ChordDiagram& d);

inline constexpr std::size_t kDefaultReductionGuard = 10;

struct ReductionVerdict {
    std::size_t n = 0;
    std::size_t domination_number = 0;  ///< k = |minimum dominating set of T|
    std::size_t mcs_size = 0;           ///< s = |minimum consistent subset of T'|
    VertexSubset dominating_set;        ///< over T
    VertexSubset mcs;                   ///< over T'
    /// V2 together with the copies of `dominating_set` is consistent in T'.
    bool forward_witness_consistent = false;

    bool holds() const { return mcs_size == n + domination_number; }
};

/// Computes both sides of "T has a dominating set of size k iff T' has a consistent
/// subset of size n + k" exactly. Throws SizeError when n exceeds `guard` and
/// DisconnectedError when the source circle graph is disconnected.
ReductionVerdict verify_reduction_lemma(const ChordDiagram& d,
                                        std::size_t guard = kDefaultReductionGuard);

/// V2 plus the copies of `dominating` as a vertex set of the reduced graph.
VertexSubset forward_witness(const ReducedInstance& reduced, const VertexSubset& dominating);

}  // namespace mcs

#endif
