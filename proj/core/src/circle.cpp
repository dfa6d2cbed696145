#include "mcs/circle.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "mcs/errors.hpp"

namespace mcs {
namespace {

std::vector<std::pair<Vertex, Vertex>> crossing_pairs(const ChordDiagram& d) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < d.size(); ++u)
        for (Vertex v = u + 1; v < d.size(); ++v)
            if (chords_cross(d.chord(u), d.chord(v))) edges.emplace_back(u, v);
    return edges;
}

}  // namespace

ChordDiagram::ChordDiagram(std::vector<Chord> chords) {
    const auto n = chords.size();
    std::sort(chords.begin(), chords.end(), [](const Chord& x, const Chord& y) { return x.id < y.id; });
    std::vector<bool> used(2 * n + 1, false);
    for (std::size_t i = 0; i < n; ++i) {
        auto& c = chords[i];
        if (c.id != static_cast<int>(i) + 1) throw InputError("chord ids must be exactly 1..n");
        if (c.a > c.b) std::swap(c.a, c.b);
        if (c.a == c.b) throw InputError("chord " + std::to_string(c.id) + " has equal endpoints");
        for (int p : {c.a, c.b}) {
            if (p < 1 || p > static_cast<int>(2 * n))
                throw InputError("chord " + std::to_string(c.id) + " position " + std::to_string(p) +
                                 " outside 1.." + std::to_string(2 * n));
            if (used[static_cast<std::size_t>(p)])
                throw InputError("position " + std::to_string(p) + " is shared by two chords");
            used[static_cast<std::size_t>(p)] = true;
        }
    }
    chords_ = std::move(chords);
}

bool chords_cross(const Chord& first, const Chord& second) {
    const auto lo = std::min(first.a, first.b);
    const auto hi = std::max(first.a, first.b);
    for (int p : {second.a, second.b})
        if (p == lo || p == hi) throw InputError("chords share endpoint " + std::to_string(p));
    const bool a_inside = lo < second.a && second.a < hi;
    const bool b_inside = lo < second.b && second.b < hi;
    return a_inside != b_inside;
}

ColoredGraph circle_graph(const ChordDiagram& d) {
    std::vector<Color> colors;
    for (const auto& c : d.chords()) colors.push_back(c.color);
    return ColoredGraph(std::move(colors), crossing_pairs(d));
}

ReducedInstance reduce_domset_to_mcs(const ChordDiagram& d) {
    const auto n = d.size();
    std::vector<Vertex> owner(2 * n + 1);
    for (Vertex v = 0; v < n; ++v) {
        owner[static_cast<std::size_t>(d.chord(v).a)] = v;
        owner[static_cast<std::size_t>(d.chord(v).b)] = v;
    }

    std::vector<Chord> chords(2 * n);
    for (Vertex v = 0; v < n; ++v) {
        chords[v] = {static_cast<int>(v) + 1, 1, 0, 0};
        chords[n + v] = {static_cast<int>(n + v) + 1, static_cast<int>(v) + 2, 0, 0};
    }
    int next = 1;
    for (std::size_t p = 1; p <= 2 * n; ++p) {
        const auto v = owner[p];
        const bool lower = d.chord(v).a == static_cast<int>(p);
        if (lower) {
            chords[n + v].a = next++;
            chords[v].a = next++;
            chords[n + v].b = next++;
        } else {
            chords[v].b = next++;
        }
    }

    ReducedInstance out{ChordDiagram(std::move(chords)), {}, {}, {}};
    for (Vertex v = 0; v < n; ++v) {
        const int copy = static_cast<int>(v) + 1;
        const int pendant = static_cast<int>(n + v) + 1;
        out.v1_ids.push_back(copy);
        out.v2_ids.push_back(pendant);
        out.pendant_of[copy] = pendant;
    }
    return out;
}

VertexSubset forward_witness(const ReducedInstance& reduced, const VertexSubset& dominating) {
    const auto n = reduced.v1_ids.size();
    VertexSubset out(2 * n);
    for (Vertex v = 0; v < n; ++v) out.insert(n + v);
    dominating.for_each([&](Vertex v) { out.insert(v); });
    return out;
}

ReductionVerdict verify_reduction_lemma(const ChordDiagram& d, std::size_t guard) {
    const auto n = d.size();
    if (n == 0) throw InputError("reduction check needs at least one chord");
    if (n > guard)
        throw SizeError("reduction check refused: " + std::to_string(n) + " chords exceeds guard " +
                        std::to_string(guard));
    // Source colors play no part in domination.
    const ColoredGraph source(std::vector<Color>(n, 1), crossing_pairs(d));
    if (!source.connected()) throw DisconnectedError("source circle graph is disconnected");

    const auto reduced = reduce_domset_to_mcs(d);
    const auto target = circle_graph(reduced.diagram);
    const ExactOptions exact{std::nullopt, std::max(2 * guard, kDefaultExactGuard)};

    ReductionVerdict verdict;
    verdict.n = n;
    verdict.dominating_set = exact_min_dominating_set(source, exact);
    verdict.domination_number = verdict.dominating_set.size();
    verdict.mcs = *exact_mcs(target, exact);
    verdict.mcs_size = verdict.mcs.size();
    verdict.forward_witness_consistent =
        is_consistent_subset(target, forward_witness(reduced, verdict.dominating_set));
    return verdict;
}

}  // namespace mcs
