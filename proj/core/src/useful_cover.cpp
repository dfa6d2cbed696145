#include "mcs/useful_cover.hpp"

#include <optional>
#include <stdexcept>

#include "mcs/errors.hpp"

namespace mcs {
namespace {

BarSets leaf_bar_sets_or_throw(const IntervalInstance& inst, const Bar& bar) {
    auto sets = bar_sets(inst, bar);
    if (sets.inside.empty())
        throw PreconditionError("bar " + to_string(bar) + " has no interval endpoint inside");
    if (sets.outside.empty() || !covers(inst.graph(), sets.outside, sets.inside))
        throw PreconditionError("bar " + to_string(bar) + " is not a leaf bar");
    return sets;
}

// Member of `pool` with color c maximizing (or minimizing) key(v).
template <typename Key>
std::optional<Vertex> pick(const IntervalInstance& inst, const VertexSubset& pool, Color c,
                           Key key, bool maximize) {
    std::optional<Vertex> best;
    pool.for_each([&](Vertex v) {
        if (inst.color(v) != c) return;
        if (!best || (maximize ? key(v) > key(*best) : key(v) < key(*best))) best = v;
    });
    return best;
}

}  // namespace

const char* to_string(CoverCase c) {
    switch (c) {
        case CoverCase::OneSided: return "one-sided";
        case CoverCase::Spanning: return "spanning";
        case CoverCase::Mixed: return "mixed";
    }
    return "?";
}

QPartition partition_q(const IntervalInstance& inst, const Bar& bar) {
    auto [inside, outside] = leaf_bar_sets_or_throw(inst, bar);
    auto q = nearest_neighbors(inst.graph(), inside, outside);
    const auto n = inst.size();
    QPartition out{VertexSubset(n), VertexSubset(n), VertexSubset(n)};
    q.for_each([&](Vertex v) {
        const auto& iv = inst.interval(v);
        if (iv.right <= bar.left)
            out.q_left.insert(v);
        else if (iv.left >= bar.right)
            out.q_right.insert(v);
        else if (iv.left <= bar.left && iv.right >= bar.right)
            out.q_spanning.insert(v);
        else
            throw std::logic_error("interval " + std::to_string(iv.id) + " in O_s has an endpoint inside " +
                                   to_string(bar));
    });
    return out;
}

UsefulCover useful_cover(const IntervalInstance& inst, const Bar& bar) {
    const auto inside = bar_sets(inst, bar).inside;
    const auto q = partition_q(inst, bar);

    auto left_of = [&](Vertex v) { return inst.interval(v).left; };
    auto right_of = [&](Vertex v) { return inst.interval(v).right; };

    UsefulCover out{bar, VertexSubset(inst.size()), CoverCase::OneSided};
    bool used_spanning = false;
    bool used_one_sided = false;
    for (Color c : colors_of(inst.graph(), inside)) {
        if (auto s = pick(inst, q.q_spanning, c, left_of, true)) {
            out.members.insert(*s);
            used_spanning = true;
            continue;
        }
        auto l = pick(inst, q.q_left, c, right_of, true);
        auto r = pick(inst, q.q_right, c, left_of, false);
        if (!l && !r)
            throw std::logic_error("leaf bar " + to_string(bar) + ": color " + std::to_string(c) +
                                   " of I_s has no representative in NN(I_s, O_s)");
        if (l) out.members.insert(*l);
        if (r) out.members.insert(*r);
        used_one_sided = true;
    }
    if (used_spanning) out.selection = used_one_sided ? CoverCase::Mixed : CoverCase::Spanning;
    return out;
}

}  // namespace mcs
