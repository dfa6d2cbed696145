#include "mcs/interval.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "mcs/errors.hpp"

namespace mcs {
namespace {

ColoredGraph build_overlap_graph(const std::vector<Interval>& intervals) {
    std::vector<Color> colors;
    colors.reserve(intervals.size());
    for (const auto& iv : intervals) colors.push_back(iv.color);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < intervals.size(); ++u)
        for (Vertex v = u + 1; v < intervals.size(); ++v)
            if (!(intervals[u].right < intervals[v].left || intervals[v].right < intervals[u].left))
                edges.emplace_back(u, v);
    return ColoredGraph(std::move(colors), edges);
}

void check_ids(std::vector<int> ids) {
    std::sort(ids.begin(), ids.end());
    for (std::size_t i = 0; i < ids.size(); ++i)
        if (ids[i] != static_cast<int>(i) + 1)
            throw InputError("interval ids must be exactly 1..n");
}

}  // namespace

std::string to_string(const Bar& bar) {
    return "(" + std::to_string(bar.left) + ".." + std::to_string(bar.right) + ")";
}

IntervalInstance::IntervalInstance(std::vector<Interval> intervals) {
    std::vector<int> ids;
    for (const auto& iv : intervals) ids.push_back(iv.id);
    check_ids(std::move(ids));
    std::sort(intervals.begin(), intervals.end(),
              [](const Interval& a, const Interval& b) { return a.id < b.id; });

    const auto n = intervals.size();
    const Point top = static_cast<Point>(2 * n);
    owner_.assign(2 * n + 2, n);
    for (Vertex v = 0; v < n; ++v) {
        const auto& iv = intervals[v];
        if (iv.left >= iv.right)
            throw InputError("interval " + std::to_string(iv.id) + " has left >= right");
        for (Point p : {iv.left, iv.right}) {
            if (p < 1 || p > top)
                throw InputError("endpoint " + std::to_string(p) + " outside 1.." + std::to_string(top));
            auto& slot = owner_[static_cast<std::size_t>(p)];
            if (slot != n) throw InputError("endpoint " + std::to_string(p) + " is shared");
            slot = v;
        }
    }
    intervals_ = std::move(intervals);
    graph_ = build_overlap_graph(intervals_);
}

void IntervalInstance::check_bar(const Bar& bar) const {
    if (bar.left < 0 || bar.left >= bar.right || bar.right > last_point())
        throw InputError("invalid bar " + to_string(bar));
}

IntervalInstance normalize(const std::vector<RawInterval>& raw) {
    const auto n = raw.size();
    struct End {
        double value;
        Vertex owner;
        bool is_left;
    };
    std::vector<End> ends;
    ends.reserve(2 * n);
    for (Vertex v = 0; v < n; ++v) {
        if (!(raw[v].left < raw[v].right))
            throw InputError("interval " + std::to_string(raw[v].id) + " has left >= right");
        ends.push_back({raw[v].left, v, true});
        ends.push_back({raw[v].right, v, false});
    }
    std::sort(ends.begin(), ends.end(), [](const End& a, const End& b) { return a.value < b.value; });
    for (std::size_t i = 1; i < ends.size(); ++i)
        if (ends[i].value == ends[i - 1].value)
            throw InputError("duplicate endpoint value " + std::to_string(ends[i].value));

    std::vector<Interval> intervals(n);
    for (Vertex v = 0; v < n; ++v) intervals[v] = {raw[v].id, raw[v].color, 0, 0};
    for (std::size_t rank = 0; rank < ends.size(); ++rank) {
        auto& iv = intervals[ends[rank].owner];
        (ends[rank].is_left ? iv.left : iv.right) = static_cast<Point>(rank + 1);
    }
    return IntervalInstance(std::move(intervals));
}

ColoredGraph overlap_graph(const IntervalInstance& inst) { return inst.graph(); }

BarSets bar_sets(const IntervalInstance& inst, const Bar& bar) {
    inst.check_bar(bar);
    BarSets out{VertexSubset(inst.size()), VertexSubset(inst.size())};
    for (Vertex v = 0; v < inst.size(); ++v) {
        const auto& iv = inst.interval(v);
        if (bar.contains(iv.left) || bar.contains(iv.right))
            out.inside.insert(v);
        else
            out.outside.insert(v);
    }
    return out;
}

bool is_leaf_bar(const IntervalInstance& inst, const Bar& bar) {
    auto [inside, outside] = bar_sets(inst, bar);
    if (inside.empty()) return true;
    if (outside.empty()) return false;
    return covers(inst.graph(), outside, inside);
}

LeafBarMatrix leaf_bar_matrix(const IntervalInstance& inst) {
    const auto points = static_cast<std::size_t>(inst.last_point()) + 1;
    LeafBarMatrix m(points);
    for (Point i = 0; i <= inst.last_point(); ++i)
        for (Point j = i + 1; j <= inst.last_point(); ++j) m.set(i, j, is_leaf_bar(inst, {i, j}));
    return m;
}

}  // namespace mcs
