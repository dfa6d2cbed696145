#include "mcs/leaf_bar_cover.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "mcs/errors.hpp"

namespace mcs {

LeafBarCover make_cover(const IntervalInstance& inst, std::vector<ChainBar> bars) {
    LeafBarCover cover{std::move(bars), VertexSubset(inst.size()), VertexSubset(inst.size())};
    for (const auto& b : cover.bars) {
        cover.x |= b.z;
        cover.y |= b.inside;
    }
    return cover;
}

ChainBar chain_bar(const IntervalInstance& inst, const Bar& bar) {
    auto sets = bar_sets(inst, bar);
    if (!sets.inside.empty())
        return {bar, std::move(sets.inside), useful_cover(inst, bar).members};
    VertexSubset z(inst.size());
    if (bar.left >= 1 && bar.left < inst.last_point() && inst.is_left_endpoint(bar.left))
        z.insert(inst.owner(bar.left));
    return {bar, std::move(sets.inside), std::move(z)};
}

std::string CoverVerdict::first_failure() const {
    if (!y_covered_by_x) return "condition 1: y not covered by x";
    if (!x_union_y_complete) return "condition 2: x and y do not cover every interval";
    if (!x_y_disjoint) return "condition 3: x and y overlap";
    return "ok";
}

CoverVerdict is_leaf_bar_cover(const IntervalInstance& inst, const LeafBarCover& cover) {
    const auto& g = inst.graph();
    CoverVerdict v;
    cover.y.for_each([&](Vertex u) {
        if (!is_covered(g, u, cover.x)) v.uncovered.push_back(u);
    });
    for (Vertex u = 0; u < inst.size(); ++u) {
        const bool in_x = cover.x.contains(u);
        const bool in_y = cover.y.contains(u);
        if (!in_x && !in_y) v.missing.push_back(u);
        if (in_x && in_y) v.overlapping.push_back(u);
    }
    v.y_covered_by_x = v.uncovered.empty();
    v.x_union_y_complete = v.missing.empty();
    v.x_y_disjoint = v.overlapping.empty();
    v.all_leaf_bars = std::all_of(cover.bars.begin(), cover.bars.end(),
                                  [&](const ChainBar& b) { return is_leaf_bar(inst, b.bar); });
    v.contiguous = true;
    for (std::size_t i = 1; i < cover.bars.size(); ++i)
        v.contiguous = v.contiguous && cover.bars[i - 1].bar.right == cover.bars[i].bar.left;
    return v;
}

namespace {

bool has_consistent_proper_subset(const ColoredGraph& g, const std::vector<Vertex>& members) {
    const auto d = members.size();
    const std::uint64_t full = (std::uint64_t{1} << d) - 1;
    for (std::uint64_t mask = 1; mask < full; ++mask) {
        VertexSubset sub(g.vertex_count());
        for (std::size_t i = 0; i < d; ++i)
            if ((mask >> i) & 1U) sub.insert(members[i]);
        if (is_consistent_subset(g, sub)) return true;
    }
    return false;
}

}  // namespace

LeafBarCover cover_from_consistent_subset(const IntervalInstance& inst, const VertexSubset& S,
                                          std::size_t guard) {
    const auto& g = inst.graph();
    if (!is_consistent_subset(g, S)) throw PreconditionError("subset is not consistent");
    const auto members = S.members();
    if (members.size() > guard || members.size() > 62)
        throw SizeError("minimality check refused: subset of size " + std::to_string(members.size()));
    if (has_consistent_proper_subset(g, members))
        throw PreconditionError("subset has a consistent proper subset");

    std::vector<Point> points;
    for (Vertex v : members) {
        points.push_back(inst.interval(v).left);
        points.push_back(inst.interval(v).right);
    }
    std::sort(points.begin(), points.end());

    std::vector<Bar> bars;
    if (points.front() > 1) bars.push_back({0, points.front()});
    for (std::size_t t = 0; t + 1 < points.size(); ++t) bars.push_back({points[t], points[t + 1]});
    if (points.back() < inst.last_point() - 1) bars.push_back({points.back(), inst.last_point()});

    std::vector<ChainBar> chain;
    for (const auto& bar : bars) {
        auto inside = bar_sets(inst, bar).inside;
        VertexSubset z(inst.size());
        inside.for_each([&](Vertex u) { z |= covering_set(g, u, S); });
        for (Vertex v : members)
            if (inst.interval(v).left == bar.left) z.insert(v);
        chain.push_back({bar, std::move(inside), std::move(z)});
    }
    return make_cover(inst, std::move(chain));
}

const char* to_string(CoverMethod m) {
    switch (m) {
        case CoverMethod::Exact: return "exact";
        case CoverMethod::Beam: return "beam";
        case CoverMethod::UnitGaps: return "unit-gaps";
    }
    return "?";
}

namespace {

// Layered search over (boundary point, x, y). State words live in one arena:
// state i owns words [2*W*i, 2*W*(i+1)), x first.
class ChainSearch {
public:
    struct Outcome {
        bool found = false;
        bool budget_exceeded = false;
        std::uint32_t state = 0;
    };

    ChainSearch(const IntervalInstance& inst, const std::vector<ChainBar>& bars,
                const std::vector<std::vector<std::uint32_t>>& out,
                const std::vector<VertexSubset>& dead)
        : inst_(inst),
          bars_(bars),
          out_(out),
          dead_(dead),
          words_((inst.size() + 63) / 64),
          full_(VertexSubset::full(inst.size())),
          seen_(1024, Hash{this}, Equal{this}) {}

    Outcome run(std::size_t budget, std::size_t beam_width) {
        reset();
        std::vector<std::uint32_t> layer;
        for (Point k = 0; k <= inst_.last_point(); ++k) {
            auto idx = push_state(k, kNoParent, 0);
            std::fill_n(state_words(idx), 2 * words_, 0);
            if (commit(idx)) layer.push_back(idx);
        }
        std::vector<std::uint64_t> merged(words_);
        for (Point depth = 1; depth <= inst_.last_point() && !layer.empty(); ++depth) {
            std::vector<std::uint32_t> next;
            for (auto parent : layer) {
                for (auto bi : out_[static_cast<std::size_t>(point_[parent])]) {
                    const auto& bar = bars_[bi];
                    auto idx = push_state(bar.bar.right, parent, bi);
                    auto* x = state_words(idx);
                    auto* y = x + words_;
                    const auto* px = state_words(parent);
                    const auto* py = px + words_;
                    const auto z = bar.z.words();
                    const auto in = bar.inside.words();
                    const auto dead = dead_[static_cast<std::size_t>(bar.bar.right)].words();
                    bool reject = false;
                    for (std::size_t w = 0; w < words_ && !reject; ++w) {
                        x[w] = px[w] | z[w];
                        y[w] = py[w] | in[w];
                        merged[w] = x[w] | y[w];
                        reject = (x[w] & y[w]) || (dead[w] & ~merged[w]);
                    }
                    if (reject || !commit(idx)) {
                        discard();
                        continue;
                    }
                    next.push_back(idx);
                    if (accepting(idx)) return {true, false, idx};
                    if (beam_width == 0 && seen_.size() > budget) return {false, true, 0};
                }
            }
            if (beam_width > 0 && next.size() > beam_width) {
                std::stable_sort(next.begin(), next.end(), [&](auto a, auto b) {
                    return progress(a) > progress(b);
                });
                next.resize(beam_width);
            }
            layer = std::move(next);
        }
        return {};
    }

    std::vector<std::uint32_t> bar_path(std::uint32_t state) const {
        std::vector<std::uint32_t> path;
        for (auto s = state; parent_[s] != kNoParent; s = parent_[s]) path.push_back(bar_[s]);
        std::reverse(path.begin(), path.end());
        return path;
    }

    std::size_t states() const { return seen_.size(); }

private:
    static constexpr std::uint32_t kNoParent = std::numeric_limits<std::uint32_t>::max();

    struct Hash {
        const ChainSearch* self;
        std::size_t operator()(std::uint32_t s) const {
            std::uint64_t h = static_cast<std::uint64_t>(self->point_[s]) * 0x9E3779B97F4A7C15ULL;
            const auto* w = self->state_words(s);
            for (std::size_t i = 0; i < 2 * self->words_; ++i) {
                h ^= w[i] + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
            }
            return static_cast<std::size_t>(h);
        }
    };
    struct Equal {
        const ChainSearch* self;
        bool operator()(std::uint32_t a, std::uint32_t b) const {
            if (self->point_[a] != self->point_[b]) return false;
            return std::equal(self->state_words(a), self->state_words(a) + 2 * self->words_,
                              self->state_words(b));
        }
    };

    void reset() {
        seen_.clear();
        arena_.clear();
        point_.clear();
        parent_.clear();
        bar_.clear();
    }

    std::uint32_t push_state(Point k, std::uint32_t parent, std::uint32_t bar) {
        const auto idx = static_cast<std::uint32_t>(point_.size());
        point_.push_back(k);
        parent_.push_back(parent);
        bar_.push_back(bar);
        arena_.resize(arena_.size() + 2 * words_);
        return idx;
    }

    bool commit(std::uint32_t idx) { return seen_.insert(idx).second; }

    void discard() {
        point_.pop_back();
        parent_.pop_back();
        bar_.pop_back();
        arena_.resize(arena_.size() - 2 * words_);
    }

    std::uint64_t* state_words(std::uint32_t s) { return arena_.data() + 2 * words_ * s; }
    const std::uint64_t* state_words(std::uint32_t s) const { return arena_.data() + 2 * words_ * s; }

    std::size_t progress(std::uint32_t s) const {
        std::size_t c = 0;
        const auto* w = state_words(s);
        for (std::size_t i = 0; i < words_; ++i) c += static_cast<std::size_t>(std::popcount(w[i] | w[i + words_]));
        return c;
    }

    bool accepting(std::uint32_t s) const {
        const auto* w = state_words(s);
        const auto n = inst_.size();
        auto x = VertexSubset::from_words(n, {w, words_});
        auto y = VertexSubset::from_words(n, {w + words_, words_});
        if ((x | y) != full_) return false;
        return covers(inst_.graph(), x, y);
    }

    const IntervalInstance& inst_;
    const std::vector<ChainBar>& bars_;
    const std::vector<std::vector<std::uint32_t>>& out_;
    const std::vector<VertexSubset>& dead_;
    std::size_t words_;
    VertexSubset full_;
    std::vector<std::uint64_t> arena_;
    std::vector<Point> point_;
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint32_t> bar_;
    std::unordered_set<std::uint32_t, Hash, Equal> seen_;
};

LeafBarCover unit_gap_cover(const IntervalInstance& inst) {
    std::vector<ChainBar> chain;
    const auto top = static_cast<Point>(2 * inst.size());
    for (Point k = 1; k < top; ++k) chain.push_back(chain_bar(inst, {k, k + 1}));
    return make_cover(inst, std::move(chain));
}

}  // namespace

CoverSearchResult optimal_leaf_bar_cover(const IntervalInstance& inst,
                                         const CoverSearchOptions& options) {
    if (!inst.graph().connected())
        throw DisconnectedError("leaf bar cover search requires a connected interval graph");
    const auto n = inst.size();
    const Point last = inst.last_point();
    const auto matrix = leaf_bar_matrix(inst);

    std::vector<ChainBar> bars;
    std::vector<std::vector<std::uint32_t>> out(static_cast<std::size_t>(last) + 1);
    for (Point k = 0; k <= last; ++k)
        for (Point l = k + 1; l <= last; ++l)
            if (matrix(k, l)) {
                out[static_cast<std::size_t>(k)].push_back(static_cast<std::uint32_t>(bars.size()));
                bars.push_back(chain_bar(inst, {k, l}));
            }

    // Latest left boundary of any bar whose Z can still claim each interval.
    std::vector<Point> reach(n, -1);
    for (const auto& b : bars)
        b.z.for_each([&](Vertex v) { reach[v] = std::max(reach[v], b.bar.left); });
    std::vector<VertexSubset> dead(static_cast<std::size_t>(last) + 1, VertexSubset(n));
    for (Point l = 0; l <= last; ++l)
        for (Vertex v = 0; v < n; ++v)
            if (inst.interval(v).right <= l && reach[v] < l) dead[static_cast<std::size_t>(l)].insert(v);

    auto finish = [&](LeafBarCover cover, CoverMethod method, std::size_t states) {
        auto verdict = is_leaf_bar_cover(inst, cover);
        return CoverSearchResult{std::move(cover), std::move(verdict), method, states};
    };
    auto from_path = [&](const std::vector<std::uint32_t>& path) {
        std::vector<ChainBar> chain;
        for (auto bi : path) chain.push_back(bars[bi]);
        return make_cover(inst, std::move(chain));
    };

    ChainSearch search(inst, bars, out, dead);
    auto exact = search.run(options.state_budget, 0);
    if (exact.found) return finish(from_path(search.bar_path(exact.state)), CoverMethod::Exact, search.states());
    if (!exact.budget_exceeded)
        throw std::logic_error("cover search exhausted without reaching the unit-gap chain");
    if (!options.allow_fallback)
        throw NoCoverFound("cover search exceeded its state budget of " +
                           std::to_string(options.state_budget));

    auto beam = search.run(std::numeric_limits<std::size_t>::max(), std::max<std::size_t>(options.beam_width, 1));
    if (beam.found) return finish(from_path(search.bar_path(beam.state)), CoverMethod::Beam, search.states());
    return finish(unit_gap_cover(inst), CoverMethod::UnitGaps, search.states());
}

}  // namespace mcs
