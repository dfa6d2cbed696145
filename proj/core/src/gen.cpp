#include "mcs/gen.hpp"

#include <numeric>
#include <string>

#include "mcs/errors.hpp"

namespace mcs {
namespace {

void check_config(const GenConfig& cfg) {
    if (cfg.n < 1) throw InputError("generator needs n >= 1");
    if (cfg.alpha < 1 || static_cast<std::size_t>(cfg.alpha) > cfg.n)
        throw InputError("generator needs 1 <= alpha <= n (alpha=" + std::to_string(cfg.alpha) +
                         ", n=" + std::to_string(cfg.n) + ")");
}

// Pairs of a uniformly random perfect matching on 1..2n, each pair ascending.
std::vector<std::pair<int, int>> random_matching(SeededRng& rng, std::size_t n) {
    std::vector<int> points(2 * n);
    std::iota(points.begin(), points.end(), 1);
    rng.shuffle(points);
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < n; ++i) {
        auto a = points[2 * i];
        auto b = points[2 * i + 1];
        pairs.emplace_back(std::min(a, b), std::max(a, b));
    }
    return pairs;
}

std::vector<Color> random_colors(SeededRng& rng, std::size_t n, int alpha) {
    while (true) {
        std::vector<Color> colors(n);
        std::vector<bool> seen(static_cast<std::size_t>(alpha) + 1, false);
        int distinct = 0;
        for (auto& c : colors) {
            c = static_cast<Color>(rng.below(static_cast<std::uint64_t>(alpha))) + 1;
            if (!seen[static_cast<std::size_t>(c)]) {
                seen[static_cast<std::size_t>(c)] = true;
                ++distinct;
            }
        }
        if (distinct == alpha) return colors;
    }
}

}  // namespace

std::uint64_t SeededRng::below(std::uint64_t bound) {
    if (bound == 0) throw InputError("SeededRng::below needs a positive bound");
    // Accept only draws from [2^64 mod bound, 2^64), whose length is a multiple of bound.
    const std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
        const auto r = next();
        if (r >= threshold) return r % bound;
    }
}

IntervalInstance random_interval_instance(const GenConfig& cfg) {
    check_config(cfg);
    SeededRng rng(cfg.seed);
    while (true) {
        auto pairs = random_matching(rng, cfg.n);
        std::vector<Interval> intervals;
        for (std::size_t i = 0; i < cfg.n; ++i)
            intervals.push_back({static_cast<int>(i) + 1, 1, pairs[i].first, pairs[i].second});
        if (cfg.require_connected && !IntervalInstance(intervals).graph().connected()) continue;
        auto colors = random_colors(rng, cfg.n, cfg.alpha);
        for (std::size_t i = 0; i < cfg.n; ++i) intervals[i].color = colors[i];
        return IntervalInstance(std::move(intervals));
    }
}

ChordDiagram random_chord_diagram(const GenConfig& cfg) {
    check_config(cfg);
    SeededRng rng(cfg.seed);
    while (true) {
        auto pairs = random_matching(rng, cfg.n);
        std::vector<Chord> chords;
        for (std::size_t i = 0; i < cfg.n; ++i)
            chords.push_back({static_cast<int>(i) + 1, 1, pairs[i].first, pairs[i].second});
        ChordDiagram diagram(chords);
        if (cfg.require_connected && !circle_graph(diagram).connected()) continue;
        auto colors = random_colors(rng, cfg.n, cfg.alpha);
        for (std::size_t i = 0; i < cfg.n; ++i) chords[i].color = colors[i];
        return ChordDiagram(std::move(chords));
    }
}

}  // namespace mcs
