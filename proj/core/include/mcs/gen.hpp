#ifndef MCS_GEN_HPP
#define MCS_GEN_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "mcs/circle.hpp"
#include "mcs/interval.hpp"

namespace mcs {

struct GenConfig {
    std::size_t n = 1;
    int alpha = 1;
    std::uint64_t seed = 0;
    bool require_connected = true;
};

/// Seeded source of integers. Uses std::mt19937_64, whose output sequence is fixed
/// by the C++ standard, and draws bounded values by rejection sampling so results
/// are identical on every platform.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound);
    /// Fisher-Yates shuffle driven by `below`.
    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            auto j = static_cast<std::size_t>(below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

/// Random interval instance: a random perfect matching of the points 1..2n into
/// (left, right) pairs, redrawn until the overlap graph is connected (when
/// required), then uniform colors 1..alpha redrawn until every color appears.
/// Throws InputError unless 1 <= alpha <= n.
IntervalInstance random_interval_instance(const GenConfig& cfg);

/// Random chord diagram: random perfect matching of 1..2n, redrawn until the circle
/// graph is connected (when required); colors as for intervals.
ChordDiagram random_chord_diagram(const GenConfig& cfg);

}  // namespace mcs

#endif
