#include <gtest/gtest.h>

#include "mcs/errors.hpp"
#include "mcs/exact.hpp"
#include "mcs/gen.hpp"
#include "support/oracles.hpp"

using namespace mcs;

TEST(ExactMcs, Monochromatic) {
    ColoredGraph g({1, 1, 1, 1}, {{0, 1}, {1, 2}, {2, 3}});
    auto s = exact_mcs(g);
    ASSERT_TRUE(s);
    EXPECT_EQ(*s, VertexSubset(4, {0}));
}

TEST(ExactMcs, BicoloredK2) {
    ColoredGraph g({1, 2}, {{0, 1}});
    EXPECT_EQ(exact_mcs(g)->size(), 2u);
}

TEST(ExactMcs, EveryColorPresent) {
    // The MCS contains every color.
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        auto inst = random_interval_instance({9, 3, seed, true});
        auto s = *exact_mcs(inst.graph());
        EXPECT_EQ(colors_of(inst.graph(), s).size(), 3u);
    }
}

TEST(ExactMcs, BudgetAndGuard) {
    ColoredGraph g({1, 2, 1}, {{0, 1}, {1, 2}});
    ExactOptions tight;
    tight.budget = 1;
    EXPECT_FALSE(exact_mcs(g, tight).has_value());
    ExactOptions small;
    small.guard = 2;
    EXPECT_THROW(exact_mcs(g, small), SizeError);
    ColoredGraph split({1, 1}, {});
    EXPECT_THROW(exact_mcs(split), DisconnectedError);
}

TEST(ExactMcs, AgreesWithMaskOracle) {
    for (std::uint64_t seed = 1; seed <= 80; ++seed) {
        const std::size_t n = 4 + seed % 9;
        const int alpha = 1 + static_cast<int>(seed % 3);
        auto inst = random_interval_instance({n, alpha, seed, true});
        auto m = oracle::interval_metric(inst);
        auto s = *exact_mcs(inst.graph());
        ASSERT_EQ(static_cast<int>(s.size()), oracle::mcs_size(m)) << "seed " << seed;
        ASSERT_TRUE(oracle::consistent(m, oracle::to_mask(s)));
    }
}

TEST(ExactMcs, SomeMinimalCsIsNotMinimum) {
    // There are instances with a consistent subset none of whose proper subsets is
    // consistent, yet which is larger than the minimum.
    bool found = false;
    for (std::uint64_t seed = 1; seed <= 300 && !found; ++seed) {
        auto inst = random_interval_instance({8, 2, seed, true});
        auto m = oracle::interval_metric(inst);
        const int best = oracle::mcs_size(m);
        for (oracle::Mask s = 1; s <= oracle::all(m.n) && !found; ++s) {
            if (std::popcount(s) <= best || !oracle::consistent(m, s)) continue;
            bool minimal = true;
            for (int v = 0; v < m.n && minimal; ++v)
                if (oracle::has(s, v) && oracle::consistent(m, s & ~(oracle::Mask{1} << v))) minimal = false;
            found = minimal;
        }
    }
    EXPECT_TRUE(found);
}

TEST(DominatingSet, Examples) {
    ColoredGraph star({1, 1, 1, 1}, {{0, 1}, {0, 2}, {0, 3}});
    EXPECT_EQ(exact_min_dominating_set(star), VertexSubset(4, {0}));
    ColoredGraph path({1, 1, 1}, {{0, 1}, {1, 2}});
    EXPECT_EQ(exact_min_dominating_set(path), VertexSubset(3, {1}));
    EXPECT_TRUE(is_dominating_set(path, VertexSubset(3, {0, 2})));
    EXPECT_FALSE(is_dominating_set(path, VertexSubset(3, {0})));
}

TEST(DominatingSet, AgreesWithOracleOnCircleGraphs) {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        const std::size_t n = 2 + seed % 9;
        auto d = random_chord_diagram({n, 1, seed, true});
        auto m = oracle::chord_metric(d);
        auto g = circle_graph(d);
        auto s = exact_min_dominating_set(g);
        ASSERT_TRUE(is_dominating_set(g, s));
        ASSERT_EQ(static_cast<int>(s.size()), oracle::domination_number(m)) << "seed " << seed;
    }
}
