#include <gtest/gtest.h>

#include "mcs/errors.hpp"
#include "mcs/gen.hpp"
#include "mcs/useful_cover.hpp"
#include "support/oracles.hpp"

using namespace mcs;

TEST(PartitionQ, OneSided) {
    // A=(1,3) sits left of the bar (3..6); B=(2,5) and C=(4,6) have endpoints inside.
    IntervalInstance inst({{1, 1, 1, 3}, {2, 1, 2, 5}, {3, 1, 4, 6}});
    Bar bar{3, 6};
    ASSERT_TRUE(is_leaf_bar(inst, bar));
    auto q = partition_q(inst, bar);
    EXPECT_EQ(q.q_left, VertexSubset(3, {0}));
    EXPECT_TRUE(q.q_right.empty());
    EXPECT_TRUE(q.q_spanning.empty());
    auto z = useful_cover(inst, bar);
    EXPECT_EQ(z.members, VertexSubset(3, {0}));
    EXPECT_EQ(z.selection, CoverCase::OneSided);
}

TEST(PartitionQ, Spanning) {
    // S=(1,6) spans the bar (1..6) and touches both B=(2,3) and C=(4,5).
    IntervalInstance inst({{1, 1, 1, 6}, {2, 1, 2, 3}, {3, 1, 4, 5}});
    Bar bar{1, 6};
    ASSERT_TRUE(is_leaf_bar(inst, bar));
    auto q = partition_q(inst, bar);
    EXPECT_EQ(q.q_spanning, VertexSubset(3, {0}));
    EXPECT_TRUE(q.q_left.empty());
    EXPECT_TRUE(q.q_right.empty());
    auto z = useful_cover(inst, bar);
    EXPECT_EQ(z.members, VertexSubset(3, {0}));
    EXPECT_EQ(z.selection, CoverCase::Spanning);
}

TEST(PartitionQ, Preconditions) {
    IntervalInstance inst({{1, 1, 1, 3}, {2, 2, 2, 4}});
    EXPECT_THROW(partition_q(inst, {0, 5}), PreconditionError);  // not a leaf bar
    EXPECT_THROW(partition_q(inst, {1, 2}), PreconditionError);  // empty I_s
    EXPECT_THROW(useful_cover(inst, {0, 5}), PreconditionError);
}

TEST(PartitionQ, MatchesClassificationOracle) {
    std::size_t bars = 0;
    for (std::uint64_t seed = 1; seed <= 120; ++seed) {
        auto inst = random_interval_instance({4 + seed % 9, 2 + static_cast<int>(seed % 2), seed, true});
        auto m = oracle::interval_metric(inst);
        const Point last = inst.last_point();
        for (Point i = 0; i <= last; ++i)
            for (Point j = i + 2; j <= last; ++j) {
                if (!oracle::leaf_bar(inst, m, i, j) || oracle::bar_sets(inst, i, j).inside == 0) continue;
                ++bars;
                auto q = partition_q(inst, {i, j});
                auto c = oracle::classify_q(inst, m, i, j);
                ASSERT_EQ(c.other, 0u) << "Q member straddles the bar";
                ASSERT_EQ(oracle::to_mask(q.q_left), c.left);
                ASSERT_EQ(oracle::to_mask(q.q_right), c.right);
                ASSERT_EQ(oracle::to_mask(q.q_spanning), c.spanning);
                ASSERT_FALSE(q.q_left.intersects(q.q_right));
                ASSERT_FALSE(q.q_left.intersects(q.q_spanning));
                ASSERT_FALSE(q.q_right.intersects(q.q_spanning));
            }
    }
    EXPECT_GT(bars, 500u);
}

TEST(UsefulCover, SpanningCaseOnePerColor) {
    std::size_t seen = 0;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        auto inst = random_interval_instance({9, 2, seed, true});
        const Point last = inst.last_point();
        for (Point i = 0; i <= last; ++i)
            for (Point j = i + 2; j <= last; ++j) {
                if (!is_leaf_bar(inst, {i, j}) || bar_sets(inst, {i, j}).inside.empty()) continue;
                auto z = useful_cover(inst, {i, j});
                if (z.selection != CoverCase::Spanning) continue;
                ++seen;
                auto inside = bar_sets(inst, {i, j}).inside;
                auto q = partition_q(inst, {i, j});
                const auto colors = colors_of(inst.graph(), inside);
                ASSERT_EQ(z.members.size(), colors.size());
                ASSERT_LE(z.members.size(), static_cast<std::size_t>(inst.alpha()));
                z.members.for_each([&](Vertex v) {
                    ASSERT_TRUE(q.q_spanning.contains(v));
                    q.q_spanning.for_each([&](Vertex u) {
                        if (inst.color(u) == inst.color(v)) ASSERT_LE(inst.interval(u).left, inst.interval(v).left);
                    });
                });
            }
    }
    EXPECT_GT(seen, 0u);
}

TEST(UsefulCover, OneSidedFourMembers) {
    // Two colors, no spanning interval, a left and a right representative each.
    bool found = false;
    for (std::uint64_t seed = 1; seed <= 2000 && !found; ++seed) {
        auto inst = random_interval_instance({10, 2, seed, true});
        const Point last = inst.last_point();
        for (Point i = 0; i <= last && !found; ++i)
            for (Point j = i + 2; j <= last && !found; ++j) {
                if (!is_leaf_bar(inst, {i, j}) || bar_sets(inst, {i, j}).inside.empty()) continue;
                auto z = useful_cover(inst, {i, j});
                found = z.selection == CoverCase::OneSided && z.members.size() == 4;
            }
    }
    EXPECT_TRUE(found);
}

TEST(UsefulCover, CoversInsideOnRandomLeafBars) {
    std::size_t bars = 0;
    for (std::uint64_t seed = 1; seed <= 150; ++seed) {
        const int alpha = 2 + static_cast<int>(seed % 2);
        auto inst = random_interval_instance({5 + seed % 8, alpha, seed, true});
        auto m = oracle::interval_metric(inst);
        const Point last = inst.last_point();
        for (Point i = 0; i <= last; ++i)
            for (Point j = i + 2; j <= last; ++j) {
                auto sets = oracle::bar_sets(inst, i, j);
                if (sets.inside == 0 || !oracle::leaf_bar(inst, m, i, j)) continue;
                ++bars;
                auto z = useful_cover(inst, {i, j});
                const auto zm = oracle::to_mask(z.members);
                ASSERT_EQ(zm, oracle::useful_cover(inst, m, i, j));
                ASSERT_LE(std::popcount(zm), 2 * alpha);
                ASSERT_TRUE(oracle::covers(m, zm, sets.inside)) << "seed " << seed << " bar " << i << ".." << j;
            }
    }
    EXPECT_GT(bars, 1000u);
}
