#include <gtest/gtest.h>

#include "mcs/errors.hpp"
#include "mcs/gen.hpp"
#include "mcs/interval.hpp"
#include "support/oracles.hpp"

using namespace mcs;

namespace {

IntervalInstance two(Point al, Point ar, Point bl, Point br) {
    return IntervalInstance({{1, 1, al, ar}, {2, 1, bl, br}});
}

}  // namespace

TEST(Normalize, RankOrder) {
    auto inst = normalize({{1, 1, 0.5, 2.5}, {2, 2, 1.0, 3.0}});
    EXPECT_EQ(inst.interval(0).left, 1);
    EXPECT_EQ(inst.interval(0).right, 3);
    EXPECT_EQ(inst.interval(1).left, 2);
    EXPECT_EQ(inst.interval(1).right, 4);
    EXPECT_EQ(inst.alpha(), 2);
}

TEST(Normalize, Idempotent) {
    std::vector<RawInterval> raw{{1, 1, 1, 4}, {2, 2, 2, 6}, {3, 1, 3, 5}};
    auto inst = normalize(raw);
    for (std::size_t v = 0; v < raw.size(); ++v) {
        EXPECT_EQ(inst.interval(v).left, raw[v].left);
        EXPECT_EQ(inst.interval(v).right, raw[v].right);
    }
}

TEST(Normalize, Errors) {
    EXPECT_THROW(normalize({{1, 1, 1.0, 2.0}, {2, 1, 1.0, 3.0}}), InputError);
    EXPECT_THROW(normalize({{1, 1, 2.0, 1.0}}), InputError);
    EXPECT_THROW(normalize({{1, 1, 1.0, 2.0}, {3, 1, 3.0, 4.0}}), InputError);
}

TEST(Instance, RejectsBadLayout) {
    EXPECT_THROW(IntervalInstance({{1, 1, 1, 3}, {2, 1, 2, 5}}), InputError);  // 5 > 2n
    EXPECT_THROW(IntervalInstance({{1, 1, 1, 3}, {2, 1, 3, 4}}), InputError);  // shared point
    EXPECT_THROW(IntervalInstance({{1, 1, 2, 1}}), InputError);
}

TEST(Instance, Owner) {
    auto inst = two(1, 3, 2, 4);
    EXPECT_EQ(inst.owner(1), 0u);
    EXPECT_EQ(inst.owner(2), 1u);
    EXPECT_TRUE(inst.is_left_endpoint(2));
    EXPECT_FALSE(inst.is_left_endpoint(3));
    EXPECT_EQ(inst.last_point(), 5);
    EXPECT_THROW(inst.check_bar({2, 2}), InputError);
    EXPECT_THROW(inst.check_bar({0, 6}), InputError);
}

TEST(OverlapGraph, Edges) {
    EXPECT_TRUE(overlap_graph(two(1, 3, 2, 4)).adjacent(0, 1));
    EXPECT_TRUE(overlap_graph(two(1, 4, 2, 3)).adjacent(0, 1));
    EXPECT_FALSE(overlap_graph(two(1, 2, 3, 4)).adjacent(0, 1));
}

TEST(BarSets, Examples) {
    auto inst = two(1, 3, 2, 4);
    for (Point i = 0; i < 5; ++i) {
        auto s = bar_sets(inst, {i, i + 1});
        EXPECT_TRUE(s.inside.empty());
        EXPECT_EQ(s.outside.size(), 2u);
    }
    auto whole = bar_sets(inst, {0, 5});
    EXPECT_EQ(whole.inside.size(), 2u);
    EXPECT_TRUE(whole.outside.empty());
    auto s = bar_sets(inst, {1, 4});
    EXPECT_EQ(s.inside, VertexSubset(2, {0, 1}));
    EXPECT_TRUE(s.outside.empty());
}

TEST(LeafBar, Examples) {
    auto inst = two(1, 3, 2, 4);
    for (Point i = 0; i < 5; ++i) EXPECT_TRUE(is_leaf_bar(inst, {i, i + 1}));
    EXPECT_FALSE(is_leaf_bar(inst, {0, 5}));
}

TEST(LeafBar, AgreesWithBfsOracle) {
    for (std::uint64_t seed = 1; seed <= 80; ++seed) {
        auto inst = random_interval_instance({3 + seed % 8, 1 + static_cast<int>(seed % 3), seed, true});
        auto m = oracle::interval_metric(inst);
        auto matrix = leaf_bar_matrix(inst);
        const Point last = inst.last_point();
        for (Point i = 0; i <= last; ++i)
            for (Point j = i + 1; j <= last; ++j) {
                const bool expect = oracle::leaf_bar(inst, m, i, j);
                ASSERT_EQ(is_leaf_bar(inst, {i, j}), expect) << "seed " << seed << " bar " << i << ".." << j;
                ASSERT_EQ(matrix(i, j), expect);
                auto s = bar_sets(inst, {i, j});
                auto o = oracle::bar_sets(inst, i, j);
                ASSERT_EQ(oracle::to_mask(s.inside), o.inside);
                ASSERT_EQ(oracle::to_mask(s.outside), o.outside);
            }
    }
}

TEST(LeafBarMatrix, Shape) {
    auto inst = random_interval_instance({7, 2, 11, true});
    auto m = leaf_bar_matrix(inst);
    const Point last = inst.last_point();
    EXPECT_EQ(m.points(), static_cast<std::size_t>(last) + 1);
    for (Point i = 0; i <= last; ++i) {
        if (i < last) EXPECT_TRUE(m(i, i + 1));
        for (Point j = 0; j <= i; ++j) EXPECT_FALSE(m(i, j));
    }
}

TEST(LeafBarMatrix, NotMonotoneInWidth) {
    bool witnessed = false;
    for (std::uint64_t seed = 1; seed <= 200 && !witnessed; ++seed) {
        auto inst = random_interval_instance({8, 2, seed, true});
        auto m = leaf_bar_matrix(inst);
        for (Point a = 0; a + 3 <= inst.last_point() && !witnessed; ++a)
            for (Point b = a + 2; b + 1 <= inst.last_point() && !witnessed; ++b)
                witnessed = m(a, b) && !m(a, b + 1);
    }
    EXPECT_TRUE(witnessed);
}
