#include <gtest/gtest.h>

#include "mcs/acs.hpp"
#include "mcs/errors.hpp"
#include "mcs/gen.hpp"
#include "support/oracles.hpp"

using namespace mcs;

TEST(Acs, SingleInterval) {
    IntervalInstance inst({{1, 1, 1, 2}});
    auto r = approximation_report(inst, true);
    EXPECT_EQ(r.acs, VertexSubset(1, {0}));
    EXPECT_EQ(*r.exact_size, 1u);
    EXPECT_DOUBLE_EQ(*r.achieved_ratio(), 1.0);
    EXPECT_EQ(r.ratio_bound(), 6);
}

TEST(Acs, Monochromatic) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto inst = random_interval_instance({8, 1, seed, true});
        auto r = approximation_report(inst, true);
        EXPECT_EQ(*r.exact_size, 1u);
        EXPECT_LE(r.acs.size(), 2 * r.bar_count);
        EXPECT_LE(*r.achieved_ratio(), 6.0);
        EXPECT_TRUE(is_consistent_subset(inst.graph(), r.acs));
    }
}

TEST(Acs, BicoloredTenApproximation) {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        auto inst = random_interval_instance({4 + seed % 9, 2, seed, true});
        auto r = approximation_report(inst, true);
        auto m = oracle::interval_metric(inst);
        ASSERT_TRUE(oracle::consistent(m, oracle::to_mask(r.acs)));
        ASSERT_EQ(static_cast<int>(*r.exact_size), oracle::mcs_size(m));
        if (r.repair_added == 0) ASSERT_LE(r.acs.size(), 10 * *r.exact_size) << "seed " << seed;
        ASSERT_LE(r.acs.size() - r.repair_added, 4 * r.bar_count);
    }
}

TEST(Acs, AlwaysConsistent) {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        const std::size_t n = 1 + seed % 20;
        const int alpha = 1 + static_cast<int>(seed % std::min<std::size_t>(4, n));
        auto inst = random_interval_instance({n, alpha, seed, true});
        auto r = approximate_consistent_subset(inst);
        ASSERT_TRUE(is_consistent_subset(inst.graph(), r.acs));
        ASSERT_FALSE(r.degraded);
    }
}

TEST(Acs, DegradedMode) {
    auto inst = random_interval_instance({12, 3, 9, true});
    AcsOptions opts;
    opts.cover.state_budget = 1;
    opts.cover.allow_fallback = false;
    auto r = approximate_consistent_subset(inst, opts);
    EXPECT_TRUE(r.degraded);
    EXPECT_FALSE(r.certified());
    EXPECT_EQ(r.bar_count, 0u);
    EXPECT_EQ(r.acs, VertexSubset::full(12));
    EXPECT_TRUE(is_consistent_subset(inst.graph(), r.acs));
}

TEST(Acs, Errors) {
    IntervalInstance split({{1, 1, 1, 2}, {2, 1, 3, 4}});
    EXPECT_THROW(approximate_consistent_subset(split), DisconnectedError);
    auto big = random_interval_instance({21, 2, 1, true});
    EXPECT_THROW(approximation_report(big, true), SizeError);
    EXPECT_NO_THROW(approximation_report(big, false));
}
