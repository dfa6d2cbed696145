#include <gtest/gtest.h>

#include <set>

#include "mcs/errors.hpp"
#include "mcs/gen.hpp"
#include "mcs/io.hpp"

using namespace mcs;

TEST(SeededRng, PublishedTestVector) {
    // The 10000th output of a default-seeded mt19937_64 is fixed by the C++ standard.
    SeededRng rng(5489);
    std::uint64_t v = 0;
    for (int i = 0; i < 10000; ++i) v = rng.next();
    EXPECT_EQ(v, 9981545732273789042ULL);
}

TEST(SeededRng, BelowStaysInRange) {
    SeededRng rng(3);
    std::vector<int> counts(7, 0);
    for (int i = 0; i < 7000; ++i) ++counts[rng.below(7)];
    for (int c : counts) EXPECT_GT(c, 800);
    EXPECT_THROW(rng.below(0), InputError);
    EXPECT_LT(rng.below(1), 1u);
}

TEST(Gen, SingleInterval) {
    for (std::uint64_t seed : {0ULL, 1ULL, 99ULL}) {
        auto inst = random_interval_instance({1, 1, seed, true});
        ASSERT_EQ(inst.size(), 1u);
        EXPECT_EQ(inst.interval(0).left, 1);
        EXPECT_EQ(inst.interval(0).right, 2);
        auto d = random_chord_diagram({1, 1, seed, true});
        EXPECT_EQ(d.chord(0).a, 1);
        EXPECT_EQ(d.chord(0).b, 2);
    }
}

TEST(Gen, Deterministic) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        GenConfig cfg{12, 3, seed, true};
        EXPECT_EQ(format_interval_instance(random_interval_instance(cfg)),
                  format_interval_instance(random_interval_instance(cfg)));
        EXPECT_EQ(format_chords(random_chord_diagram(cfg)), format_chords(random_chord_diagram(cfg)));
    }
    EXPECT_NE(format_interval_instance(random_interval_instance({12, 3, 1, true})),
              format_interval_instance(random_interval_instance({12, 3, 2, true})));
}

TEST(Gen, Errors) {
    EXPECT_THROW(random_interval_instance({3, 4, 1, true}), InputError);
    EXPECT_THROW(random_interval_instance({0, 1, 1, true}), InputError);
    EXPECT_THROW(random_chord_diagram({2, 0, 1, true}), InputError);
}

TEST(Gen, IntervalAudit) {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const int alpha = 1 + static_cast<int>(seed % 4);
        auto inst = random_interval_instance({10, alpha, seed, true});
        ASSERT_TRUE(inst.graph().connected()) << "seed " << seed;
        ASSERT_EQ(inst.alpha(), alpha);
        ASSERT_EQ(colors_of(inst.graph(), inst.graph().all_vertices()).size(), static_cast<std::size_t>(alpha));
    }
}

TEST(Gen, ChordAudit) {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        auto d = random_chord_diagram({8, 2, seed, true});
        auto g = circle_graph(d);
        ASSERT_TRUE(g.connected()) << "seed " << seed;
        ASSERT_EQ(g.alpha(), 2);
    }
}

TEST(Gen, UnconnectedAllowed) {
    bool disconnected = false;
    for (std::uint64_t seed = 0; seed < 200 && !disconnected; ++seed)
        disconnected = !random_interval_instance({10, 1, seed, false}).graph().connected();
    EXPECT_TRUE(disconnected);
}
