#include <scurve/braid.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace scurve;

TEST(Blocks, FullTwistCounts) {
    EXPECT_EQ(full_twist_block(1, 3, -1, 2).size(), 12u);
    EXPECT_TRUE(full_twist_block(1, 1, -1, 5).empty());
    EXPECT_EQ(full_twist_block(1, 2, 1, 1), (std::vector<int>{1, 1}));
    auto w = braid_word{3, full_twist_block(1, 3, -1, 2)};
    EXPECT_EQ(crossing_counts(w), (crossing_counts_t{0, 12}));
    for (int k = 1; k <= 6; ++k)
        for (int q = 0; q <= 3; ++q) EXPECT_EQ(full_twist_block(2, k, 1, q).size(), static_cast<std::size_t>(q * k * (k - 1)));
}

TEST(Blocks, FullTwistIsPure) {
    for (int k = 1; k <= 7; ++k) {
        braid_word w{k + 1, full_twist_block(2, k, 1, 1)};
        auto perm = braid_permutation(w);
        for (int i = 0; i < k + 1; ++i) EXPECT_EQ(perm[i], i);
    }
}

TEST(Blocks, PassBlock) {
    EXPECT_EQ(pass_block(1, 1, 1, -1), (std::vector<int>{-1}));
    EXPECT_EQ(pass_block(1, 2, 3, -1).size(), 6u);
    EXPECT_EQ(pass_block(1, 3, 1, 1).size(), 3u);
    // the a-block ends up on the right, order preserved
    braid_word w{5, pass_block(1, 2, 3, 1)};
    EXPECT_EQ(braid_permutation(w), (std::vector<int>{3, 4, 0, 1, 2}));
}

TEST(Blocks, Cabled) {
    // sigma_1 cabled with widths (2,3) is a 2-over-3 pass
    EXPECT_EQ(cabled({1}, {2, 3}, 1), pass_block(1, 2, 3, 1));
    // cabling a full twist on 3 strands: all pairs of cables cross twice
    auto w = cabled(delta_power(1, 3, 3), {1, 2, 3}, 1);
    EXPECT_EQ(w.size(), static_cast<std::size_t>(2 * (1 * 2 + 1 * 3 + 2 * 3)));
}

TEST(Counts, Basic) {
    EXPECT_EQ(crossing_counts(braid_word{2, {1, 1, 1}}), (crossing_counts_t{3, 0}));
    EXPECT_EQ(crossing_counts(braid_word{2, {}}), (crossing_counts_t{0, 0}));
}

TEST(Components, Examples) {
    EXPECT_EQ(closure_components(braid_word{2, {1}}), 1);
    EXPECT_EQ(closure_components(braid_word{2, {1, 1}}), 2);
    EXPECT_EQ(closure_components(braid_word{3, {}}), 3);
}

TEST(Sign, Examples) {
    EXPECT_EQ(sign_definiteness(braid_word{3, {-1, -2}}), sign_class::negative);
    EXPECT_EQ(sign_definiteness(braid_word{3, {1, -2}}), sign_class::mixed);
    EXPECT_EQ(sign_definiteness(braid_word{3, {1, 2}}), sign_class::positive);
    EXPECT_EQ(sign_definiteness(braid_word{3, {}}), sign_class::empty);
}

TEST(Text, FormatAndParse) {
    EXPECT_EQ(to_text(braid_word{3, {1, -2, -2}}), "B3:1 -2 -2");
    EXPECT_EQ(to_text(braid_word{1, {}}), "B1:");
    EXPECT_EQ(parse_braid("B3:1 -2 -2"), (braid_word{3, {1, -2, -2}}));
    EXPECT_EQ(parse_braid("B1:"), (braid_word{1, {}}));
}

TEST(Text, ParseErrorsCarryPosition) {
    auto pos_of = [](const std::string& s) -> long {
        try {
            parse_braid(s);
        } catch (const parse_error& e) {
            return static_cast<long>(e.position);
        }
        return -1;
    };
    EXPECT_EQ(pos_of("X3:1"), 0);
    EXPECT_EQ(pos_of("B3;1"), 2);
    EXPECT_EQ(pos_of("B3:1 x"), 5);
    EXPECT_GE(pos_of("B3:1 3"), 5);
    EXPECT_GE(pos_of("B3:1 0"), 5);
    EXPECT_EQ(pos_of("B0:"), 1);
}

TEST(Text, RandomRoundTrip) {
    std::mt19937 rng(7);
    for (int it = 0; it < 500; ++it) {
        int s = 1 + static_cast<int>(rng() % 8);
        braid_word w{s, {}};
        if (s > 1)
            for (int k = static_cast<int>(rng() % 20); k > 0; --k) {
                int g = 1 + static_cast<int>(rng() % (s - 1));
                w.letters.push_back(rng() % 2 ? g : -g);
            }
        EXPECT_EQ(parse_braid(to_text(w)), w);
    }
}

TEST(Markov, ComponentsInvariant) {
    std::mt19937 rng(11);
    for (int it = 0; it < 1000; ++it) {
        int s = 2 + static_cast<int>(rng() % 5);
        braid_word w{s, {}};
        for (int k = static_cast<int>(rng() % 13); k > 0; --k) {
            int g = 1 + static_cast<int>(rng() % (s - 1));
            w.letters.push_back(rng() % 2 ? g : -g);
        }
        int g = 1 + static_cast<int>(rng() % (s - 1));
        const int c = closure_components(w);
        EXPECT_EQ(closure_components(conjugate(w, g)), c);
        EXPECT_EQ(closure_components(conjugate(w, -g)), c);
        EXPECT_EQ(closure_components(stabilize(w, 1)), c);
        EXPECT_EQ(closure_components(stabilize(w, -1)), c);
        EXPECT_EQ(closure_components(free_reduce(conjugate(w, g))), c);
    }
}

TEST(Counts, AdditiveUnderConcatenation) {
    std::mt19937 rng(3);
    for (int it = 0; it < 200; ++it) {
        braid_word a{4, {}}, b{4, {}};
        for (int k = static_cast<int>(rng() % 10); k > 0; --k) a.letters.push_back((rng() % 2 ? 1 : -1) * (1 + static_cast<int>(rng() % 3)));
        for (int k = static_cast<int>(rng() % 10); k > 0; --k) b.letters.push_back((rng() % 2 ? 1 : -1) * (1 + static_cast<int>(rng() % 3)));
        braid_word ab = a;
        ab.append(b.letters);
        auto ca = crossing_counts(a), cb = crossing_counts(b), cab = crossing_counts(ab);
        EXPECT_EQ(cab.k_plus, ca.k_plus + cb.k_plus);
        EXPECT_EQ(cab.k_minus, ca.k_minus + cb.k_minus);
    }
}

TEST(BraidWord, ValidatesLetters) {
    EXPECT_THROW((braid_word{2, {2}}), std::invalid_argument);
    EXPECT_THROW((braid_word{2, {0}}), std::invalid_argument);
    EXPECT_THROW((braid_word{0, {}}), std::invalid_argument);
}
