#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <random>

#include "pokertopo/evaluator.hpp"
#include "pokertopo/evaluator_oracle.hpp"

using namespace pokertopo;

namespace {

HandValue r5(const char* s) { return rank5(cards_from_text(s)); }
HandValue r7(const char* s) { return rank7(cards_from_text(s)); }

std::array<Card, 7> random_hand(std::mt19937_64& rng) {
    std::array<int, 52> deck{};
    for (int i = 0; i < 52; ++i) deck[i] = i;
    std::array<Card, 7> out;
    for (int i = 0; i < 7; ++i) {
        std::uniform_int_distribution<int> pick(i, 51);
        std::swap(deck[i], deck[pick(rng)]);
        out[i] = Card::from_index(deck[i]);
    }
    return out;
}

std::uint64_t mask_of(std::span<const Card> cards) {
    std::uint64_t m = 0;
    for (const Card c : cards) m |= std::uint64_t{1} << c.index();
    return m;
}

}  // namespace

TEST(Rank5, RoyalFlushIsTheMaximum) {
    const auto royal = r5("AsKsQsJsTs");
    EXPECT_EQ(royal.category(), Category::StraightFlush);
    for (const char* other : {"KsQsJsTs9s", "AcAdAhAsKs", "5c4c3c2cAc"}) EXPECT_GT(royal, r5(other));
}

TEST(Rank5, WheelIsFiveHigh) {
    const auto wheel = r5("Ac2d3h4s5c");
    EXPECT_EQ(wheel.category(), Category::Straight);
    EXPECT_EQ(wheel.tiebreak(), std::vector<int>{5});
    EXPECT_LT(wheel, r5("2c3d4h5s6c"));
    EXPECT_GT(wheel, r5("AcAdAhKsQc"));
}

TEST(Rank5, OrderingEdgeCases) {
    EXPECT_GT(r5("2c2d3h3s4c"), r5("AcAdKhQsJc"));  // two pair over one pair
    EXPECT_GT(r5("AcAdKhKs3c"), r5("AcAdKhKs2c"));  // kicker decides
    EXPECT_EQ(r5("AcAdKhKs3c"), r5("AhAsKcKd3d"));  // suits never matter
    EXPECT_GT(r5("2c2d2h3s3c"), r5("AcKcQcJc9c"));  // full house over flush
    EXPECT_GT(r5("AcKcQcJc9c"), r5("AcKdQhJsTc"));  // flush over straight
    EXPECT_THROW(r5("AcAcKhQsJc"), std::invalid_argument);
}

TEST(Rank7, QuadsWithKingKicker) {
    const auto v = r7("AsAhAdAcKsKh2c");
    EXPECT_EQ(v.category(), Category::Quads);
    EXPECT_EQ(v.tiebreak(), (std::vector<int>{14, 13}));
}

TEST(Rank7, DirectedEdgeCasesAgreeWithOracle) {
    struct Case {
        const char* cards;
        Category category;
    };
    const Case cases[] = {
        {"Ac2d3h4s5c9dKh", Category::Straight},       {"Ac2c3c4c5cKdQh", Category::StraightFlush},
        {"5h6h7h8d9sAh2h", Category::Flush},          {"2c2d5h5s6c6dKh", Category::TwoPair},
        {"AcAdAhKcKdKh2c", Category::FullHouse},      {"2c3d4h5s6c7dKh", Category::Straight},
        {"9h8h7h6h5hThJd", Category::StraightFlush},  {"2c4d6h8sTcQdKh", Category::HighCard},
    };
    for (const auto& c : cases) {
        const auto cards = cards_from_text(c.cards);
        EXPECT_EQ(rank7(cards).category(), c.category) << c.cards;
        EXPECT_EQ(rank7(cards), oracle::rank7_oracle(cards)) << c.cards;
    }
    // Counterfeit: the board pair of sixes pushes the hole fives out of the kicker.
    EXPECT_EQ(r7("2c2d5h5s6c6dKh").tiebreak(), (std::vector<int>{6, 5, 13}));
}

TEST(Rank7, RandomDrawsAgreeWithOracleAndMaskPath) {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 20000; ++trial) {
        const auto hand = random_hand(rng);
        const auto fast = rank7(hand);
        ASSERT_EQ(fast, oracle::rank7_oracle(hand));
        ASSERT_EQ(fast, evaluate_mask(mask_of(hand)));
        SuitMasks sm;
        for (const Card c : hand) sm = sm.with(c.index());
        ASSERT_EQ(fast, evaluate(sm));
    }
}

TEST(Rank7, PermutationInvariance) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 2000; ++trial) {
        auto hand = random_hand(rng);
        const auto v = rank7(hand);
        std::shuffle(hand.begin(), hand.end(), rng);
        ASSERT_EQ(rank7(hand), v);
        std::array<Card, 5> five;
        std::copy_n(hand.begin(), 5, five.begin());
        const auto v5 = rank5(five);
        std::reverse(five.begin(), five.end());
        ASSERT_EQ(rank5(five), v5);
    }
}

TEST(Rank7, SuitInvariance) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 2000; ++trial) {
        const auto hand = random_hand(rng);
        const auto& sigma = SuitPermutation::all()[trial % 24];
        std::array<Card, 7> moved;
        std::transform(hand.begin(), hand.end(), moved.begin(), [&](Card c) { return sigma(c); });
        ASSERT_EQ(rank7(moved), rank7(hand));
    }
}

TEST(HandValue, PackingAndDescription) {
    const auto v = r5("KcKdKh2s2c");
    EXPECT_EQ(v.packed() >> 20, static_cast<std::uint32_t>(Category::FullHouse));
    EXPECT_EQ(HandValue(v.packed()), v);
    EXPECT_FALSE(v.describe().empty());
    EXPECT_STREQ(category_name(Category::StraightFlush), "straight-flush");
}
