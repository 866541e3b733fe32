#include <gtest/gtest.h>

#include <random>
#include <set>

#include "pokertopo/cards.hpp"
#include "pokertopo/equity.hpp"

using namespace pokertopo;

TEST(Card, ParsesLowestAndHighest) {
    const Card two = card_from_text("2c");
    EXPECT_EQ(two.rank(), 2);
    EXPECT_EQ(two.suit(), 0);
    EXPECT_EQ(two.index(), 0);
    const Card ace = card_from_text("As");
    EXPECT_EQ(ace.rank(), 14);
    EXPECT_EQ(ace.suit(), 3);
    EXPECT_EQ(ace.index(), 51);
}

TEST(Card, RejectsGarbage) {
    EXPECT_THROW(card_from_text("1x"), ParseError);
    EXPECT_THROW(card_from_text("A"), ParseError);
    EXPECT_THROW(card_from_text("Ax"), ParseError);
    EXPECT_THROW(card_from_text("Zs"), ParseError);
}

TEST(Card, TextRoundTripsForEveryIndex) {
    for (int i = 0; i < kNumCards; ++i) {
        const Card c = Card::from_index(i);
        EXPECT_EQ(card_from_text(c.text()), c);
        EXPECT_EQ(c.index(), 4 * (c.rank() - 2) + c.suit());
    }
}

TEST(HolePair, ColexIndex) {
    EXPECT_EQ(pair_index(HolePair(Card::from_index(0), Card::from_index(1))), 0);
    EXPECT_EQ(pair_index(HolePair(Card::from_index(50), Card::from_index(51))), 1325);
    EXPECT_EQ(pair_index(HolePair(Card::from_index(0), Card::from_index(2))), 1);
}

TEST(HolePair, IndexIsABijection) {
    std::set<int> seen;
    for (int i = 0; i < kNumPairs; ++i) {
        const auto p = HolePair::from_index(i);
        EXPECT_EQ(p.index(), i);
        EXPECT_LT(p.lo().index(), p.hi().index());
        seen.insert(p.index());
    }
    EXPECT_EQ(seen.size(), 1326u);
}

TEST(HolePair, ParsingForms) {
    const auto p = pair_from_text("AsKh");
    EXPECT_EQ(pair_from_text("As Kh"), p);
    EXPECT_EQ(pair_from_text("KhAs"), p);
    EXPECT_EQ(pair_from_text(std::to_string(p.index())), p);
    EXPECT_EQ(p.text(), "As Kh");
    EXPECT_EQ(p.compact_text(), "AsKh");
    EXPECT_THROW(pair_from_text("AsAs"), ParseError);
    EXPECT_THROW(pair_from_text("1326"), ParseError);
    EXPECT_THROW(pair_from_text("As"), ParseError);
    const auto list = pairs_from_list("Ac2c, 3c5c 2d2h");
    ASSERT_EQ(list.size(), 3u);
    EXPECT_EQ(pair_label(list[1]), "5c3c");
}

TEST(SuitPermutation, Examples) {
    const auto a2 = pair_from_text("Ac2c");
    EXPECT_EQ(apply_suit_permutation(a2, SuitPermutation()), a2);
    EXPECT_EQ(apply_suit_permutation(a2, SuitPermutation::swap(0, 1)), pair_from_text("Ad2d"));
    const auto aa = pair_from_text("AcAd");
    EXPECT_EQ(apply_suit_permutation(aa, SuitPermutation::swap(0, 1)), aa);
}

TEST(SuitPermutation, GroupStructure) {
    const auto& all = SuitPermutation::all();
    EXPECT_EQ(all[0], SuitPermutation());
    std::set<std::array<int, 4>> distinct;
    for (const auto& s : all) {
        distinct.insert(s.images());
        EXPECT_EQ(s.compose(s.inverse()), SuitPermutation());
        for (const auto& t : all) {
            const auto st = s.compose(t);
            for (int suit = 0; suit < 4; ++suit) EXPECT_EQ(st(suit), s(t(suit)));
        }
    }
    EXPECT_EQ(distinct.size(), 24u);
}

TEST(CanonicalMatchup, ExamplesAndWitness) {
    const auto a = pair_from_text("Ac2c"), b = pair_from_text("3c5c");
    const auto c = canonical_matchup(a, b);
    EXPECT_EQ(c.a, a);
    EXPECT_EQ(c.b, b);
    EXPECT_EQ(c.witness, SuitPermutation());

    const auto h = canonical_matchup(pair_from_text("Ah2h"), pair_from_text("3h5h"));
    EXPECT_EQ(h.a, c.a);
    EXPECT_EQ(h.b, c.b);
    EXPECT_EQ(apply_suit_permutation(pair_from_text("Ah2h"), h.witness), h.a);
    EXPECT_THROW(canonical_matchup(pair_from_text("AcKd"), pair_from_text("AcQd")), std::invalid_argument);
}

TEST(CanonicalMatchup, InvariantUnderSimultaneousRelabeling) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> pick(0, kNumPairs - 1);
    for (int k = 0; k < 2000;) {
        const auto a = HolePair::from_index(pick(rng)), b = HolePair::from_index(pick(rng));
        if (a.overlaps(b)) continue;
        ++k;
        const auto base = canonical_matchup(a, b);
        EXPECT_EQ(apply_suit_permutation(a, base.witness), base.a);
        EXPECT_EQ(apply_suit_permutation(b, base.witness), base.b);
        const auto& s = SuitPermutation::all()[static_cast<std::size_t>(k % 24)];
        const auto moved = canonical_matchup(apply_suit_permutation(a, s), apply_suit_permutation(b, s));
        EXPECT_EQ(moved.a, base.a);
        EXPECT_EQ(moved.b, base.b);
    }
}

// Burnside over the 24 suit permutations: the number of orbits of ordered
// disjoint matchups is the mean number of matchups fixed by a permutation.
// This shares no code with the canonicalizer.
TEST(CanonicalMatchup, ClassCountMatchesBurnside) {
    std::uint64_t fixed_total = 0;
    for (const auto& s : SuitPermutation::all()) {
        for (int i = 0; i < kNumPairs; ++i) {
            const auto a = HolePair::from_index(i);
            if (apply_suit_permutation(a, s) != a) continue;
            for (int j = 0; j < kNumPairs; ++j) {
                const auto b = HolePair::from_index(j);
                if (!a.overlaps(b) && apply_suit_permutation(b, s) == b) ++fixed_total;
            }
        }
    }
    ASSERT_EQ(fixed_total % 24, 0u);
    EXPECT_EQ(count_matchup_classes(), fixed_total / 24);
    EXPECT_EQ(count_matchup_classes(), 93769u);
}
